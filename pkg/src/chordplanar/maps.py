"""Rooted simple chordal planar maps, counted by edges.

A 2-connected map is a sequence of pieces: a rooted triangle whose two other
sides carry maps, or a stacked triangulation with a map on both sides of each
edge.  With ``z`` marking edges minus one this reads

    D = 1 / (1 - z^2 D^4 (1 + S(z^3 D^6)))

and ``B = z D`` counts by total edges.  General maps attach a (possibly empty)
map at each corner of their 2-connected core: ``M = B(z (1 + M)^2)``.
"""
from __future__ import annotations

import enum
from functools import lru_cache

from .graphs import CountTable
from .series import SeriesError, TruncatedSeries, solve_newton

DEFAULT_ORDER = 64

# Annihilating polynomials, as {(z-exponent, w-exponent): coefficient}.
P_B_TERMS = {
    (0, 9): 1, (2, 5): -1, (3, 4): 1, (3, 3): 1,
    (4, 2): -3, (5, 1): 3, (6, 0): -1,
}


def _m_terms() -> dict:
    # rows: power of M -> ascending z coefficients
    rows = {
        12: [0, 0, 0, 0, 0, 0, 1],
        11: [0, 0, 0, 0, 0, -3, 12],
        10: [0, 0, 0, -1, 3, -30, 66],
        9: [-1, 0, 1, -7, 24, -135, 220],
        8: [0, 0, 4, -21, 84, -360, 495],
        7: [0, 0, 6, -35, 168, -630, 792],
        6: [0, 0, 4, -35, 210, -756, 924],
        5: [0, 0, 1, -21, 168, -630, 792],
        4: [0, 0, 0, -7, 84, -360, 495],
        3: [0, 0, 0, -1, 24, -135, 220],
        2: [0, 0, 0, 0, 3, -30, 66],
        1: [0, 0, 0, 0, 0, -3, 12],
        0: [0, 0, 0, 0, 0, 0, 1],
    }
    return {(i, j): c for j, row in rows.items() for i, c in enumerate(row) if c}


P_M_TERMS = _m_terms()

# Published factors of the two discriminants, ascending in z.
DISC_B_FACTOR = [-135424, 3326272, -15907392, -81168524, 184705272,
                 573956280, 387420489]
DISC_M_FACTOR = [3656448, -148471488, 1812419712, -5212588972, -13112588384,
                 60575733276, -301902286683, 1275725763644, -3620212090976,
                 1262789263168, 6474387490048, -2215690119168, 2035256037376]


class MapFamily(enum.Enum):
    TWO_CONNECTED_MAPS = "two_connected_maps"
    ALL_MAPS = "all_maps"


_ALIASES = {
    "maps": MapFamily.ALL_MAPS, "all_maps": MapFamily.ALL_MAPS,
    "2conn-maps": MapFamily.TWO_CONNECTED_MAPS,
    "two_connected_maps": MapFamily.TWO_CONNECTED_MAPS,
}


def map_family(tag) -> MapFamily:
    if isinstance(tag, MapFamily):
        return tag
    try:
        return _ALIASES[tag]
    except KeyError:
        raise ValueError(f"unknown map family {tag!r}") from None


def _core_phi(state):
    d, sigma = state
    z2 = TruncatedSeries.var(d.order) ** 2
    d2 = d * d
    d3 = d2 * d
    one_s = 1 + sigma
    return (1 / (1 - z2 * d2 * d2 * one_s),
            (z2 * d3 * d3).shift(1) * one_s ** 3)


def _core_jacobian(state):
    d, sigma = state
    z2 = TruncatedSeries.var(d.order) ** 2
    d2 = d * d
    d3 = d2 * d
    one_s = 1 + sigma
    new_d = 1 / (1 - z2 * d2 * d2 * one_s)
    nd2 = new_d * new_d
    z3d5 = (z2 * d3 * d2).shift(1)
    return [[4 * nd2 * z2 * d3 * one_s, nd2 * z2 * d2 * d2],
            [6 * z3d5 * one_s ** 3, 3 * z3d5 * d * one_s * one_s]]


@lru_cache(maxsize=None)
def map_core_system(order: int):
    """``(D, sigma)`` with ``sigma = S(z^3 D^6)`` carried as a second unknown."""
    return solve_newton(_core_phi, _core_jacobian, order, (1, 0))


def map_core_series(order: int) -> TruncatedSeries:
    """The series ``D``; ``z`` marks edges minus one."""
    return map_core_system(order)[0]


def two_connected_maps_series(order: int) -> TruncatedSeries:
    """``B = z D``: 2-connected maps by total number of edges."""
    if order < 1:
        raise SeriesError("order must be at least 1")
    return map_core_series(order - 1).with_order(order).shift(1)


@lru_cache(maxsize=None)
def all_maps_series(order: int) -> TruncatedSeries:
    """Solve ``M = B(z (1 + M)^2)``."""
    b = two_connected_maps_series(order)
    b_prime = b.derivative()

    def inner(m):
        one_m = 1 + m
        return TruncatedSeries.var(m.order) * one_m * one_m

    def phi(m):
        return b.with_order(m.order).compose(inner(m))

    def jac(m):
        w = inner(m)
        return b_prime.with_order(m.order).compose(w) * 2 * TruncatedSeries.var(m.order) * (1 + m)

    return solve_newton(phi, jac, order, 0)


def map_sequence(family, order: int) -> list[int]:
    family = map_family(family)
    if family is MapFamily.ALL_MAPS:
        return all_maps_series(order).ogf_counts()
    return two_connected_maps_series(order).ogf_counts()


def map_count_table(family, n_max: int, order: int = DEFAULT_ORDER) -> CountTable:
    """Counts for ``n = 1..n_max`` edges."""
    family = map_family(family)
    if n_max > order:
        raise SeriesError(f"n_max={n_max} exceeds truncation order {order}")
    seq = map_sequence(family, order)
    return CountTable(family.value, [(n, seq[n]) for n in range(1, n_max + 1)])
