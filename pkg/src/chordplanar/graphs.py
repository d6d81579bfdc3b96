"""Generating functions of labelled chordal planar graphs.

The pipeline climbs the connectivity ladder:

    ternary trees S  ->  rooted / unrooted stacked triangulations T, U
                     ->  networks E(x, y)
                     ->  2-connected B  ->  vertex-rooted connected C*
                     ->  connected C = int C*/x  ->  all graphs G = exp(C)

``x`` marks vertices (exponential generating functions) and ``y`` marks edges.
Everything is exact.  The ``S(x E^3)`` substitution is carried as a second
unknown ``sigma`` of the network system (``sigma = x E^3 (1 + sigma)^3``)
rather than as a composition, which keeps each fixed-point pass to a handful
of products.
"""
from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial

from flint import fmpq_poly

from .series import (BivariateSeries, SeriesError, TruncatedSeries, derivative_x,
                     solve_fixed_point, solve_newton)

DEFAULT_ORDER = 64


class GraphFamily(enum.Enum):
    ALL = "all"
    CONNECTED = "connected"
    TWO_CONNECTED = "two_connected"
    THREE_CONNECTED = "three_connected"
    TRIANGULATIONS_UNROOTED = "triangulations_unrooted"
    NETWORKS = "networks"


@dataclass(frozen=True)
class CountTable:
    family: str
    rows: list = field(default_factory=list)

    def counts(self) -> list[int]:
        return [c for _, c in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "count"])
        w.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"family": self.family,
                           "rows": [{"n": n, "count": c} for n, c in self.rows]},
                          indent=2)


# -- 3-connected layer ------------------------------------------------------

@lru_cache(maxsize=None)
def ternary_series(order: int) -> TruncatedSeries:
    """Ternary trees rooted at a leaf, ``S = z (1 + S)^3``; z marks internal nodes."""
    z = TruncatedSeries.var
    return solve_fixed_point(lambda s: z(s.order) * (1 + s) ** 3, order, 0)


def rooted_triangulation_series(order: int) -> TruncatedSeries:
    """``T = z S / 2``: stacked triangulations rooted at a directed edge."""
    return ternary_series(order).shift(1) / 2


def unrooted_triangulation_series(order: int) -> TruncatedSeries:
    """``U = z^3/24 (S - S^2)``; ``n! [z^n] U`` counts labelled stacked triangulations."""
    s = ternary_series(order)
    return (s - s * s).shift(3) / 24


def count_3connected(n: int) -> int:
    """Closed form ``binom(n,3) (3n-9)! / (2n-4)!`` for 3-connected chordal planar graphs."""
    if n < 4:
        raise ValueError("3-connected graphs need at least 4 vertices")
    num = comb(n, 3) * factorial(3 * n - 9)
    q, r = divmod(num, factorial(2 * n - 4))
    assert r == 0
    return q


# -- networks and 2-connected graphs --------------------------------------

def _network_phi(state):
    e, sigma = state
    if isinstance(e, BivariateSeries):
        xe2 = (e * e).shift_x(1)
        one_s = 1 + sigma
        new_sigma = (xe2 * e) * (one_s * one_s * one_s)
        return (xe2 * (1 + sigma / 2)).exp_xy().mul_y(), new_sigma
    xe2 = (e * e).shift(1)
    new_sigma = (xe2 * e) * (1 + sigma) ** 3
    return (xe2 * (1 + sigma / 2)).exp(), new_sigma


def _network_jacobian(state):
    e, sigma = state
    if isinstance(e, BivariateSeries):
        xe = e.shift_x(1)
        new_e = (xe * e * (1 + sigma / 2)).exp_xy().mul_y()
    else:
        xe = e.shift(1)
        new_e = (xe * e * (1 + sigma / 2)).exp()
    xe2 = xe * e
    one_s = 1 + sigma
    one_s2 = one_s * one_s
    return [[new_e * xe * (2 + sigma), new_e * xe2 / 2],
            [3 * xe2 * one_s2 * one_s, 3 * xe2 * e * one_s2]]


@lru_cache(maxsize=None)
def network_system(order: int, bivariate: bool = True, method: str = "newton"):
    """Solve ``E = y exp(x E^2 (1 + sigma/2))``, ``sigma = x E^3 (1 + sigma)^3``.

    ``sigma`` equals ``S(x E^3)``, and ``x E^2 sigma / 2 = T(x E^3) / E``.
    With ``bivariate=False`` the edge variable is set to 1.  ``method`` picks
    Newton iteration (default) or plain substitution ("fixed_point").
    """
    seed = (fmpq_poly([0, 1]), fmpq_poly([])) if bivariate else (1, 0)
    if method == "newton":
        return solve_newton(_network_phi, _network_jacobian, order, seed)
    if method == "fixed_point":
        return solve_fixed_point(_network_phi, order, seed)
    raise ValueError(f"unknown method {method!r}")


def network_series(order: int) -> BivariateSeries:
    return network_system(order, True)[0]


def two_connected_series_closed(order: int) -> TruncatedSeries:
    """2-connected graphs at ``y = 1`` from the dissymmetry closed form

    ``B = x^2/2 (E - x E^3/12 (s^2 + 5 s + 8))`` with ``s = S(x E^3)``.
    """
    return _b_closed(order)


@lru_cache(maxsize=None)
def _b_closed(order: int) -> TruncatedSeries:
    e, s = network_system(order, False)
    x = TruncatedSeries.var(order)
    inner = e - x * e ** 3 * (s * s + 5 * s + 8) / 12
    return inner.shift(2) / 2


@lru_cache(maxsize=None)
def two_connected_series_bivariate(order: int) -> BivariateSeries:
    """``B(x, y) = x^2/2 * int_0^y E(x, t)/t dt`` (unrooting the root edge)."""
    e = network_series(order)
    return e.divide_by_y().integrate_y().shift_x(2) * Fraction(1, 2)


# -- connected and arbitrary graphs -----------------------------------------

def _pointed_solver(b_prime, order):
    b_second = derivative_x(b_prime)
    if isinstance(b_prime, BivariateSeries):
        def phi(c):
            k = c.order
            return BivariateSeries.x(k) * b_prime.with_order(k).compose_x(c).exp_xy()

        def jac(c):
            return phi(c) * b_second.with_order(c.order).compose_x(c)
        seed = fmpq_poly([])
    else:
        def phi(c):
            k = c.order
            return TruncatedSeries.var(k) * b_prime.with_order(k).compose(c).exp()

        def jac(c):
            return phi(c) * b_second.with_order(c.order).compose(c)
        seed = 0
    return solve_newton(phi, jac, order, seed)


@lru_cache(maxsize=None)
def connected_pointed_series(order: int, bivariate: bool = True):
    """Vertex-rooted connected graphs: ``C* = x exp(B_x(C*, y))``."""
    if bivariate:
        b = two_connected_series_bivariate(order + 1)
    else:
        b = two_connected_series_closed(order + 1)
    b_prime = derivative_x(b)
    return _pointed_solver(b_prime, order)


@lru_cache(maxsize=None)
def connected_series(order: int, bivariate: bool = True):
    """``C = int C*/x dx``."""
    cp = connected_pointed_series(order, bivariate)
    if bivariate:
        return cp.divide_by_x().integrate_x()
    return cp.divide_by_z().integrate()


@lru_cache(maxsize=None)
def all_graphs_series(order: int, bivariate: bool = True):
    """``G = exp(C)``."""
    c = connected_series(order, bivariate)
    return c.exp_xy() if bivariate else c.exp()


# -- tables ---------------------------------------------------------------

_ALIASES = {
    "all": GraphFamily.ALL, "g": GraphFamily.ALL,
    "connected": GraphFamily.CONNECTED, "c": GraphFamily.CONNECTED,
    "2conn": GraphFamily.TWO_CONNECTED, "two_connected": GraphFamily.TWO_CONNECTED,
    "3conn": GraphFamily.THREE_CONNECTED, "three_connected": GraphFamily.THREE_CONNECTED,
    "triangulations": GraphFamily.TRIANGULATIONS_UNROOTED,
    "triangulations_unrooted": GraphFamily.TRIANGULATIONS_UNROOTED,
    "networks": GraphFamily.NETWORKS,
}


def graph_family(tag) -> GraphFamily:
    if isinstance(tag, GraphFamily):
        return tag
    try:
        return _ALIASES[tag]
    except KeyError:
        raise ValueError(f"unknown graph family {tag!r}") from None


def egf_sequence(family, order: int) -> list[int]:
    """``n! [x^n]`` of the family's EGF at ``y = 1`` for ``n = 0..order``."""
    family = graph_family(family)
    if family is GraphFamily.ALL:
        s = all_graphs_series(order, False)
    elif family is GraphFamily.CONNECTED:
        s = connected_series(order, False)
    elif family is GraphFamily.TWO_CONNECTED:
        s = two_connected_series_closed(order)
    elif family is GraphFamily.TRIANGULATIONS_UNROOTED:
        s = unrooted_triangulation_series(order)
    elif family is GraphFamily.NETWORKS:
        s = network_system(order, False)[0]
    else:
        return [0, 0, 0, 0] + [count_3connected(n) for n in range(4, order + 1)]
    return s.egf_counts()


def count_table(family, n_max: int, order: int = DEFAULT_ORDER) -> CountTable:
    """Exact counts for ``n = 1..n_max`` (``n = 4..n_max`` for 3-connected families)."""
    family = graph_family(family)
    if n_max > order:
        raise SeriesError(f"n_max={n_max} exceeds truncation order {order}")
    start = 4 if family in (GraphFamily.THREE_CONNECTED,
                            GraphFamily.TRIANGULATIONS_UNROOTED) else 1
    if family is GraphFamily.THREE_CONNECTED:
        rows = [(n, count_3connected(n)) for n in range(start, n_max + 1)]
    else:
        seq = egf_sequence(family, order)
        rows = [(n, seq[n]) for n in range(start, n_max + 1)]
    return CountTable(family.value, rows)
