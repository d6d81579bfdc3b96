"""Singular expansions and the named asymptotic constants.

Graph side: the network system

    F = exp(x (1+F)^2 (1 + S/2)) - 1,      S = x (1+F)^3 (1+S)^3

has a square-root branch point at ``rho_b``.  Eliminating ``S`` (the lower
root of ``S = w (1+S)^3``, ``w = x (1+F)^3``) gives ``F = Theta(x, F)``; at the
branch point ``d/dF (Theta - F) = 0``.  Local expansions are carried as
truncated series in ``X = sqrt(1 - x/rho)`` with multiprecision coefficients.

Map side: the branch point of an algebraic curve ``p(z, y) = 0`` reached by
continuation from the counting branch.

All routines take ``precision_bits`` and work inside ``mpmath.workprec``.
"""
from __future__ import annotations

import json
from fractions import Fraction
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import mpmath
from mpmath import mpf

DEFAULT_PRECISION = int(os.environ.get("CHORDPLANAR_PRECISION", "256"))
EXPANSION_ORDER = 4


class SingularityError(RuntimeError):
    pass


@dataclass(frozen=True)
class HPReal:
    """A multiprecision value with the working precision it was computed at."""
    value: mpf
    precision_bits: int

    def __float__(self) -> float:
        return float(self.value)

    @property
    def digits(self) -> int:
        # claim at most half the working bits
        return max(1, int(self.precision_bits * 0.30103 / 2))

    def __str__(self) -> str:
        return mpmath.nstr(self.value, self.digits)

    def to_json(self) -> str:
        return str(self)


# -- truncated local series -------------------------------------------------

class LocalSeries:
    """Truncated power series with multiprecision coefficients (fixed length)."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence):
        self.c = [mpf(v) for v in coeffs]

    @classmethod
    def constant(cls, v, n: int) -> "LocalSeries":
        return cls([v] + [0] * n)

    @classmethod
    def var(cls, n: int, scale=1, shift=0) -> "LocalSeries":
        return cls(([shift, scale] + [0] * (n - 1))[:n + 1])

    @property
    def n(self) -> int:
        return len(self.c) - 1

    def __getitem__(self, k: int):
        return self.c[k] if k < len(self.c) else mpf(0)

    def with_coeff(self, k: int, v) -> "LocalSeries":
        c = list(self.c)
        c[k] = mpf(v)
        return LocalSeries(c)

    def __repr__(self) -> str:
        return "LocalSeries([" + ", ".join(mpmath.nstr(v, 8) for v in self.c) + "])"

    def _co(self, other) -> "LocalSeries":
        if isinstance(other, LocalSeries):
            return other
        return LocalSeries.constant(other, self.n)

    def __add__(self, other):
        o = self._co(other)
        return LocalSeries([a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return LocalSeries([-a for a in self.c])

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) - self

    def __mul__(self, other):
        if not isinstance(other, LocalSeries):
            return LocalSeries([a * other for a in self.c])
        n = self.n
        a, b = self.c, other.c
        return LocalSeries([mpmath.fsum(a[i] * b[k - i] for i in range(k + 1))
                            for k in range(n + 1)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, LocalSeries):
            return LocalSeries([a / other for a in self.c])
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, e: int):
        out = LocalSeries.constant(1, self.n)
        for _ in range(e):
            out = out * self
        return out

    def reciprocal(self) -> "LocalSeries":
        a = self.c
        if a[0] == 0:
            raise ZeroDivisionError("reciprocal of a series without constant term")
        r = [1 / a[0]]
        for k in range(1, self.n + 1):
            r.append(-mpmath.fsum(a[i] * r[k - i] for i in range(1, k + 1)) / a[0])
        return LocalSeries(r)

    def exp(self) -> "LocalSeries":
        a = self.c
        e = [mpmath.exp(a[0])]
        for k in range(1, self.n + 1):
            e.append(mpmath.fsum(i * a[i] * e[k - i] for i in range(1, k + 1)) / k)
        return LocalSeries(e)

    def log(self) -> "LocalSeries":
        a = self.c
        out = [mpmath.log(a[0])]
        # k a_0 l_k = k a_k - sum_{i<k} i l_i a_{k-i}
        for k in range(1, self.n + 1):
            s = k * a[k] - mpmath.fsum(i * out[i] * a[k - i] for i in range(1, k))
            out.append(s / (k * a[0]))
        return LocalSeries(out)

    def __call__(self, t):
        acc = mpf(0)
        for v in reversed(self.c):
            acc = acc * t + v
        return acc


def _fill(unknowns: list, residual: Callable, orders, lag: int = 0) -> list:
    """Fix coefficients ``k in orders`` of ``unknowns`` one order at a time.

    Coefficient ``k`` must enter ``[X^(k+lag)]`` of the residual affinely; it
    is found from one base evaluation plus one probe per unknown.
    """
    m = len(unknowns)
    for k in orders:
        def probe(vals):
            us = [u.with_coeff(k, v) for u, v in zip(unknowns, vals)]
            return [r[k + lag] for r in residual(us)]
        base = probe([0] * m)
        a = mpmath.matrix(m, m)
        for j in range(m):
            col = probe([1 if i == j else 0 for i in range(m)])
            for i in range(m):
                a[i, j] = col[i] - base[i]
        sol = mpmath.lu_solve(a, mpmath.matrix([-b for b in base]))
        unknowns = [u.with_coeff(k, sol[i]) for i, u in enumerate(unknowns)]
    return unknowns


@dataclass(frozen=True)
class BranchExpansion:
    """``a_0 + a_1 X + a_2 X^2 + ...`` with ``X = sqrt(1 - z/location)``."""
    location: mpf
    coeffs: tuple
    precision_bits: int = DEFAULT_PRECISION

    def __post_init__(self):
        if len(self.coeffs) < 4:
            raise ValueError("a branch expansion needs at least four coefficients")

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def X(self, z):
        return mpmath.sqrt(1 - mpf(z) / self.location)

    def __call__(self, z):
        with mpmath.workprec(self.precision_bits):
            x = self.X(z)
            return mpmath.fsum(a * x ** k for k, a in enumerate(self.coeffs))

    def to_json(self) -> dict:
        d = max(1, int(self.precision_bits * 0.30103 / 2))
        return {"location": mpmath.nstr(self.location, d),
                "coefficients": [mpmath.nstr(a, d) for a in self.coeffs]}


# -- ternary trees and the eliminated network map ---------------------------

def ternary_value(w):
    """Lower root of ``s = w (1+s)^3`` for ``0 <= w <= 4/27`` (Newton from 0)."""
    w = mpf(w)
    if w < 0 or w > mpf(4) / 27:
        raise SingularityError(f"w = {mpmath.nstr(w, 8)} outside [0, 4/27]")
    s = mpf(0)
    tol = mpmath.eps * 8
    for _ in range(mpmath.mp.prec * 2):
        q = 1 + s
        g = w * q ** 3 - s
        dg = 3 * w * q ** 2 - 1
        if dg == 0:
            break
        step = g / dg
        s -= step
        if abs(step) <= tol * (1 + abs(s)):
            break
    return s


def _ternary_series(w: LocalSeries) -> LocalSeries:
    s0 = ternary_value(w[0])
    start = LocalSeries.constant(s0, w.n)
    (s,) = _fill([start], lambda u: [u[0] - w * (1 + u[0]) ** 3], range(1, w.n + 1))
    return s


def theta(x, f):
    """``Theta(x, F)``: the network map after eliminating ``S``."""
    e = 1 + mpf(f)
    s = ternary_value(x * e ** 3)
    return mpmath.exp(x * e ** 2 * (1 + s / 2)) - 1


def theta_derivatives(x, f) -> tuple:
    """``(Theta_x, Theta_F, Theta_FF)`` by implicit differentiation through ``S(w)``."""
    x, e = mpf(x), 1 + mpf(f)
    w = x * e ** 3
    s = ternary_value(w)
    q = 1 + s
    d = 1 - 3 * w * q ** 2
    s1 = q ** 3 / d
    s2 = (3 * q ** 2 * s1 * d + 3 * q ** 5 + 6 * w * q ** 4 * s1) / d ** 2
    w_f, w_ff = 3 * x * e ** 2, 6 * x * e
    a = x * e ** 2 * (1 + s / 2)
    a_x = e ** 2 * (1 + s / 2) + x * e ** 2 * s1 * e ** 3 / 2
    a_f = 2 * x * e * (1 + s / 2) + x * e ** 2 * s1 * w_f / 2
    a_ff = (2 * x * (1 + s / 2) + 2 * x * e * s1 * w_f
            + x * e ** 2 * (s2 * w_f ** 2 + s1 * w_ff) / 2)
    ea = mpmath.exp(a)
    return ea * a_x, ea * a_f, ea * (a_ff + a_f ** 2)


def theta_derivatives_fd(x, f) -> tuple:
    """Same derivatives by central differences with a precision-scaled step."""
    x, f = mpf(x), mpf(f)
    h = mpf(2) ** (-(mpmath.mp.prec // 4))
    hx, hf = h * x, h * (1 + f)
    t0 = theta(x, f)
    t_x = (theta(x + hx, f) - theta(x - hx, f)) / (2 * hx)
    tp, tm = theta(x, f + hf), theta(x, f - hf)
    return t_x, (tp - tm) / (2 * hf), (tp - 2 * t0 + tm) / hf ** 2


def _network_residual(x, f, s):
    e = 1 + f
    e2 = e * e
    return (mpmath.exp(x * e2 * (1 + s / 2)) - 1 - f,
            x * e2 * e * (1 + s) ** 3 - s)


# -- characteristic system ----------------------------------------------------

def _newton_nd(fn, v, tol, maxsteps=100):
    """Damped Newton with a central-difference Jacobian; ``None`` on failure."""
    v = list(v)
    m = len(v)
    h = mpf(2) ** (-(mpmath.mp.prec // 3))

    def norm(r):
        return max(abs(c) for c in r)

    r = fn(*v)
    for _ in range(maxsteps):
        if norm(r) < tol:
            return v
        jac = mpmath.matrix(m, m)
        for j in range(m):
            step = h * (1 + abs(v[j]))
            up = list(v)
            dn = list(v)
            up[j] += step
            dn[j] -= step
            ru, rd = fn(*up), fn(*dn)
            for i in range(m):
                jac[i, j] = (ru[i] - rd[i]) / (2 * step)
        try:
            dv = mpmath.lu_solve(jac, mpmath.matrix([-c for c in r]))
        except ZeroDivisionError:
            return None
        lam = mpf(1)
        while lam > mpf(2) ** -30:
            trial = [a + lam * dv[i] for i, a in enumerate(v)]
            try:
                rt = fn(*trial)
            except (ValueError, ZeroDivisionError):
                rt = None
            if rt is not None and norm(rt) < norm(r):
                break
            lam /= 2
        else:
            return None
        v, r = trial, rt
    return v if norm(r) < tol else None


@dataclass(frozen=True)
class CharacteristicPoint:
    rho: mpf
    F0: mpf
    S0: mpf
    residual: mpf
    precision_bits: int

    @property
    def E0(self):
        return 1 + self.F0

    @property
    def gamma_b(self):
        return 1 / self.rho


def _series_seed():
    from .graphs import network_system
    e, s = network_system(64, False)
    ce, cs = e.coeffs, s.coeffs
    rho = mpf(ce[-2].numerator * ce[-1].denominator) / mpf(ce[-2].denominator * ce[-1].numerator)
    x = rho * mpf("0.97")
    return rho, e.evaluate(x) - 1, s.evaluate(x)


@lru_cache(maxsize=None)
def solve_characteristic_system(precision_bits: int = DEFAULT_PRECISION, seed=None) -> CharacteristicPoint:
    """Newton on {F = Phi, S = Psi, det(I - J) = 0} for ``(x, S, F)``.

    The seed comes from the truncated series (coefficient ratio for ``x``,
    series values for ``F`` and ``S``) unless one is supplied.
    """
    with mpmath.workprec(precision_bits + 32):
        x0, f0, s0 = seed if seed is not None else _series_seed()

        def system(x, s, f):
            r1, r2 = _network_residual(x, f, s)
            e = 1 + f
            arg = x * e ** 2 * (1 + s / 2)
            phi = mpmath.exp(arg)
            phi_s = phi * x * e ** 2 / 2
            phi_f = phi * 2 * x * e * (1 + s / 2)
            psi_s = 3 * x * e ** 3 * (1 + s) ** 2
            psi_f = 3 * x * e ** 2 * (1 + s) ** 3
            det = (1 - psi_s) * (1 - phi_f) - psi_f * phi_s
            return [r2, r1, det]

        sol = _newton_nd(system, [mpf(x0), mpf(s0), mpf(f0)],
                         mpf(2) ** (-(precision_bits - 16)))
        if sol is None:
            raise SingularityError(
                f"characteristic Newton diverged from seed {x0, f0, s0}; pass seed=")
        x, s, f = sol[0], sol[1], sol[2]
        res = max(abs(v) for v in system(x, s, f))
        if res > mpf(2) ** (-(precision_bits - 16)):
            raise SingularityError(f"characteristic residual {mpmath.nstr(res, 5)} too large")
        if not (0 < x < 1 and f > 0 and 0 < s < mpf(1) / 2):
            raise SingularityError("Newton converged to a non-physical solution; pass seed=")
        return CharacteristicPoint(+x, +f, +s, res, precision_bits)


@dataclass(frozen=True)
class NetworkAmplitude:
    E1: mpf
    theta_x: mpf
    theta_F: mpf
    theta_FF: mpf
    fd: tuple
    agreement_digits: float


@lru_cache(maxsize=None)
def network_amplitude(precision_bits: int = DEFAULT_PRECISION) -> NetworkAmplitude:
    """``E1 = sqrt(2 rho_b Theta_x / Theta_FF)`` with two routes to the derivatives."""
    cp = solve_characteristic_system(precision_bits)
    with mpmath.workprec(precision_bits + 32):
        tx, tf, tff = theta_derivatives(cp.rho, cp.F0)
        fd = theta_derivatives_fd(cp.rho, cp.F0)
        # at the branch point d/dF (Theta - F) vanishes
        if abs(tf - 1) > mpf(2) ** (-(precision_bits // 2)):
            raise SingularityError(f"Theta_F - 1 = {mpmath.nstr(tf - 1, 5)}: not a branch point")
        rel = max(abs(a - b) / abs(a) for a, b in zip((tx, tf, tff), fd))
        digits = float(-mpmath.log10(rel)) if rel else float("inf")
        if digits < 6:
            raise SingularityError(f"derivative routes agree to only {digits:.1f} digits")
        e1 = mpmath.sqrt(2 * cp.rho * tx / tff)
        return NetworkAmplitude(e1, tx, tf, tff, fd, digits)


@lru_cache(maxsize=None)
def network_branch_expansion(precision_bits: int = DEFAULT_PRECISION,
                             order: int = EXPANSION_ORDER) -> tuple:
    """``(E, S)`` as branch expansions at ``rho_b``; ``S`` means ``S(x E^3)``."""
    cp = solve_characteristic_system(precision_bits)
    amp = network_amplitude(precision_bits)
    with mpmath.workprec(precision_bits + 32):
        n = order + 1
        x = LocalSeries.var(n, 0, cp.rho) + LocalSeries([0, 0, -cp.rho] + [0] * (n - 2))

        def residual(us):
            f = us[0]
            e = 1 + f
            s = _ternary_series(x * e ** 3)
            return [(x * e * e * (1 + s / 2)).exp() - 1 - f]

        f = LocalSeries([cp.F0, -amp.E1] + [0] * (n - 1))
        (f,) = _fill([f], residual, range(2, order + 1), lag=1)
        e = 1 + f
        s = _ternary_series(x * e ** 3)
        ee = BranchExpansion(cp.rho, tuple(e.c[:order + 1]), precision_bits)
        se = BranchExpansion(cp.rho, tuple(s.c[:order + 1]), precision_bits)
        return ee, se


@dataclass(frozen=True)
class TwoConnectedExpansion:
    B0: mpf
    B2: mpf
    B3: mpf
    odd_X1: mpf
    expansion: BranchExpansion

    @property
    def b(self):
        return 3 * self.B3 / (4 * mpmath.sqrt(mpmath.pi))


def _b_closed_local(x: LocalSeries, e: LocalSeries, s: LocalSeries) -> LocalSeries:
    inner = e - x * e ** 3 * (s * s + 5 * s + 8) / 12
    return x * x * inner / 2


@lru_cache(maxsize=None)
def two_connected_expansion(precision_bits: int = DEFAULT_PRECISION) -> TwoConnectedExpansion:
    """``B(x) = B0 - B2 X^2 + B3 X^3 + O(X^4)`` at ``rho_b``."""
    ee, se = network_branch_expansion(precision_bits)
    with mpmath.workprec(precision_bits + 32):
        n = len(ee.coeffs) - 1
        rho = ee.location
        x = LocalSeries([rho, 0, -rho] + [0] * (n - 2))
        b = _b_closed_local(x, LocalSeries(ee.coeffs), LocalSeries(se.coeffs))
        tol = mpf(2) ** (-(precision_bits // 2))
        if abs(b[1]) > tol * abs(b[0]):
            raise SingularityError(f"odd X^1 coefficient {mpmath.nstr(b[1], 5)} is not zero")
        return TwoConnectedExpansion(b[0], -b[2], b[3], b[1],
                                     BranchExpansion(rho, tuple(b.c), precision_bits))


def bracket_root(g: Callable, lo, hi, maxsteps: int = 2000):
    """Root of ``g`` in ``[lo, hi]`` (sign change required) by the Illinois
    variant of regula falsi, falling back to bisection when it stalls."""
    a, b = mpf(lo), mpf(hi)
    fa, fb = g(a), g(b)
    if fa == 0:
        return a
    if fb == 0:
        return b
    if (fa > 0) == (fb > 0):
        raise SingularityError("bracket does not straddle a sign change")
    tol = mpmath.eps * 8
    side = 0
    prev = None
    for i in range(maxsteps):
        c = (a * fb - b * fa) / (fb - fa)
        if not min(a, b) < c < max(a, b) or i % 8 == 7:
            c = (a + b) / 2
        fc = g(c)
        if fc == 0:
            return c
        if (fc > 0) == (fb > 0):
            b, fb = c, fc
            if side == -1:
                fa /= 2
            side = -1
        else:
            a, fa = c, fc
            if side == 1:
                fb /= 2
            side = 1
        if prev is not None and abs(c - prev) <= tol * (1 + abs(c)):
            return c
        if abs(b - a) <= tol * (1 + abs(c)):
            return c
        prev = c
    raise SingularityError("bracketed root search did not converge")


# -- regular points below rho_b --------------------------------------------

def _solve_network_at(x0, cp: CharacteristicPoint):
    """Counting-branch ``(F, S)`` at ``0 <= x0 < rho_b``: ``F`` is the unique root
    of ``Theta(x0, F) - F`` in ``[0, F0]`` (``Theta`` is convex in ``F``)."""
    x0 = mpf(x0)
    if x0 == 0:
        return mpf(0), mpf(0)
    lo, hi = mpf(0), cp.F0
    g = lambda f: theta(x0, f) - f  # noqa: E731
    glo, ghi = g(lo), g(hi)
    if not (glo > 0 > ghi):
        raise SingularityError(f"no counting-branch bracket at x = {mpmath.nstr(x0, 10)}")
    f = bracket_root(g, lo, hi)
    return f, ternary_value(x0 * (1 + f) ** 3)


def network_taylor(x0, order: int, precision_bits: int = DEFAULT_PRECISION) -> tuple:
    """Taylor series of ``(F, S)`` in ``h`` at ``x = x0 + h`` (``x0 < rho_b``)."""
    cp = solve_characteristic_system(precision_bits)
    with mpmath.workprec(precision_bits + 32):
        x0 = mpf(x0)
        if x0 >= cp.rho:
            raise SingularityError("x0 must lie below rho_b (the Jacobian is singular there)")
        f0, s0 = _solve_network_at(x0, cp)
        x = LocalSeries.var(order, 1, x0)

        def residual(us):
            f, s = us
            e = 1 + f
            e2 = e * e
            return [(x * e2 * (1 + s / 2)).exp() - 1 - f, x * e2 * e * (1 + s) ** 3 - s]

        start = [LocalSeries.constant(f0, order), LocalSeries.constant(s0, order)]
        return tuple(_fill(start, residual, range(1, order + 1)))


def implicit_derivatives_E(x0, order: int = 3, precision_bits: int = DEFAULT_PRECISION) -> tuple:
    """``(E, E', ..., E^(order))`` at ``x0`` by implicit differentiation of the system."""
    f, _ = network_taylor(x0, order, precision_bits)
    with mpmath.workprec(precision_bits + 32):
        return tuple((1 if k == 0 else 0) + f[k] * mpmath.factorial(k) for k in range(order + 1))


def b_taylor(x0, order: int, precision_bits: int = DEFAULT_PRECISION) -> LocalSeries:
    """Taylor series of the 2-connected EGF ``B`` at ``x0`` from its closed form."""
    f, s = network_taylor(x0, order, precision_bits)
    with mpmath.workprec(precision_bits + 32):
        x = LocalSeries.var(order, 1, mpf(x0))
        return _b_closed_local(x, 1 + f, s)


# -- connected graphs -----------------------------------------------------------

@dataclass(frozen=True)
class ConnectedConstants:
    tau: mpf
    rho: mpf
    E_tau: mpf
    C0: mpf
    C2: mpf
    C3: mpf
    C3_printed_formula: mpf
    B_derivatives: tuple

    @property
    def gamma(self):
        return 1 / self.rho

    @property
    def G0(self):
        return mpmath.exp(self.C0)

    @property
    def G2(self):
        return self.C2 * mpmath.exp(self.C0)

    @property
    def G3(self):
        return self.C3 * mpmath.exp(self.C0)


@lru_cache(maxsize=None)
def connected_constants(precision_bits: int = DEFAULT_PRECISION) -> ConnectedConstants:
    """Branch point of ``C* = x exp(B'(C*))``: ``tau B''(tau) = 1``, ``rho = tau e^{-B'(tau)}``.

    ``C(x) = y (1 - B'(y)) + B(y)`` with ``y = C*(x)``; substituting the
    branch expansion of ``y`` gives ``C0``, ``C2`` and ``C3``.
    """
    cp = solve_characteristic_system(precision_bits)
    with mpmath.workprec(precision_bits + 32):
        def g(t):
            return t * 2 * b_taylor(t, 2, precision_bits)[2] - 1

        lo = mpf("0.05")
        hi = cp.rho * (1 - mpf(2) ** (-(precision_bits // 3)))
        if not (g(lo) < 0 < g(hi)):
            raise SingularityError("tau B''(tau) = 1 has no root below rho_b")
        tau = bracket_root(g, lo, hi)
        if not tau < cp.rho:
            raise SingularityError("tau >= rho_b: the block composition is not subcritical")
        bt = b_taylor(tau, 6, precision_bits)
        d = [bt[k] * mpmath.factorial(k) for k in range(7)]   # B, B', B'', ...
        rho = tau * mpmath.exp(-d[1])
        e_tau = implicit_derivatives_E(tau, 0, precision_bits)[0]

        n = EXPANSION_ORDER + 1
        # delta = y - tau as a series in X; beta holds B(tau + delta) Taylor data
        beta = LocalSeries(bt.c[:n + 1] + [0] * max(0, n - len(bt.c) + 1))
        x = LocalSeries([rho, 0, -rho] + [0] * (n - 2))

        def compose_b(delta, shift=0):
            # sum_k beta_{k+shift} (k+shift)!/k! delta^k : the shift-th derivative of B
            acc = LocalSeries.constant(0, n)
            p = LocalSeries.constant(1, n)
            for k in range(0, n + 1 - shift):
                coef = beta[k + shift] * mpmath.factorial(k + shift) / mpmath.factorial(k)
                acc = acc + p * coef
                p = p * delta
            return acc

        def residual(us):
            (delta,) = us
            y = tau + delta
            return [y * (-compose_b(delta, 1)).exp() - x]

        kappa = mpmath.sqrt(2 / (d[2] ** 2 + d[3]))
        delta = LocalSeries([0, -kappa] + [0] * (n - 1))
        (delta,) = _fill([delta], residual, range(2, n), lag=1)
        y = tau + delta
        c = y * (1 - compose_b(delta, 1)) + compose_b(delta, 0)
        c0 = tau * (1 + mpmath.log(rho) - mpmath.log(tau)) + d[0]
        if abs(c[0] - c0) > mpf(2) ** (-(precision_bits // 2)):
            raise SingularityError("C0 from the expansion disagrees with the closed form")
        printed = mpf(3) / 2 * mpmath.sqrt(2 * rho * mpmath.exp(d[1])
                                          / (tau * d[3] - tau * d[2] ** 2 + 2 * d[2]))
        return ConnectedConstants(tau, rho, e_tau, c0, -c[2], c[3], printed, tuple(d))


# -- algebraic curves ---------------------------------------------------------

def _poly_eval(terms: dict, z, y):
    return mpmath.fsum(c * z ** i * y ** j for (i, j), c in terms.items())


def _poly_partials(terms: dict):
    def dz(t):
        return {(i - 1, j): c * i for (i, j), c in t.items() if i}

    def dy(t):
        return {(i, j - 1): c * j for (i, j), c in t.items() if j}
    return dz, dy


def _local_poly(terms: dict, z: LocalSeries, y: LocalSeries) -> LocalSeries:
    dz_max = max(i for i, _ in terms)
    dy_max = max(j for _, j in terms)
    zp = [LocalSeries.constant(1, z.n)]
    for _ in range(dz_max):
        zp.append(zp[-1] * z)
    yp = [LocalSeries.constant(1, y.n)]
    for _ in range(dy_max):
        yp.append(yp[-1] * y)
    acc = LocalSeries.constant(0, z.n)
    for (i, j), c in terms.items():
        acc = acc + zp[i] * yp[j] * c
    return acc


def _newton_1d(fn, dfn, y, tol, maxsteps=100):
    for _ in range(maxsteps):
        step = fn(y) / dfn(y)
        y -= step
        if abs(step) <= tol * (1 + abs(y)):
            return y
    raise SingularityError("Newton iteration did not converge")


@dataclass(frozen=True)
class AlgebraicBranch:
    expansion: BranchExpansion
    y0: mpf
    amplitude: mpf       # |a1| = sqrt(2 sigma |p_z| / |p_yy|)
    p_residual: mpf

    @property
    def sigma(self):
        return self.expansion.location


def algebraic_branch_expansion(p, sigma, branch: Callable, order: int = EXPANSION_ORDER,
                               precision_bits: int = DEFAULT_PRECISION,
                               start_fraction="0.5") -> AlgebraicBranch:
    """Square-root expansion of the branch of ``p(z, y) = 0`` singular at ``sigma``.

    ``branch(z)`` must return the counting-branch value at small ``z``; the
    root is followed by continuation up to ``sigma``, where ``p_y = 0`` is
    solved for ``y0``.  The sign of ``a1`` is fixed by comparing with the
    continued branch just below ``sigma``.
    """
    from .polyalg import BiPolynomial
    terms = p.terms() if isinstance(p, BiPolynomial) else dict(p)
    dz, dy = _poly_partials(terms)
    t_y, t_z = dy(terms), dz(terms)
    t_yy = dy(t_y)
    with mpmath.workprec(precision_bits + 32):
        if hasattr(sigma, "lo"):
            from .rootfind import refine
            iv = refine(sigma, Fraction(1, 2 ** (precision_bits + 8)))
            sigma = mpf(iv.midpoint.numerator) / iv.midpoint.denominator
        sigma = mpf(sigma)
        tol = mpmath.eps * 16
        z0 = sigma * mpf(start_fraction)
        y = _newton_1d(lambda v: _poly_eval(terms, z0, v),
                       lambda v: _poly_eval(t_y, z0, v), mpf(branch(z0)), tol)
        z = z0
        # geometric approach to sigma with an Euler predictor dy/dz = -p_z/p_y
        ratio = mpf("0.8")
        dist = sigma - z0
        ctol = mpmath.eps ** mpf("0.75")
        while dist > sigma * mpf(10) ** -10:
            slope = -_poly_eval(t_z, z, y) / _poly_eval(t_y, z, y)
            dist *= ratio
            z_new = sigma - dist
            y_new = _newton_1d(lambda v: _poly_eval(terms, z_new, v),
                               lambda v: _poly_eval(t_y, z_new, v),
                               y + slope * (z_new - z), ctol, 200)
            if abs(y_new - y - slope * (z_new - z)) > 2 * abs(y_new - y):
                raise SingularityError("continuation left the counting branch")
            if z_new <= sigma * mpf("0.8"):
                ref = mpf(branch(z_new))
                if abs(ref - y_new) > mpf(10) ** -8 * abs(ref):
                    raise SingularityError("continuation disagrees with the counting series")
            z, y = z_new, y_new
        z_last, y_last = z, y
        y0 = _newton_1d(lambda v: _poly_eval(t_y, sigma, v),
                        lambda v: _poly_eval(t_yy, sigma, v), y_last, tol)
        pres = abs(_poly_eval(terms, sigma, y0))
        if pres > mpf(2) ** (-(precision_bits // 2)):
            raise SingularityError("p(sigma, y0) != 0: sigma is not a branch point of this branch")
        pz, pyy = _poly_eval(t_z, sigma, y0), _poly_eval(t_yy, sigma, y0)
        if abs(pyy) < mpf(2) ** (-(precision_bits // 2)):
            raise SingularityError("p_yy vanishes: not a square-root branch point")
        amp = mpmath.sqrt(2 * sigma * abs(pz) / abs(pyy))
        xl = mpmath.sqrt(1 - z_last / sigma)
        a1 = -amp if abs(y0 - amp * xl - y_last) < abs(y0 + amp * xl - y_last) else amp
        n = order + 1
        zs = LocalSeries([sigma, 0, -sigma] + [0] * (n - 2))
        ys = LocalSeries([y0, a1] + [0] * (n - 1))
        (ys,) = _fill([ys], lambda us: [_local_poly(terms, zs, us[0])], range(2, order + 1), lag=1)
        return AlgebraicBranch(BranchExpansion(sigma, tuple(ys.c[:order + 1]), precision_bits),
                               y0, amp, pres)


# -- maps --------------------------------------------------------------------

@dataclass(frozen=True)
class MapConstants:
    sigma_b: mpf
    sigma: mpf
    other_positive_root: mpf
    B_branch: AlgebraicBranch
    M_branch: AlgebraicBranch

    @property
    def subcritical_value(self):
        """``sigma (1 + M(sigma))^2``, the argument reached inside ``B``."""
        return self.sigma * (1 + self.M_branch.y0) ** 2

    @property
    def subcritical_value_alt(self):
        """``sigma (1 + M(sigma)^2)``, the other reading of the composition check."""
        return self.sigma * (1 + self.M_branch.y0 ** 2)


def _root_value(iv, bits):
    from .rootfind import refine
    r = refine(iv, Fraction(1, 2 ** (bits + 8)))
    return mpf(r.midpoint.numerator) / r.midpoint.denominator


@lru_cache(maxsize=None)
def map_constants(precision_bits: int = DEFAULT_PRECISION) -> MapConstants:
    from . import maps
    from .polyalg import BiPolynomial, IntPolynomial
    from .rootfind import positive_real_roots
    with mpmath.workprec(precision_bits + 32):
        pos_b = positive_real_roots(IntPolynomial(maps.DISC_B_FACTOR))
        pos_m = positive_real_roots(IntPolynomial(maps.DISC_M_FACTOR))
        if len(pos_b) != 1:
            raise SingularityError(f"expected one positive root, found {len(pos_b)}")
        sigma_b = _root_value(pos_b[0], precision_bits)
        roots_m = [_root_value(iv, precision_bits) for iv in pos_m]
        # the radius is the positive root below sigma_b
        inside = [r for r in roots_m if r < sigma_b]
        if len(inside) != 1:
            raise SingularityError("cannot single out sigma among the positive roots")
        sigma = inside[0]
        others = [r for r in roots_m if r is not sigma]
        b_series = maps.two_connected_maps_series(256)
        m_series = maps.all_maps_series(256)
        bb = algebraic_branch_expansion(BiPolynomial.from_terms(maps.P_B_TERMS), sigma_b,
                                        b_series.evaluate, precision_bits=precision_bits)
        mb = algebraic_branch_expansion(BiPolynomial.from_terms(maps.P_M_TERMS), sigma,
                                        m_series.evaluate, precision_bits=precision_bits)
        return MapConstants(sigma_b, sigma, others[0] if others else mpmath.nan, bb, mb)


# -- reports -----------------------------------------------------------------

@dataclass
class ConstantsReport:
    """Named constants with provenance; serialisable to JSON."""
    theorem: int
    precision_bits: int
    entries: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def add(self, name: str, value, provenance: str) -> None:
        self.entries[name] = (HPReal(mpf(value), self.precision_bits), provenance)

    def __getitem__(self, name: str):
        return self.entries[name][0].value

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "precision_bits": self.precision_bits,
                "constants": {k: {"value": v.to_json(), "provenance": p}
                              for k, (v, p) in self.entries.items()},
                "notes": list(self.notes)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def graph_constants_report(precision_bits: int = DEFAULT_PRECISION) -> ConstantsReport:
    cp = solve_characteristic_system(precision_bits)
    amp = network_amplitude(precision_bits)
    bx = two_connected_expansion(precision_bits)
    cc = connected_constants(precision_bits)
    r = ConstantsReport(1, precision_bits)
    with mpmath.workprec(precision_bits + 32):
        r.add("rho_b", cp.rho, "characteristic system of the network equations")
        r.add("gamma_b", cp.gamma_b, "1/rho_b")
        r.add("E0", cp.E0, "characteristic system")
        r.add("S0", cp.S0, "characteristic system")
        r.add("rho_b_E0_cubed", cp.rho * cp.E0 ** 3, "subcriticality of S(x E^3); compare 4/27")
        r.add("E1", amp.E1, "sqrt(2 rho_b Theta_x / Theta_FF)")
        r.add("B0", bx.B0, "closed form of B at x = rho_b (1 - X^2)")
        r.add("B2", bx.B2, "minus the X^2 coefficient")
        r.add("B3", bx.B3, "X^3 coefficient")
        r.add("b", bx.b, "3 B3 / (4 sqrt(pi)) = B3 / Gamma(-3/2)")
        r.add("tau", cc.tau, "tau B''(tau) = 1")
        r.add("E_tau", cc.E_tau, "E at tau")
        r.add("rho", cc.rho, "tau exp(-B'(tau))")
        r.add("gamma", cc.gamma, "1/rho")
        r.add("C0", cc.C0, "tau (1 + log rho - log tau) + B(tau)")
        r.add("C2", cc.C2, "minus the X^2 coefficient of C; equals tau")
        r.add("C3", cc.C3, "X^3 coefficient of C from the branch expansion of C*")
        r.add("C3_printed_formula", cc.C3_printed_formula,
              "3/2 sqrt(2 rho e^{B'} / (tau B''' - tau B''^2 + 2 B''))")
        r.add("G0", cc.G0, "exp(C0)")
        r.add("G2", cc.G2, "C2 exp(C0)")
        r.add("G3", cc.G3, "C3 exp(C0)")
        g32 = mpmath.gamma(mpf(-3) / 2)
        r.add("c", cc.C3 / g32, "C3 / Gamma(-3/2)")
        r.add("g", cc.G3 / g32, "G3 / Gamma(-3/2)")
        r.add("t", 4 * mpmath.sqrt(3) / (mpf(3) ** 10 * mpmath.sqrt(mpmath.pi)),
              "4 sqrt(3) / (3^10 sqrt(pi)), 3-connected graphs")
    r.notes.append("tau and rho_b agree to six digits; their difference is "
                   + mpmath.nstr(cp.rho - cc.tau, 5))
    return r


def map_constants_report(precision_bits: int = DEFAULT_PRECISION) -> ConstantsReport:
    mc = map_constants(precision_bits)
    r = ConstantsReport(2, precision_bits)
    with mpmath.workprec(precision_bits + 32):
        sqpi = mpmath.sqrt(mpmath.pi)
        r.add("sigma_b", mc.sigma_b, "unique positive root of the discriminant factor for B")
        r.add("sigma_b_inv", 1 / mc.sigma_b, "1/sigma_b")
        r.add("sigma", mc.sigma, "positive root of the discriminant factor for M below sigma_b")
        r.add("sigma_inv", 1 / mc.sigma, "1/sigma")
        r.add("sigma_other_root", mc.other_positive_root, "second positive root (> sigma_b)")
        r.add("B_sigma_b", mc.B_branch.y0, "p_B = d p_B/dB = 0 at sigma_b")
        r.add("b1", mc.B_branch.amplitude, "sqrt(2 sigma_b |p_z| / |p_BB|)")
        r.add("M_sigma", mc.M_branch.y0, "p_M = d p_M/dM = 0 at sigma")
        r.add("m1", mc.M_branch.amplitude, "sqrt(2 sigma |p_z| / |p_MM|)")
        r.add("b", mc.B_branch.amplitude / (2 * sqpi), "b1 / (2 sqrt(pi)) = -(-b1)/Gamma(-1/2)")
        r.add("m", mc.M_branch.amplitude / (2 * sqpi), "m1 / (2 sqrt(pi))")
        r.add("b_times_2", mc.B_branch.amplitude / sqpi, "b1 / sqrt(pi)")
        r.add("m_times_2", mc.M_branch.amplitude / sqpi, "m1 / sqrt(pi)")
        r.add("subcritical_value", mc.subcritical_value, "sigma (1 + M(sigma))^2 < sigma_b")
        r.add("subcritical_value_alt", mc.subcritical_value_alt, "sigma (1 + M(sigma)^2)")
    r.notes.append("counting branches decrease away from the branch point: "
                   "B = B(sigma_b) - b1 X + O(X^2) and M = M(sigma) - m1 X + O(X^2)")
    return r


def constants_report(theorem: int, precision_bits: int = DEFAULT_PRECISION) -> ConstantsReport:
    if theorem == 1:
        return graph_constants_report(precision_bits)
    if theorem == 2:
        return map_constants_report(precision_bits)
    raise ValueError("theorem must be 1 or 2")
