"""Roots of integer polynomials.

Real roots are isolated exactly with a Sturm sequence and refined by
bisection on rational endpoints.  All complex roots are approximated together
with Aberth-Ehrlich iteration in mpmath; each approximation carries an
inclusion radius ``n |W_i|`` built from its Weierstrass correction, and a root
is certified once its disk is disjoint from all others.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from flint import fmpq, fmpq_poly

from .polyalg import IntPolynomial, PolynomialError

DEFAULT_PRECISION = int(os.environ.get("CHORDPLANAR_PRECISION", "256"))
DEFAULT_MAX_ITER = 500


class RootFindingError(RuntimeError):
    pass


def _as_poly(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    return IntPolynomial(p)


def _q(x: Fraction) -> fmpq:
    return fmpq(x.numerator, x.denominator)


def _sign_at(p: fmpq_poly, x: Fraction) -> int:
    v = p(_q(x))
    return (v > 0) - (v < 0)


# -- real roots -------------------------------------------------------------

@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval ``(lo, hi)`` holding exactly one real root of ``poly``.

    ``poly`` is squarefree, so the root is simple and ``poly`` changes sign
    across the interval.
    """
    lo: Fraction
    hi: Fraction
    poly: IntPolynomial = field(repr=False, compare=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def certificate(self) -> bool:
        p = fmpq_poly(self.poly.coeffs)
        return _sign_at(p, self.lo) * _sign_at(p, self.hi) < 0

    def __contains__(self, x) -> bool:
        return self.lo < Fraction(x) < self.hi

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi),
                "approx": float(self.midpoint)}


def sturm_sequence(p: IntPolynomial) -> list[fmpq_poly]:
    seq = [fmpq_poly(p.coeffs), fmpq_poly(p.derivative().coeffs)]
    while not seq[-1].is_zero() and seq[-1].degree() > 0:
        seq.append(-(seq[-2] % seq[-1]))
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _variations(signs) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _count_at(seq, x: Fraction) -> int:
    return _variations(_sign_at(q, x) for q in seq)


def _cauchy_bound(p: IntPolynomial) -> Fraction:
    cs = p.coeffs
    lead = abs(cs[-1])
    return 1 + max(Fraction(abs(c), lead) for c in cs[:-1])


def isolate_real_roots(p) -> list[IsolatingInterval]:
    """Disjoint rational intervals, one per distinct real root, in increasing order."""
    p = _as_poly(p)
    if p.is_zero():
        raise PolynomialError("cannot isolate roots of the zero polynomial")
    sq = p.squarefree_part()
    if sq.degree < 1:
        return []
    seq = sturm_sequence(sq)
    flint_p = seq[0]
    bound = _cauchy_bound(sq)
    out = []
    stack = [(-bound, bound, _count_at(seq, -bound), _count_at(seq, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(lo, hi, sq))
            continue
        mid = (lo + hi) / 2
        # keep endpoints off the roots
        step = (hi - lo) / 64
        while flint_p(_q(mid)) == 0:
            mid += step
            step /= 2
        vmid = _count_at(seq, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    return sorted(out, key=lambda iv: iv.lo)


def refine(interval: IsolatingInterval, target_width) -> IsolatingInterval:
    """Bisect until the width is at most ``target_width``."""
    target = Fraction(target_width)
    p = fmpq_poly(interval.poly.coeffs)
    lo, hi = interval.lo, interval.hi
    slo = _sign_at(p, lo)
    while hi - lo > target:
        mid = (lo + hi) / 2
        s = _sign_at(p, mid)
        if s == 0:
            # exact rational root: shrink around it
            eps = target / 4
            return IsolatingInterval(mid - eps, mid + eps, interval.poly)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi, interval.poly)


def positive_real_roots(p, width=Fraction(1, 10**12)) -> list[IsolatingInterval]:
    """Isolating intervals of the positive real roots, refined to ``width``."""
    out = []
    for iv in isolate_real_roots(p):
        iv = refine(iv, width)
        if iv.hi <= 0:
            continue
        if iv.lo < 0:
            # straddles 0: the root is positive iff p(0) has the sign of p(lo)
            fp = fmpq_poly(iv.poly.coeffs)
            s0 = _sign_at(fp, Fraction(0))
            if s0 == 0 or s0 != _sign_at(fp, iv.lo):
                continue
            iv = IsolatingInterval(Fraction(0), iv.hi, iv.poly)
        out.append(iv)
    return out


# -- complex roots ------------------------------------------------------------

@dataclass(frozen=True)
class Root:
    value: mpmath.mpc
    residual_bound: mpmath.mpf

    @property
    def modulus(self):
        return abs(self.value)

    def to_json(self, digits: int = 30) -> dict:
        return {"re": mpmath.nstr(self.value.real, digits),
                "im": mpmath.nstr(self.value.imag, digits),
                "modulus": mpmath.nstr(abs(self.value), digits),
                "residual_bound": mpmath.nstr(self.residual_bound, 5)}


@dataclass(frozen=True)
class RootSet:
    """Approximations to every root of the squarefree part of ``poly``."""
    roots: list
    precision_bits: int
    poly: IntPolynomial = field(repr=False)
    iterations: int = 0

    def __len__(self) -> int:
        return len(self.roots)

    def real_roots(self) -> list[Root]:
        return [r for r in self.roots if abs(r.value.imag) <= r.residual_bound]

    def nearest(self, x) -> Root:
        return min(self.roots, key=lambda r: abs(r.value - x))

    def to_json(self) -> str:
        return json.dumps({"precision_bits": self.precision_bits,
                           "roots": [r.to_json() for r in self.roots]}, indent=2)


def _horner_with_derivative(cs, x):
    p = cs[-1]
    dp = 0
    for c in reversed(cs[:-1]):
        dp = dp * x + p
        p = p * x + c
    return p, dp


def all_roots(p, precision_bits: int = DEFAULT_PRECISION,
              max_iter: int = DEFAULT_MAX_ITER) -> RootSet:
    """Aberth-Ehrlich iteration on the squarefree part of ``p``."""
    p = _as_poly(p)
    if p.is_zero() or p.degree < 1:
        raise PolynomialError("need a polynomial of degree >= 1")
    sq = p.squarefree_part()
    n = sq.degree
    with mpmath.workprec(precision_bits + 32):
        cs = [mpmath.mpf(c) for c in sq.coeffs]
        radius = mpmath.mpf(float(_cauchy_bound(sq))) / 2
        zs = [radius * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf("0.4"))
              for k in range(n)]
        tol = mpmath.mpf(2) ** (-precision_bits)
        for it in range(1, max_iter + 1):
            biggest = mpmath.mpf(0)
            new = []
            for i, zi in enumerate(zs):
                val, der = _horner_with_derivative(cs, zi)
                if val == 0:
                    new.append(zi)
                    continue
                ratio = val / der
                s = sum(1 / (zi - zj) for j, zj in enumerate(zs) if j != i)
                step = ratio / (1 - ratio * s)
                new.append(zi - step)
                biggest = max(biggest, abs(step) / max(abs(zi), 1))
            zs = new
            if biggest < tol:
                break
        else:
            raise RootFindingError(
                f"Aberth iteration did not converge in {max_iter} steps "
                f"(last relative step {mpmath.nstr(biggest, 5)})")
        roots = []
        for i, zi in enumerate(zs):
            val, _ = _horner_with_derivative(cs, zi)
            denom = cs[-1]
            for j, zj in enumerate(zs):
                if j != i:
                    denom *= zi - zj
            bound = n * abs(val / denom) + abs(zi) * mpmath.mpf(2) ** (-precision_bits)
            roots.append(Root(mpmath.mpc(zi), bound))
    _check_disjoint(roots)
    roots.sort(key=lambda r: (abs(r.value), r.value.imag))
    return RootSet(roots, precision_bits, sq, it)


def _check_disjoint(roots: list[Root]) -> None:
    for i, a in enumerate(roots):
        for b in roots[i + 1:]:
            if abs(a.value - b.value) <= a.residual_bound + b.residual_bound:
                raise RootFindingError("inclusion disks overlap; raise the precision")


@dataclass(frozen=True)
class DominanceReport:
    """How far the other roots' moduli stay from ``|target|``."""
    target: Root
    closest_other_modulus: mpmath.mpf
    gap: mpmath.mpf
    error_bound: mpmath.mpf
    smaller_moduli: int

    @property
    def margin_ratio(self):
        return self.gap / self.error_bound if self.error_bound else mpmath.inf

    @property
    def ok(self) -> bool:
        return self.gap > 0 and self.margin_ratio >= 10

    def to_json(self) -> dict:
        return {"target": self.target.to_json(),
                "closest_other_modulus": mpmath.nstr(self.closest_other_modulus, 20),
                "gap": mpmath.nstr(self.gap, 10),
                "error_bound": mpmath.nstr(self.error_bound, 5),
                "smaller_moduli": self.smaller_moduli,
                "ok": self.ok}


def modulus_dominance(rs: RootSet, target) -> DominanceReport:
    """Certify that no root other than the one nearest ``target`` has the same modulus.

    ``gap`` is the distance between ``|target|`` and the nearest other modulus,
    reduced by both inclusion radii; ``error_bound`` is the largest radius used.
    """
    t = rs.nearest(target)
    others = [r for r in rs.roots if r is not t]
    if not others:
        return DominanceReport(t, mpmath.inf, mpmath.inf, t.residual_bound, 0)
    tm = abs(t.value)
    closest = min(others, key=lambda r: abs(abs(r.value) - tm))
    err = t.residual_bound + closest.residual_bound
    gap = abs(abs(closest.value) - tm) - err
    smaller = sum(1 for r in others if abs(r.value) + r.residual_bound < tm - t.residual_bound)
    return DominanceReport(t, abs(closest.value), gap, max(err, mpmath.mpf(2) ** (-rs.precision_bits)),
                           smaller)
