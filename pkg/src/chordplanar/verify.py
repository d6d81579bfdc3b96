"""The invariant battery behind ``chordplanar verify``.

Each check returns a :class:`CheckResult` naming its module and invariant;
failures carry the first failing order (or index) where that makes sense.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator

import mpmath

from . import graphs, maps, oracle, polyalg, rootfind, singular
from .polyalg import BiPolynomial, IntPolynomial
from .series import TruncatedSeries


@dataclass(frozen=True)
class CheckResult:
    module: str
    invariant: str
    ok: bool
    first_failure: int | None = None
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        where = "" if self.first_failure is None else f" (first failure at order {self.first_failure})"
        extra = f": {self.detail}" if self.detail else ""
        return f"[{status}] {self.module}: {self.invariant}{where}{extra}"

    def to_dict(self) -> dict:
        return {"module": self.module, "invariant": self.invariant, "ok": self.ok,
                "first_failure": self.first_failure, "detail": self.detail}


def _first_mismatch(a, b) -> int | None:
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return n
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


# -- exact-series / labelled-graphs ---------------------------------------

def check_ternary(order: int) -> CheckResult:
    s = graphs.ternary_series(order).ogf_counts()
    closed = [0] + [comb(3 * n, n) // (2 * n + 1) for n in range(1, order + 1)]
    bad = _first_mismatch(s, closed)
    return CheckResult("exact-series", "[z^n]S = binom(3n, n)/(2n + 1)", bad is None, bad)


def check_exp_compose(order: int) -> CheckResult:
    a = graphs.ternary_series(order)
    e = TruncatedSeries([Fraction(1, factorial(k)) for k in range(order + 1)], order)
    bad = _first_mismatch(e.compose(a).coeffs, a.exp().coeffs)
    return CheckResult("exact-series", "compose(exp, a) = exp(a)", bad is None, bad)


def check_dissymmetry(order: int) -> CheckResult:
    closed = graphs.two_connected_series_closed(order)
    integral = graphs.two_connected_series_bivariate(order).at_y(1)
    bad = _first_mismatch(closed.coeffs, integral.coeffs)
    return CheckResult("labelled-graphs", "dissymmetry closed form = integral form at y = 1",
                       bad is None, bad)


def check_triangulations(order: int) -> CheckResult:
    u = graphs.egf_sequence("triangulations", order)
    bad = next((n for n in range(4, order + 1) if u[n] != graphs.count_3connected(n)), None)
    return CheckResult("labelled-graphs", "n! [z^n]U = t_n", bad is None, bad)


def check_graph_ordering(order: int) -> CheckResult:
    g = graphs.egf_sequence("all", order)
    c = graphs.egf_sequence("connected", order)
    b = graphs.egf_sequence("2conn", order)
    bad = next((n for n in range(2, order + 1) if not g[n] >= c[n] >= b[n] >= 0), None)
    return CheckResult("labelled-graphs", "g_n >= c_n >= b_n >= 0", bad is None, bad)


# -- chordal-maps / poly-algebra --------------------------------------------

def check_annihilator_B(order: int) -> CheckResult:
    r = polyalg.annihilator_check(BiPolynomial.from_terms(maps.P_B_TERMS),
                                  maps.two_connected_maps_series(order))
    return CheckResult("chordal-maps", "P_B(z, z D) = 0", r.ok, r.first_failure)


def check_annihilator_M(order: int) -> CheckResult:
    r = polyalg.annihilator_check(BiPolynomial.from_terms(maps.P_M_TERMS),
                                  maps.all_maps_series(order))
    return CheckResult("chordal-maps", "P_M(z, M) = 0", r.ok, r.first_failure)


def check_map_ordering(order: int) -> CheckResult:
    m = maps.map_sequence("maps", order)
    b = maps.map_sequence("2conn-maps", order)
    bad = next((n for n in range(order + 1) if not m[n] >= b[n] >= 0), None)
    return CheckResult("chordal-maps", "M_n >= B_n >= 0", bad is None, bad)


def check_derived_annihilators(order: int) -> CheckResult:
    p_b = BiPolynomial.from_terms(maps.P_B_TERMS)
    p_m = BiPolynomial.from_terms(maps.P_M_TERMS)
    q_m = polyalg.cofactor(p_m, polyalg.derive_M_annihilator(p_b))
    q_b = polyalg.cofactor(p_b, polyalg.derive_B_annihilator())
    ok = q_m is not None and q_b is not None
    return CheckResult("poly-algebra", "eliminations are divisible by P_B and P_M", ok,
                       detail="" if ok else "inexact division")


def _monomial_cofactor(disc: IntPolynomial, factor: list[int]) -> bool:
    q = polyalg.cofactor(IntPolynomial(factor), disc)
    return q is not None and sum(1 for c in q.coeffs if c) == 1


def check_discriminants(order: int) -> CheckResult:
    ok_b = _monomial_cofactor(polyalg.discriminant(BiPolynomial.from_terms(maps.P_B_TERMS)),
                              maps.DISC_B_FACTOR)
    ok_m = _monomial_cofactor(polyalg.discriminant(BiPolynomial.from_terms(maps.P_M_TERMS)),
                              maps.DISC_M_FACTOR)
    detail = ", ".join(name for name, ok in (("disc_B", ok_b), ("disc_M", ok_m)) if not ok)
    return CheckResult("poly-algebra", "discriminants = integer monomial x printed factor",
                       ok_b and ok_m, detail=detail)


# -- rootfind ---------------------------------------------------------------

def check_dominance(order: int, precision_bits: int = 256) -> CheckResult:
    details = []
    ok = True
    for name, factor in (("B", maps.DISC_B_FACTOR), ("M", maps.DISC_M_FACTOR)):
        p = IntPolynomial(factor)
        pos = rootfind.positive_real_roots(p)
        rs = rootfind.all_roots(p, precision_bits)
        rep = rootfind.modulus_dominance(rs, float(pos[0].midpoint))
        if not rep.ok:
            ok = False
            details.append(f"{name}: gap {mpmath.nstr(rep.gap, 5)}")
    return CheckResult("rootfind", "no other discriminant root shares the singular modulus",
                       ok, detail="; ".join(details))


def check_positive_roots(order: int) -> CheckResult:
    b = rootfind.positive_real_roots(IntPolynomial(maps.DISC_B_FACTOR))
    m = rootfind.positive_real_roots(IntPolynomial(maps.DISC_M_FACTOR))
    ok = len(b) == 1 and len(m) == 2 and all(iv.certificate() for iv in b + m)
    return CheckResult("rootfind", "one positive root for B, two for M, sign-certified", ok,
                       detail=f"found {len(b)} and {len(m)}")


# -- singular-analysis ----------------------------------------------------

def check_subcriticality(order: int, precision_bits: int = 256) -> CheckResult:
    cp = singular.solve_characteristic_system(precision_bits)
    cc = singular.connected_constants(precision_bits)
    mc = singular.map_constants(precision_bits)
    fails = []
    if not cp.rho * cp.E0 ** 3 < mpmath.mpf(4) / 27:
        fails.append("rho_b E0^3 >= 4/27")
    if not cp.rho - cc.tau > mpmath.mpf(2) ** (-precision_bits // 2):
        fails.append("tau not below rho_b")
    if not mc.subcritical_value < mc.sigma_b:
        fails.append("sigma (1 + M(sigma))^2 >= sigma_b")
    return CheckResult("singular-analysis", "subcritical compositions", not fails,
                       detail="; ".join(fails))


def check_theta(order: int, precision_bits: int = 256) -> CheckResult:
    try:
        amp = singular.network_amplitude(precision_bits)
    except singular.SingularityError as exc:
        return CheckResult("singular-analysis", "branch condition and derivative agreement",
                           False, detail=str(exc))
    return CheckResult("singular-analysis", "branch condition and derivative agreement", True,
                       detail=f"routes agree to {float(amp.agreement_digits):.1f} digits")


# -- brute-oracle -------------------------------------------------------------

def check_oracle(order: int) -> CheckResult:
    g = graphs.egf_sequence("all", max(order, 6))
    c = graphs.egf_sequence("connected", max(order, 6))
    b = graphs.egf_sequence("2conn", max(order, 6))
    u = graphs.egf_sequence("triangulations", max(order, 6))
    for n in range(1, oracle.MAX_CENSUS + 1):
        cen = oracle.census(n)
        t = graphs.count_3connected(n) if n >= 4 else 0
        if (cen.all, cen.connected, cen.two_connected, cen.three_connected) != (g[n], c[n], b[n], t) \
                or (n >= 4 and cen.triangulations != u[n]):
            return CheckResult("brute-oracle", "census matches the series", False, n)
    return CheckResult("brute-oracle", "census matches the series", True)


CHECKS: list[Callable[[int], CheckResult]] = [
    check_ternary, check_exp_compose, check_dissymmetry, check_triangulations,
    check_graph_ordering, check_annihilator_B, check_annihilator_M, check_map_ordering,
    check_derived_annihilators, check_discriminants, check_positive_roots,
    check_dominance, check_oracle, check_theta, check_subcriticality,
]


def run_checks(order: int = 64, fail_fast: bool = True) -> Iterator[CheckResult]:
    for check in CHECKS:
        result = check(order)
        yield result
        if fail_fast and not result.ok:
            return


def summary_json(results: list[CheckResult]) -> str:
    return json.dumps({"ok": all(r.ok for r in results),
                       "checks": [r.to_dict() for r in results]}, indent=2)
