"""Coefficient asymptotics: transfer predictions and empirical fits.

A law ``f(z) ~ c (1 - z/rho)^(-alpha)`` gives ``[z^n] f ~ c/Gamma(alpha) n^(alpha-1) rho^(-n)``.
The empirical side estimates ``rho``, ``alpha`` and the coefficient constant
``K = c/Gamma(alpha)`` directly from exact coefficients, using Richardson
extrapolation in ``1/n`` to remove the ``O(1/n)`` corrections.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
from mpmath import mpf

DEFAULT_DEPTH = 4
MIN_TERMS = 50
FIT_PRECISION = 256


class FitError(ValueError):
    pass


@dataclass(frozen=True)
class AsymptoticLaw:
    """``f(z) ~ amplitude * (1 - z/rho)^(-alpha)`` near its dominant singularity."""
    amplitude: mpf
    alpha: mpf
    rho: mpf
    scaling: str = "ogf"
    name: str = ""

    def __post_init__(self):
        if self.scaling not in ("ogf", "egf"):
            raise ValueError("scaling must be 'ogf' or 'egf'")
        if not mpf(self.rho) > 0:
            raise ValueError("rho must be positive")

    @property
    def constant(self):
        """Coefficient constant ``amplitude / Gamma(alpha)``."""
        a = mpf(self.alpha)
        if a <= 0 and a == mpmath.floor(a):
            raise ValueError(f"alpha = {self.alpha} is a pole of Gamma")
        return mpf(self.amplitude) * mpmath.rgamma(a)


def transfer_predict(law: AsymptoticLaw, n: int):
    """Leading-order ``[z^n]`` (times ``n!`` for EGFs)."""
    k = law.constant
    v = k * mpf(n) ** (mpf(law.alpha) - 1) * mpf(law.rho) ** (-n)
    if law.scaling == "egf":
        v *= mpmath.factorial(n)
    return v


def richardson(seq: Sequence, ns: Sequence[int], depth: int = DEFAULT_DEPTH):
    """Extrapolate ``s_n = s + a_1/n + ... + a_depth/n^depth`` to ``n -> oo``
    from the last ``depth + 1`` terms (Lagrange interpolation in ``1/n`` at 0)."""
    if len(seq) < depth + 1 or len(seq) != len(ns):
        raise FitError("not enough terms for Richardson extrapolation")
    s, m = seq[-depth - 1:], [mpf(n) for n in ns[-depth - 1:]]
    if len(set(m)) != len(m):
        raise FitError("Richardson needs distinct indices")
    total = mpf(0)
    for j, nj in enumerate(m):
        w = mpf(1)
        for k, nk in enumerate(m):
            if k != j:
                # x_k / (x_k - x_j) with x = 1/n
                w *= nj / (nj - nk)
        total += w * s[j]
    return total


@dataclass
class FitResult:
    rho: mpf
    alpha: mpf
    constant: mpf
    n_max: int
    scaling: str
    table: list = field(default_factory=list)
    stable: bool = True
    alpha_used: mpf | None = None

    @property
    def coefficient_exponent(self):
        return self.alpha - 1

    @property
    def growth(self):
        return 1 / self.rho

    def to_dict(self) -> dict:
        return {"rho": mpmath.nstr(self.rho, 15), "growth": mpmath.nstr(1 / self.rho, 15),
                "alpha": mpmath.nstr(self.alpha, 10),
                "coefficient_exponent": mpmath.nstr(self.alpha - 1, 10),
                "alpha_used_for_constant": mpmath.nstr(self.alpha_used, 10),
                "constant": mpmath.nstr(self.constant, 10),
                "n_max": self.n_max, "scaling": self.scaling, "stable": self.stable,
                "table": [{"n": n, "rho": mpmath.nstr(r, 12), "alpha": mpmath.nstr(a, 8),
                           "constant": mpmath.nstr(k, 10)} for n, r, a, k in self.table]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _to_mpf(c):
    if isinstance(c, Fraction):
        return mpf(c.numerator) / c.denominator
    return mpf(c)


def _snap(alpha):
    return mpmath.nint(2 * alpha) / 2


def empirical_fit(coeffs: Sequence, scaling: str = "ogf", depth: int = DEFAULT_DEPTH,
                  window: int = 16, stride: int = 2, alpha=None, rho=None,
                  precision_bits: int = FIT_PRECISION) -> FitResult:
    """Estimate ``(rho, alpha, K)`` from exact coefficients ``coeffs[0..N]``.

    ``coeffs`` are counts; with ``scaling='egf'`` they are divided by ``n!``
    first.  The constant is extracted with ``alpha`` snapped to the nearest
    half-integer unless ``alpha`` is given; ``rho`` likewise defaults to the
    fitted value.
    """
    n_max = len(coeffs) - 1
    need = max(MIN_TERMS, 2 * window + stride * depth + 3)
    if n_max + 1 < need:
        raise FitError(f"need at least {need} terms, got {n_max + 1}")
    with mpmath.workprec(precision_bits):
        a = [_to_mpf(c) for c in coeffs]
        span = window
        if scaling == "egf":
            a = [v / mpmath.factorial(n) for n, v in enumerate(a)]
        elif scaling != "ogf":
            raise ValueError("scaling must be 'ogf' or 'egf'")
        if any(v <= 0 for v in a[n_max - 2 * window - stride * depth:]):
            raise FitError("coefficients in the fit window must be positive")
        logs = [mpmath.log(v) if v > 0 else None for v in a]
        # stride 2 keeps a period-2 component from being amplified
        first = n_max - window - stride * depth
        ns = list(range(first, n_max + 1))
        ratio = {n: a[n] / a[n - 1] for n in ns}
        ends = ns[stride * depth:]

        def extrapolate(values, end):
            pts = list(range(end - stride * depth, end + 1, stride))
            return richardson([values[n] for n in pts], pts, depth)

        growths = [extrapolate(ratio, n) for n in ends]
        rho_hat = 1 / growths[-1]
        # exponent from log(a_n rho^n) over a span, which damps oscillating
        # subdominant terms far better than a second difference does
        lr = mpmath.log(rho_hat)
        beta = {n: (logs[n] - logs[n - span] + span * lr) / mpmath.log(mpf(n) / (n - span))
                for n in ns}
        alphas = [extrapolate(beta, n) + 1 for n in ends]
        alpha_hat = alphas[-1]
        alpha_used = mpf(alpha) if alpha is not None else _snap(alpha_hat)
        rho_used = mpf(rho) if rho is not None else rho_hat
        consts = {n: a[n] * mpf(n) ** (1 - alpha_used) * rho_used ** n for n in ns}
        ks = [extrapolate(consts, n) for n in ends]
        table = list(zip(ends, (1 / g for g in growths), alphas, ks))
        tail = ks[-4:]
        diffs = [abs(y - x) for x, y in zip(tail, tail[1:])]
        stable = all(d <= abs(tail[-1]) * mpf(10) ** -4 for d in diffs)
        return FitResult(rho_hat, alpha_hat, ks[-1], n_max, scaling, table, stable, alpha_used)


# -- reconciliation ----------------------------------------------------------

_SIMPLE = [Fraction(p, q) for q in range(1, 13) for p in range(1, 49)]


def _rational_factor(x, tol=mpf("1e-4")):
    """Nearest ``p/q`` (q <= 12) within relative ``tol``, else ``None``.

    Printed constants carry five or six digits, so a genuine factor shows up
    well inside ``tol``; a looser window matches almost anything.
    """
    best = None
    for f in _SIMPLE:
        err = abs(x / (mpf(f.numerator) / f.denominator) - 1)
        if err < tol and (best is None or err < best[1]):
            best = (f, err)
    return best[0] if best else None


@dataclass
class Reconciliation:
    name: str
    analytic: mpf
    empirical: mpf
    printed: mpf | None
    notes: list = field(default_factory=list)

    @property
    def empirical_rel_error(self):
        return abs(self.empirical / self.analytic - 1)

    @property
    def printed_factor(self):
        """``printed / analytic``."""
        if self.printed is None:
            return None
        return self.printed / self.analytic

    @property
    def rational_factor(self):
        f = self.printed_factor
        return None if f is None else _rational_factor(f)

    @property
    def consistent(self) -> bool:
        return self.empirical_rel_error < mpf("0.02")

    def to_dict(self) -> dict:
        f = self.printed_factor
        rf = self.rational_factor
        return {"name": self.name,
                "analytic": mpmath.nstr(self.analytic, 10),
                "empirical": mpmath.nstr(self.empirical, 10),
                "empirical_rel_error": mpmath.nstr(self.empirical_rel_error, 4),
                "printed": None if self.printed is None else mpmath.nstr(self.printed, 10),
                "printed_over_analytic": None if f is None else mpmath.nstr(f, 8),
                "printed_rel_error": None if f is None else mpmath.nstr(abs(f - 1), 4),
                "rational_factor": None if rf is None else str(rf),
                "discrepancy": f is not None and abs(f - 1) > mpf("1e-3"),
                "consistent": self.consistent,
                "notes": list(self.notes)}


def reconcile(law: AsymptoticLaw, fit: FitResult, printed=None, name: str = "") -> Reconciliation:
    """Analytic constant vs empirical fit vs a printed value.

    Comparisons are of coefficient constants ``K`` in ``K n^(alpha-1) rho^(-n)``.
    Inputs are not modified.
    """
    if law.scaling != fit.scaling:
        raise ValueError("law and fit use different scalings")
    r = Reconciliation(name or law.name, law.constant, fit.constant,
                       None if printed is None else mpf(printed))
    if abs(fit.rho / mpf(law.rho) - 1) > mpf("1e-6"):
        r.notes.append("fitted rho differs from the analytic location by "
                       + mpmath.nstr(abs(fit.rho / mpf(law.rho) - 1), 3))
    if not fit.stable:
        r.notes.append("constant estimates still drifting across the fit window")
    rf = r.rational_factor
    if rf is not None and rf != 1:
        r.notes.append(f"printed value is {rf} times the transfer constant")
    return r


def reconcile_theorem(theorem: int, order: int = 256, precision_bits: int = 256) -> list[Reconciliation]:
    """Build the reconciliation table for the graph (1) or map (2) constants."""
    from . import graphs, maps, singular
    out = []
    if theorem == 1:
        rep = singular.graph_constants_report(precision_bits)
        g32 = mpf(-3) / 2
        specs = [
            ("b (2-connected graphs)", "2conn", rep["B3"], rep["rho_b"], "0.00016215"),
            ("c (connected graphs)", "connected", rep["C3"], rep["rho"], "0.00027194"),
            ("g (all graphs)", "all", rep["G3"], rep["rho"], "0.00027205"),
        ]
        for name, fam, amp, rho, printed in specs:
            law = AsymptoticLaw(amp, g32, rho, "egf", name)
            fit = empirical_fit(graphs.egf_sequence(fam, order), "egf", rho=rho)
            out.append(reconcile(law, fit, printed, name))
    elif theorem == 2:
        rep = singular.map_constants_report(precision_bits)
        h = mpf(-1) / 2
        specs = [
            ("b (2-connected maps)", "2conn-maps", -rep["b1"], rep["sigma_b"], "0.071674"),
            ("m (all maps)", "maps", -rep["m1"], rep["sigma"], "0.12596"),
        ]
        for name, fam, amp, rho, printed in specs:
            law = AsymptoticLaw(amp, h, rho, "ogf", name)
            fit = empirical_fit(maps.map_sequence(fam, order), "ogf", rho=rho)
            out.append(reconcile(law, fit, printed, name))
    else:
        raise ValueError("theorem must be 1 or 2")
    return out


def triangulation_law() -> AsymptoticLaw:
    """Closed-form law for labelled 3-connected chordal planar graphs.

    ``t_n / n! ~ t n^(-5/2) (27/4)^n`` with ``t = 4 sqrt(3) / (3^10 sqrt(pi))``;
    the amplitude is scaled by ``Gamma(-3/2)`` so that ``constant == t``.
    """
    t = 4 * mpmath.sqrt(3) / (mpf(3) ** 10 * mpmath.sqrt(mpmath.pi))
    g = mpf(-3) / 2
    return AsymptoticLaw(t * mpmath.gamma(g), g, mpf(4) / 27, "egf", "t (3-connected graphs)")
