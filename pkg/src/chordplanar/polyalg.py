"""Exact integer polynomials in one and two variables.

Resultants use the subresultant polynomial remainder sequence over any
coefficient ring that supports exact division (integers, ``Z[z]``, or
``Z[z, w]``), which keeps intermediate coefficients from exploding.
Bivariate products and exact quotients go through a Kronecker substitution
``w -> t^K`` onto flint's ``fmpz_poly``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from flint import fmpz, fmpz_poly

from .series import TruncatedSeries


class PolynomialError(ValueError):
    pass


class InexactDivisionError(PolynomialError):
    pass


# -- univariate -------------------------------------------------------------

class IntPolynomial:
    """Dense polynomial with integer coefficients, ascending degree."""

    __slots__ = ("_p",)

    def __init__(self, coeffs: Sequence[int] | fmpz_poly = ()):
        self._p = coeffs if isinstance(coeffs, fmpz_poly) else fmpz_poly([int(c) for c in coeffs])

    @property
    def flint(self) -> fmpz_poly:
        return self._p

    @property
    def coeffs(self) -> list[int]:
        return [int(c) for c in self._p.coeffs()]

    @property
    def degree(self) -> int:
        return self._p.degree()

    @property
    def leading_coefficient(self) -> int:
        return int(self._p.leading_coefficient())

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._p == other._p
        if isinstance(other, int):
            return self._p == other
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs})"

    def __str__(self) -> str:
        return str(self._p)

    def _lift(self, other) -> fmpz_poly:
        return other._p if isinstance(other, IntPolynomial) else fmpz_poly([int(other)])

    def __add__(self, other):
        return IntPolynomial(self._p + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return IntPolynomial(self._p - self._lift(other))

    def __rsub__(self, other):
        return IntPolynomial(self._lift(other) - self._p)

    def __neg__(self):
        return IntPolynomial(-self._p)

    def __mul__(self, other):
        return IntPolynomial(self._p * self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return IntPolynomial(self._p ** e)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(self._p.derivative())

    def exact_div(self, other) -> "IntPolynomial":
        q, r = divmod(self._p, self._lift(other))
        if not r.is_zero():
            raise InexactDivisionError("polynomial division leaves a remainder")
        return IntPolynomial(q)

    def divides(self, other: "IntPolynomial") -> bool:
        """True if ``self`` divides ``other`` exactly in ``Z[z]``."""
        if self.is_zero():
            return other.is_zero()
        return divmod(other._p, self._p)[1].is_zero()

    def content(self) -> int:
        return reduce(gcd, (abs(c) for c in self.coeffs), 0)

    def primitive(self) -> "IntPolynomial":
        c = self.content()
        if c == 0:
            return self
        p = self.exact_div(c)
        return -p if p.leading_coefficient < 0 else p

    def squarefree_part(self) -> "IntPolynomial":
        if self.degree < 1:
            return self
        g = self._p.gcd(self._p.derivative())
        return IntPolynomial(divmod(self._p, g)[0]).primitive()

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def strip_z(self) -> tuple[int, "IntPolynomial"]:
        """Split off the largest power of ``z``: returns ``(k, p / z^k)``."""
        cs = self.coeffs
        k = next((i for i, c in enumerate(cs) if c), 0)
        return k, IntPolynomial(cs[k:])

    def to_json(self) -> list:
        return [[i, 0, str(c)] for i, c in enumerate(self.coeffs) if c]


# -- bivariate ------------------------------------------------------------

class BiPolynomial:
    """Integer polynomial in ``(z, w)``; stored as ``fmpz_poly`` rows in ``z``
    indexed by the power of ``w``.  Trailing zero rows are trimmed."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence = ()):
        rows = [r if isinstance(r, fmpz_poly) else fmpz_poly([int(c) for c in r]) for r in rows]
        while rows and rows[-1].is_zero():
            rows.pop()
        self._rows = tuple(rows)

    @classmethod
    def from_terms(cls, terms: dict) -> "BiPolynomial":
        """From ``{(z_exp, w_exp): coefficient}``."""
        if not terms:
            return cls()
        dw = max(j for _, j in terms)
        dz = max(i for i, _ in terms)
        rows = [[0] * (dz + 1) for _ in range(dw + 1)]
        for (i, j), c in terms.items():
            rows[j][i] += int(c)
        return cls(rows)

    @classmethod
    def z(cls) -> "BiPolynomial":
        return cls([[0, 1]])

    @classmethod
    def w(cls) -> "BiPolynomial":
        return cls([[], [1]])

    @classmethod
    def constant(cls, c) -> "BiPolynomial":
        return cls([[int(c)]])

    @property
    def rows(self) -> tuple:
        return self._rows

    def terms(self) -> dict:
        return {(i, j): int(c) for j, row in enumerate(self._rows)
                for i, c in enumerate(row.coeffs()) if c}

    def coeff(self, i: int, j: int) -> int:
        if j >= len(self._rows):
            return 0
        row = self._rows[j]
        return int(row[i]) if i <= row.degree() else 0

    @property
    def degree_w(self) -> int:
        return len(self._rows) - 1

    @property
    def degree_z(self) -> int:
        return max((r.degree() for r in self._rows), default=-1)

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPolynomial.constant(other)
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(tuple(sorted(self.terms().items())))

    def __repr__(self) -> str:
        return f"BiPolynomial({self.terms()})"

    def _coerce(self, other) -> "BiPolynomial":
        if isinstance(other, BiPolynomial):
            return other
        if isinstance(other, IntPolynomial):
            return BiPolynomial([other.flint])
        return BiPolynomial.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self._rows), len(other._rows))
        zero = fmpz_poly([])
        a = self._rows + (zero,) * (n - len(self._rows))
        b = other._rows + (zero,) * (n - len(other._rows))
        return BiPolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return BiPolynomial([-r for r in self._rows])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return BiPolynomial()
        k = self.degree_z + other.degree_z + 1
        return BiPolynomial._unkron(self._kron(k) * other._kron(k), k)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise PolynomialError("negative power")
        result, base = BiPolynomial.constant(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _kron(self, k: int) -> fmpz_poly:
        flat = []
        for row in self._rows:
            cs = row.coeffs()
            flat.extend(cs)
            flat.extend([0] * (k - len(cs)))
        return fmpz_poly(flat)

    @staticmethod
    def _unkron(p: fmpz_poly, k: int) -> "BiPolynomial":
        cs = p.coeffs()
        return BiPolynomial([cs[i:i + k] for i in range(0, len(cs), k)])

    def exact_div(self, other) -> "BiPolynomial":
        """Quotient in ``Z[z, w]``; raises if ``other`` does not divide ``self``."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return BiPolynomial()
        k = self.degree_z + 1
        q, r = divmod(self._kron(k), other._kron(k))
        if not r.is_zero():
            raise InexactDivisionError("bivariate division leaves a remainder")
        quotient = BiPolynomial._unkron(q, k)
        if quotient * other != self:
            raise InexactDivisionError("bivariate division leaves a remainder")
        return quotient

    def divides(self, other: "BiPolynomial") -> bool:
        try:
            other.exact_div(self)
        except InexactDivisionError:
            return False
        return True

    def swap(self) -> "BiPolynomial":
        """Exchange the roles of ``z`` and ``w``."""
        return BiPolynomial.from_terms({(j, i): c for (i, j), c in self.terms().items()})

    def partial_w(self) -> "BiPolynomial":
        return BiPolynomial([j * r for j, r in enumerate(self._rows)][1:])

    def partial_z(self) -> "BiPolynomial":
        return BiPolynomial([r.derivative() for r in self._rows])

    def content(self) -> int:
        return reduce(gcd, (abs(c) for c in self.terms().values()), 0)

    def primitive(self) -> "BiPolynomial":
        c = self.content()
        if c == 0:
            return self
        p = BiPolynomial([r / c for r in self._rows])
        lead = self._rows[-1]
        return -p if lead[lead.degree()] < 0 else p

    def w_coefficients(self) -> list[IntPolynomial]:
        """Coefficients in ``w`` as polynomials in ``z`` (ascending)."""
        return [IntPolynomial(r) for r in self._rows]

    def at_z(self, z0) -> IntPolynomial | list:
        """Specialise ``z``; integer values give an :class:`IntPolynomial` in ``w``."""
        vals = [IntPolynomial(r)(z0) for r in self._rows]
        if all(isinstance(v, int) for v in vals):
            return IntPolynomial(vals)
        return vals

    def __call__(self, z0, w0):
        acc = 0 * w0
        for r in reversed(self._rows):
            acc = acc * w0 + IntPolynomial(r)(z0)
        return acc

    def substitute_series(self, s: TruncatedSeries) -> TruncatedSeries:
        """``p(z, s(z))`` as a truncated series of the same order as ``s``."""
        n = s.order
        acc = TruncatedSeries.zero(n)
        for r in reversed(self._rows):
            acc = acc * s + TruncatedSeries([int(c) for c in r.coeffs()][:n + 1], n)
        return acc

    def to_json(self) -> list:
        return [[i, j, str(c)] for (i, j), c in sorted(self.terms().items(), key=lambda t: (t[0][1], t[0][0]))]

    @classmethod
    def from_json(cls, data) -> "BiPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_terms({(int(i), int(j)): int(c) for i, j, c in data})


# -- ring helpers for the remainder sequence ------------------------------

def _is_zero(c) -> bool:
    if isinstance(c, (int, fmpz)):
        return c == 0
    return c.is_zero()


def _exact(a, b):
    if isinstance(a, (int, fmpz)) and isinstance(b, (int, fmpz)):
        q, r = divmod(int(a), int(b))
        if r:
            raise InexactDivisionError(f"{a} is not divisible by {b}")
        return q
    if isinstance(a, BiPolynomial) or isinstance(b, BiPolynomial):
        if not isinstance(a, BiPolynomial):
            a = BiPolynomial.constant(0) + a
        return a.exact_div(b)
    if isinstance(a, (int, fmpz)):
        a = fmpz_poly([int(a)])
    if isinstance(b, (int, fmpz)):
        b = fmpz_poly([int(b)])
    q, r = divmod(a, b)
    if not r.is_zero():
        raise InexactDivisionError("coefficient division leaves a remainder")
    return q


def _trim(p: list) -> list:
    while p and _is_zero(p[-1]):
        p.pop()
    return p


def _ring_pow(x, e: int, one):
    result = one
    for _ in range(e):
        result = result * x
    return result


def pseudo_remainder(a: list, b: list) -> list:
    """``lc(b)^(deg a - deg b + 1) * a mod b`` for coefficient lists (ascending)."""
    db = len(b) - 1
    r = list(a)
    lc = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        t = r[-1]
        shift = len(r) - 1 - db
        r = [lc * c for c in r]
        for k, bk in enumerate(b):
            r[shift + k] = r[shift + k] - t * bk
        r.pop()
        _trim(r)
        e -= 1
    if e > 0 and r:
        f = _ring_pow(lc, e, 1)
        r = [f * c for c in r]
    return r


def subresultant(a: Sequence, b: Sequence, one=1):
    """Resultant of two polynomials given as coefficient lists (ascending) over a
    ring with exact division, via the subresultant remainder sequence."""
    a, b = _trim(list(a)), _trim(list(b))
    if not a or not b:
        raise PolynomialError("resultant of the zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    if da < 1 and db < 1:
        raise PolynomialError("resultant needs positive degree in the eliminated variable")
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da % 2 and db % 2:
            sign = -sign
    if db == 0:
        return _signed(_ring_pow(b[0], da, one), sign)
    g = h = one
    while True:
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_remainder(a, b)
        if not r:
            return _signed(one * 0, 1)
        a = b
        divisor = g * _ring_pow(h, delta, one)
        b = [_exact(c, divisor) for c in r]
        da, db = len(a) - 1, len(b) - 1
        g = a[-1]
        h = _exact(_ring_pow(g, delta, one), _ring_pow(h, delta - 1, one)) if delta >= 1 \
            else h
        if db == 0:
            break
    h = _exact(_ring_pow(b[0], da, one), _ring_pow(h, da - 1, one))
    return _signed(h, sign)


def _signed(x, sign):
    return x if sign > 0 else -x


def _in_variable(p: BiPolynomial, eliminate: str) -> BiPolynomial:
    if eliminate == "w":
        return p
    if eliminate == "z":
        return p.swap()
    raise PolynomialError(f"unknown variable {eliminate!r}; use 'z' or 'w'")


def resultant(p, q, eliminate: str = "w") -> IntPolynomial:
    """Resultant of two bivariate polynomials with respect to ``eliminate``;
    the result is a polynomial in the other variable."""
    if isinstance(p, IntPolynomial) and isinstance(q, IntPolynomial):
        if p.is_zero() or q.is_zero():
            raise PolynomialError("resultant of the zero polynomial")
        return IntPolynomial([subresultant(p.coeffs, q.coeffs)])
    p, q = _in_variable(p, eliminate), _in_variable(q, eliminate)
    if p.is_zero() or q.is_zero():
        raise PolynomialError("resultant of the zero polynomial")
    r = subresultant(list(p.rows), list(q.rows), fmpz_poly([1]))
    return IntPolynomial(r if isinstance(r, fmpz_poly) else fmpz_poly([int(r)]))


def discriminant(p: BiPolynomial | IntPolynomial, var: str = "w") -> IntPolynomial:
    """``(-1)^(d(d-1)/2) res(p, p') / lc(p)`` with respect to ``var``."""
    if isinstance(p, IntPolynomial):
        d = p.degree
        if d < 2:
            raise PolynomialError("discriminant needs degree >= 2")
        r = subresultant(p.coeffs, p.derivative().coeffs)
        r = _exact(r, p.leading_coefficient)
        return IntPolynomial([r if d * (d - 1) // 2 % 2 == 0 else -r])
    pv = _in_variable(p, var)
    d = pv.degree_w
    if d < 2:
        raise PolynomialError("discriminant needs degree >= 2")
    r = resultant(pv, pv.partial_w(), "w")
    r = r.exact_div(IntPolynomial(pv.rows[-1]))
    return r if d * (d - 1) // 2 % 2 == 0 else -r


@dataclass(frozen=True)
class AnnihilatorCheck:
    ok: bool
    order: int
    first_failure: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def annihilator_check(p: BiPolynomial, s: TruncatedSeries) -> AnnihilatorCheck:
    """Is ``p(z, s(z)) = 0`` to the order of ``s``?"""
    val = p.substitute_series(s)
    first = val.valuation()
    return AnnihilatorCheck(first is None, s.order, first)


def cofactor(divisor, dividend):
    """Exact quotient ``dividend / divisor``, or ``None`` if it does not exist."""
    try:
        return dividend.exact_div(divisor)
    except InexactDivisionError:
        return None


# -- annihilators for the map series --------------------------------------

def derive_M_annihilator(p_b: BiPolynomial) -> BiPolynomial:
    """Annihilator of ``M = B(z (1 + M)^2)`` obtained from one of ``B``.

    ``p_b(z (1 + w)^2, w)`` vanishes on ``w = M``; the result is made primitive
    with positive leading coefficient.
    """
    w = BiPolynomial.w()
    inner = BiPolynomial.z() * (1 + w) ** 2
    out = BiPolynomial()
    for (i, j), c in p_b.terms().items():
        out = out + c * inner ** i * w ** j
    return out.primitive()


def derive_B_annihilator() -> BiPolynomial:
    """Eliminate the ternary-tree unknown from the 2-connected map system.

    With ``s = S(z^3 D^6)`` the system is ``s = z^3 D^6 (1 + s)^3`` and
    ``D - 1 - z^2 D^5 (1 + s) = 0``; the resultant in ``s`` is a polynomial in
    ``(z, D)``.  Substituting ``D = B/z`` and clearing the power of ``z`` gives
    a polynomial in ``(z, B)`` (with ``B`` in the second slot).
    """
    z, d = BiPolynomial.z(), BiPolynomial.w()
    k = z ** 3 * d ** 6
    tree = [-k, 1 - 3 * k, -3 * k, -k]
    m = z ** 2 * d ** 5
    core = [d - 1 - m, -m]
    r = subresultant(tree, core, BiPolynomial.constant(1))
    # D -> B/z, then multiply through by z^e to clear denominators
    terms = r.terms()
    e = max(max(j - i for i, j in terms), 0)
    cleared = {(i - j + e, j): c for (i, j), c in terms.items()}
    out = BiPolynomial.from_terms(cleared)
    # drop any common power of z
    low = min(i for i, _ in out.terms())
    if low:
        out = BiPolynomial.from_terms({(i - low, j): c for (i, j), c in out.terms().items()})
    return out.primitive()
