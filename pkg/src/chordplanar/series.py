"""Truncated formal power series with exact rational coefficients.

Two containers live here:

* :class:`TruncatedSeries` -- univariate series ``a_0 + a_1 z + ... + a_N z^N``.
* :class:`BivariateSeries` -- series in ``x`` to order ``N`` whose coefficients
  are polynomials in ``y`` (the edge-marking variable).

Both are immutable.  Arithmetic is exact; the heavy lifting (truncated
products, exponentials, composition) is delegated to FLINT's ``fmpq_poly`` /
``fmpq_series`` so that orders in the low hundreds stay interactive.

Whether a series is read as an EGF or an OGF is a convention of the caller;
:meth:`TruncatedSeries.egf_counts` converts to ``n! a_n``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from flint import ctx, fmpq, fmpq_poly, fmpq_series

__all__ = [
    "SeriesError",
    "NonContractionError",
    "TruncatedSeries",
    "BivariateSeries",
    "mul",
    "compose",
    "exp",
    "derivative_x",
    "integrate_x",
    "solve_fixed_point",
    "solve_newton",
]


class SeriesError(ValueError):
    """Raised for operations that are undefined on truncated series."""


class NonContractionError(SeriesError):
    """The map handed to :func:`solve_fixed_point` is not a contraction."""


def _q(c) -> fmpq:
    if isinstance(c, fmpq):
        return c
    if isinstance(c, Fraction):
        return fmpq(c.numerator, c.denominator)
    if isinstance(c, int):
        return fmpq(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def _frac(c: fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _flint_series(poly: fmpq_poly, n: int) -> fmpq_series:
    # fmpq_series precision is capped by a process-wide setting
    if ctx.cap < n:
        ctx.cap = n
    return fmpq_series(poly, prec=n)


def _from_flint_series(s: fmpq_series, n: int) -> fmpq_poly:
    return fmpq_poly(s.coeffs()).truncate(n)


class TruncatedSeries:
    """Power series known exactly up to and including ``z**order``."""

    __slots__ = ("_poly", "_order")

    def __init__(self, coeffs: Sequence = (), order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("order must be >= 0")
        self._poly = fmpq_poly([_q(c) for c in coeffs[: order + 1]])
        self._order = order

    @classmethod
    def _wrap(cls, poly: fmpq_poly, order: int) -> "TruncatedSeries":
        out = cls.__new__(cls)
        out._poly = poly.truncate(order + 1)
        out._order = order
        return out

    @classmethod
    def var(cls, order: int) -> "TruncatedSeries":
        """The series ``z`` (zero when ``order == 0``)."""
        return cls._wrap(fmpq_poly([0, 1]), order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls._wrap(fmpq_poly([_q(c)]), order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls._wrap(fmpq_poly([]), order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def poly(self) -> fmpq_poly:
        return self._poly

    @property
    def coeffs(self) -> list[Fraction]:
        raw = self._poly.coeffs()
        out = [_frac(c) for c in raw]
        out.extend([Fraction(0)] * (self._order + 1 - len(out)))
        return out

    def __len__(self) -> int:
        return self._order + 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self._order:
            raise IndexError(f"coefficient {n} outside 0..{self._order}")
        if n >= self._poly.length():
            return Fraction(0)
        return _frac(self._poly[n])

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._poly == other._poly

    def __hash__(self):
        return hash((self._order, tuple(self.coeffs)))

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self._order >= 8 else ""
        return f"TruncatedSeries([{terms}{more}], order={self._order})"

    # -- order management -------------------------------------------------
    def with_order(self, order: int) -> "TruncatedSeries":
        """Truncate, or zero-pad the unknown tail, to a new order."""
        return TruncatedSeries._wrap(self._poly, order)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient (``None`` for zero)."""
        for n, c in enumerate(self._poly.coeffs()):
            if c != 0:
                return n
        return None

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``z**k`` keeping the order."""
        if k < 0:
            raise SeriesError("negative shift; use divide_by_z")
        return TruncatedSeries._wrap(self._poly.left_shift(k), self._order)

    def divide_by_z(self, k: int = 1) -> "TruncatedSeries":
        """Exact division by ``z**k``; the order drops by ``k``."""
        v = self.valuation()
        if v is not None and v < k:
            raise SeriesError(f"series not divisible by z^{k}")
        if self._order < k:
            raise SeriesError("nothing left after division")
        return TruncatedSeries._wrap(self._poly.right_shift(k), self._order - k)

    shift_x = shift
    divide_by_x = divide_by_z

    # -- ring operations --------------------------------------------------
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other._order != self._order:
                raise SeriesError(
                    f"order mismatch: {self._order} vs {other._order}")
            return other
        return TruncatedSeries.constant(other, self._order)

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries._wrap(self._poly + other._poly, self._order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap(-self._poly, self._order)

    def __sub__(self, other):
        other = self._coerce(other)
        return TruncatedSeries._wrap(self._poly - other._poly, self._order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            other = self._coerce(other)
            n = self._order + 1
            return TruncatedSeries._wrap(self._poly.mul_low(other._poly, n), self._order)
        return TruncatedSeries._wrap(self._poly * _q(other), self._order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * self._coerce(other).inverse()
        return TruncatedSeries._wrap(self._poly / _q(other), self._order)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise SeriesError("only nonnegative integer powers")
        n = self._order + 1
        return TruncatedSeries._wrap(self._poly.pow_trunc(e, n), self._order)

    # -- analytic operations ----------------------------------------------
    def inverse(self) -> "TruncatedSeries":
        if self._poly.length() == 0 or self._poly[0] == 0:
            raise SeriesError("series with zero constant term is not invertible")
        n = self._order + 1
        return TruncatedSeries._wrap(
            _from_flint_series(_flint_series(self._poly, n).inv(), n), self._order)

    def exp(self) -> "TruncatedSeries":
        if self._poly.length() and self._poly[0] != 0:
            raise SeriesError("exp needs a zero constant term")
        n = self._order + 1
        return TruncatedSeries._wrap(
            _from_flint_series(_flint_series(self._poly, n).exp(), n), self._order)

    def log(self) -> "TruncatedSeries":
        if self._poly.length() == 0 or self._poly[0] != 1:
            raise SeriesError("log needs constant term 1")
        n = self._order + 1
        return TruncatedSeries._wrap(
            _from_flint_series(_flint_series(self._poly, n).log(), n), self._order)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(z))``; ``inner`` must have a zero constant term."""
        inner = self._coerce(inner)
        if inner._poly.length() and inner._poly[0] != 0:
            raise SeriesError("inner series must have zero constant term")
        n = self._order + 1
        if inner._poly.length() == 0:
            return TruncatedSeries.constant(self[0], self._order)
        outer_s = _flint_series(self._poly, n)
        inner_s = _flint_series(inner._poly, n)
        return TruncatedSeries._wrap(_from_flint_series(outer_s(inner_s), n), self._order)

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative; the last coefficient is lost (order drops by one)."""
        if self._order == 0:
            raise SeriesError("derivative of an order-0 series is unknown")
        return TruncatedSeries._wrap(self._poly.derivative(), self._order - 1)

    def integrate(self) -> "TruncatedSeries":
        """Termwise antiderivative with zero constant term (order grows by one)."""
        return TruncatedSeries._wrap(self._poly.integral(), self._order + 1)

    def evaluate(self, z):
        """Horner evaluation of the truncated polynomial at a numeric point.

        ``z`` may be an int, Fraction (exact result) or an mpmath number.
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + (c if isinstance(z, (int, Fraction)) else _mp(c))
        return acc

    def egf_counts(self) -> list[int]:
        """``n! * a_n`` for every coefficient; raises if any is not an integer."""
        out = []
        for n, c in enumerate(self.coeffs):
            v = c * math.factorial(n)
            if v.denominator != 1:
                raise SeriesError(f"n!*[z^{n}] = {v} is not an integer")
            out.append(int(v))
        return out

    def ogf_counts(self) -> list[int]:
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise SeriesError(f"[z^{n}] = {c} is not an integer")
            out.append(int(c))
        return out

    def to_json(self) -> list[dict]:
        return [{"n": n, "numerator": c.numerator, "denominator": c.denominator}
                for n, c in enumerate(self.coeffs)]


def _mp(c: Fraction):
    import mpmath
    return mpmath.mpf(c.numerator) / c.denominator


# -- functional aliases ---------------------------------------------------

def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} vs {b.order}")
    return a * b


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    return outer.compose(inner)


def exp(a):
    return a.exp()


def derivative_x(a):
    return a.derivative_x() if isinstance(a, BivariateSeries) else a.derivative()


def integrate_x(a):
    return a.integrate_x() if isinstance(a, BivariateSeries) else a.integrate()


# -- bivariate series -------------------------------------------------------

def _ypoly(c) -> fmpq_poly:
    if isinstance(c, fmpq_poly):
        return c
    return fmpq_poly([_q(v) for v in c])


class BivariateSeries:
    """Series in ``x`` to order ``N``; coefficient ``n`` is a polynomial in ``y``.

    Products use Kronecker substitution (``x -> t**K``, ``y -> t``) so one FLINT
    multiplication replaces the double loop over coefficient pairs.
    """

    __slots__ = ("_c", "_order")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [_ypoly(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        coeffs = coeffs[: order + 1]
        coeffs.extend(fmpq_poly([]) for _ in range(order + 1 - len(coeffs)))
        self._c = coeffs
        self._order = order

    @classmethod
    def _wrap(cls, polys: list, order: int) -> "BivariateSeries":
        out = cls.__new__(cls)
        polys = polys[: order + 1]
        if len(polys) < order + 1:
            polys = polys + [fmpq_poly([]) for _ in range(order + 1 - len(polys))]
        out._c = polys
        out._order = order
        return out

    @classmethod
    def x(cls, order: int) -> "BivariateSeries":
        return cls._wrap([fmpq_poly([]), fmpq_poly([1])], order)

    @classmethod
    def y(cls, order: int) -> "BivariateSeries":
        return cls._wrap([fmpq_poly([0, 1])], order)

    @classmethod
    def constant(cls, c, order: int) -> "BivariateSeries":
        return cls._wrap([_ypoly(c) if not isinstance(c, (int, Fraction, fmpq))
                          else fmpq_poly([_q(c)])], order)

    @classmethod
    def from_univariate(cls, s: TruncatedSeries) -> "BivariateSeries":
        return cls._wrap([fmpq_poly([c]) for c in s.poly.coeffs()], s.order)

    @property
    def order(self) -> int:
        return self._order

    def coeff(self, n: int) -> list[Fraction]:
        """Coefficients (ascending in ``y``) of the polynomial at ``x**n``."""
        if n < 0 or n > self._order:
            raise IndexError(f"coefficient {n} outside 0..{self._order}")
        return [_frac(c) for c in self._c[n].coeffs()]

    def ypoly(self, n: int) -> fmpq_poly:
        return self._c[n]

    def y_degree(self, n: int) -> int:
        return self._c[n].degree()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._order == other._order and all(
            a == b for a, b in zip(self._c, other._c))

    def __repr__(self) -> str:
        return f"BivariateSeries(order={self._order}, {[str(c) for c in self._c[:4]]}...)"

    def with_order(self, order: int) -> "BivariateSeries":
        return BivariateSeries._wrap(list(self._c), order)

    def _coerce(self, other) -> "BivariateSeries":
        if isinstance(other, BivariateSeries):
            if other._order != self._order:
                raise SeriesError(f"order mismatch: {self._order} vs {other._order}")
            return other
        return BivariateSeries.constant(other, self._order)

    def __add__(self, other):
        other = self._coerce(other)
        return BivariateSeries._wrap([a + b for a, b in zip(self._c, other._c)], self._order)

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries._wrap([-a for a in self._c], self._order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def _max_ydeg(self) -> int:
        return max((c.degree() for c in self._c), default=-1)

    def __mul__(self, other):
        if not isinstance(other, BivariateSeries):
            if isinstance(other, fmpq_poly):
                return BivariateSeries._wrap([a * other for a in self._c], self._order)
            return BivariateSeries._wrap([a * _q(other) for a in self._c], self._order)
        other = self._coerce(other)
        da, db = self._max_ydeg(), other._max_ydeg()
        if da < 0 or db < 0:
            return BivariateSeries._wrap([], self._order)
        k = da + db + 1
        length = (self._order + 1) * k
        prod = _pack(self._c, k).mul_low(_pack(other._c, k), length)
        return BivariateSeries._wrap(_unpack(prod, k, self._order + 1), self._order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, BivariateSeries):
            return self * self._coerce(other).inverse()
        return BivariateSeries._wrap([a / _q(other) for a in self._c], self._order)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise SeriesError("only nonnegative integer powers")
        out = BivariateSeries.constant(1, self._order)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def inverse(self) -> "BivariateSeries":
        """Reciprocal; ``[x^0]`` must be a nonzero constant polynomial."""
        c0 = self._c[0]
        if c0.degree() != 0:
            raise SeriesError("reciprocal needs a nonzero constant x^0 coefficient")
        g = BivariateSeries.constant(1 / c0[0], 0)
        m = 0
        while m < self._order:
            m = min(2 * m + 1, self._order)
            g = g.with_order(m)
            g = g + g * (1 - self.with_order(m) * g)
        return g.with_order(self._order)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def shift_x(self, k: int) -> "BivariateSeries":
        """Multiply by ``x**k`` keeping the order."""
        return BivariateSeries._wrap([fmpq_poly([])] * k + self._c, self._order)

    def mul_y(self, k: int = 1) -> "BivariateSeries":
        """Multiply by ``y**k``."""
        return BivariateSeries._wrap([c.left_shift(k) for c in self._c], self._order)

    def mul_xy(self, other: "BivariateSeries") -> "BivariateSeries":
        return self * other

    def exp_xy(self) -> "BivariateSeries":
        """Exponential in ``x``; needs ``[x^0] = 0`` (as a polynomial in y)."""
        if not self._c[0].is_zero():
            raise SeriesError("exp needs a zero x-constant term")
        a = self._c
        out = [fmpq_poly([1])]
        # n E_n = sum_{k=1}^{n} k A_k E_{n-k}
        for n in range(1, self._order + 1):
            acc = fmpq_poly([])
            for k in range(1, n + 1):
                if not a[k].is_zero():
                    acc += a[k] * out[n - k] * k
            out.append(acc / n)
        return BivariateSeries._wrap(out, self._order)

    def partial_y(self) -> "BivariateSeries":
        return BivariateSeries._wrap([c.derivative() for c in self._c], self._order)

    def integrate_y(self) -> "BivariateSeries":
        """Antiderivative in ``y`` of every coefficient, constant of integration 0."""
        return BivariateSeries._wrap([c.integral() for c in self._c], self._order)

    def divide_by_y(self) -> "BivariateSeries":
        out = []
        for n, c in enumerate(self._c):
            if c.length() and c[0] != 0:
                raise SeriesError(f"[x^{n}] is not divisible by y")
            out.append(c.right_shift(1))
        return BivariateSeries._wrap(out, self._order)

    def derivative_x(self) -> "BivariateSeries":
        if self._order == 0:
            raise SeriesError("derivative of an order-0 series is unknown")
        return BivariateSeries._wrap(
            [self._c[n] * n for n in range(1, self._order + 1)], self._order - 1)

    def integrate_x(self) -> "BivariateSeries":
        return BivariateSeries._wrap(
            [fmpq_poly([])] + [c / (n + 1) for n, c in enumerate(self._c)], self._order + 1)

    def divide_by_x(self, k: int = 1) -> "BivariateSeries":
        if any(not c.is_zero() for c in self._c[:k]):
            raise SeriesError(f"series not divisible by x^{k}")
        return BivariateSeries._wrap(self._c[k:], self._order - k)

    def compose_x(self, inner: "BivariateSeries") -> "BivariateSeries":
        """Substitute ``inner(x, y)`` for ``x``; ``y`` passes through unchanged."""
        inner = self._coerce(inner)
        if not inner._c[0].is_zero():
            raise SeriesError("inner series must have zero x-constant term")
        acc = BivariateSeries._wrap([], self._order)
        for c in reversed(self._c):
            acc = acc * inner + BivariateSeries._wrap([c], self._order)
        return acc

    def at_y(self, value) -> TruncatedSeries:
        """Specialise ``y`` to an exact rational value."""
        v = _q(value)
        vals = []
        for c in self._c:
            acc = fmpq(0)
            for coef in reversed(c.coeffs()):
                acc = acc * v + coef
            vals.append(acc)
        return TruncatedSeries._wrap(fmpq_poly(vals), self._order)

    def egf_profile(self, n: int) -> list[int]:
        """``n! * [x^n]`` as integer coefficients ascending in ``y``."""
        f = math.factorial(n)
        out = []
        for c in self.coeff(n):
            v = c * f
            if v.denominator != 1:
                raise SeriesError(f"n!*[x^{n}] has non-integral coefficient {v}")
            out.append(int(v))
        return out

    def to_json(self) -> list[dict]:
        return [{"n": n,
                 "coeffs": [[m, c.numerator, c.denominator]
                            for m, c in enumerate(self.coeff(n)) if c != 0]}
                for n in range(self._order + 1)]


def _pack(polys: list, k: int) -> fmpq_poly:
    flat = []
    for c in polys:
        cs = c.coeffs()
        flat.extend(cs)
        flat.extend([0] * (k - len(cs)))
    return fmpq_poly(flat)


def _unpack(p: fmpq_poly, k: int, count: int) -> list:
    coeffs = p.coeffs()
    return [fmpq_poly(coeffs[n * k:(n + 1) * k]) for n in range(count)]


# -- fixed points -----------------------------------------------------------

def _as_tuple(x):
    return x if isinstance(x, tuple) else (x,)


def _coefficient(s, n):
    if isinstance(s, BivariateSeries):
        return s.ypoly(n)
    return s[n]


def solve_fixed_point(phi: Callable, order: int, initial, *, check: bool = True):
    """Solve ``X = phi(X)`` for truncated series by repeated substitution.

    ``phi`` receives the current iterate (a series, or a tuple of series for
    a system) and must return something of the same shape and order.  The map
    must gain at least one order of valuation: ``[z^n] phi(X)`` may read only
    ``X``'s coefficients of index ``< n``.  ``initial`` supplies the forced
    constant term(s), as order-0 series or plain constants.

    Pass ``k`` runs at truncation order ``k`` and fixes coefficient ``k``; one
    extra pass at full order certifies the solution.  A coefficient changing
    after it should have settled raises :class:`NonContractionError`.
    """
    single = not isinstance(initial, tuple)
    current = tuple(_seed(s) for s in _as_tuple(initial))
    for k in range(1, order + 1):
        prev = current
        current = _as_tuple(phi(_unwrap(tuple(s.with_order(k) for s in prev), single)))
        for i, (old, new) in enumerate(zip(prev, current)):
            for n in range(k):
                if _coefficient(old, n) != _coefficient(new, n):
                    raise NonContractionError(
                        f"component {i}: coefficient {n} changed in pass {k}")
    if order == 0:
        current = _as_tuple(phi(_unwrap(current, single)))
    if check:
        again = _as_tuple(phi(_unwrap(current, single)))
        for i, (a, b) in enumerate(zip(current, again)):
            if a != b:
                first = next(n for n in range(order + 1)
                             if _coefficient(a, n) != _coefficient(b, n))
                raise NonContractionError(
                    f"component {i}: not a fixed point at order {first}")
    return _unwrap(current, single)


def solve_newton(phi: Callable, jacobian: Callable, order: int, initial):
    """Solve ``U = phi(U)`` by Newton iteration on truncated series.

    Same contract as :func:`solve_fixed_point` for a system of one or two
    unknowns, plus ``jacobian(U)`` returning the matrix ``d phi_i / d U_j``
    as series (entries of valuation >= 1).  Each step doubles the number of
    correct coefficients, so ``log2(order)`` steps replace ``order`` passes.
    """
    single = not isinstance(initial, tuple)
    u = tuple(_seed(s) for s in _as_tuple(initial))
    u = _as_tuple(phi(_unwrap(u, single)))
    m = 0
    while m < order:
        big = min(2 * m + 1, order)
        u = tuple(c.with_order(big) for c in u)
        r = [a - b for a, b in zip(_as_tuple(phi(_unwrap(u, single))), u)]
        for i, ri in enumerate(r):
            for n in range(m + 1):
                if _coefficient(ri, n) != 0:
                    raise NonContractionError(
                        f"component {i}: residual at order {n} after Newton step")
        # residual has valuation > m, so the correction needs the
        # linearisation only to order big - m - 1
        low = big - m - 1
        r = [ri.divide_by_x(m + 1) for ri in r]
        jac = jacobian(_unwrap(tuple(c.with_order(low) for c in u), single))
        if len(u) == 1:
            j = jac[0][0] if isinstance(jac, (list, tuple)) else jac
            delta = [r[0] / (1 - j)]
        elif len(u) == 2:
            a, b = 1 - jac[0][0], -jac[0][1]
            c, d = -jac[1][0], 1 - jac[1][1]
            inv_det = (a * d - b * c).inverse()
            delta = [(d * r[0] - b * r[1]) * inv_det, (a * r[1] - c * r[0]) * inv_det]
        else:
            raise SeriesError("solve_newton handles one or two unknowns")
        u = tuple(c + _lift(dc, big, m + 1) for c, dc in zip(u, delta))
        m = big
    again = _as_tuple(phi(_unwrap(u, single)))
    for i, (a, b) in enumerate(zip(u, again)):
        if a != b:
            raise NonContractionError(f"component {i}: Newton result is not a fixed point")
    return _unwrap(u, single)


def _lift(delta, order: int, k: int):
    # delta is known to order (order - k); place it at x^k.. x^order
    return delta.with_order(order).shift_x(k)


def _seed(s):
    if isinstance(s, (TruncatedSeries, BivariateSeries)):
        return s.with_order(0)
    if isinstance(s, fmpq_poly) or isinstance(s, (list, tuple)):
        return BivariateSeries([s], 0)
    return TruncatedSeries.constant(s, 0)


def _unwrap(t: tuple, single: bool):
    return t[0] if single else t
