import sympy
import pytest

from chordplanar import maps
from chordplanar.polyalg import (BiPolynomial, InexactDivisionError, IntPolynomial,
                                 PolynomialError, annihilator_check, cofactor,
                                 derive_B_annihilator, derive_M_annihilator, discriminant,
                                 resultant)
from chordplanar.series import TruncatedSeries

P_B = BiPolynomial.from_terms(maps.P_B_TERMS)
P_M = BiPolynomial.from_terms(maps.P_M_TERMS)


def bi(expr):
    """Build a BiPolynomial from a sympy expression in z, w."""
    z, w = sympy.symbols("z w")
    poly = sympy.Poly(sympy.sympify(expr), z, w)
    return BiPolynomial.from_terms({m: int(c) for m, c in poly.terms()})


def test_resultant_substitution():
    # substituting w = z into w^2 - z
    assert resultant(bi("w - z"), bi("w**2 - z")) == IntPolynomial([0, -1, 1])


def test_resultant_common_factor():
    p = bi("w**2 - z")
    assert resultant(p, p).is_zero()


def test_resultant_zero_input():
    with pytest.raises(PolynomialError):
        resultant(BiPolynomial(), bi("w - z"))


def test_resultant_eliminate_z():
    # eliminate z from z - w^2 and z - 1: 1 - w^2 up to sign
    r = resultant(bi("z - w**2"), bi("z - 1"), eliminate="z")
    assert r in (IntPolynomial([1, 0, -1]), IntPolynomial([-1, 0, 1]))


def test_resultant_against_sympy():
    z, w = sympy.symbols("z w")
    for a, b in [("w**3 + z*w + 2", "3*w**2 + z"), ("z*w**2 - w + z**2", "w**4 - z*w - 1"),
                 ("2*w**3 - z**2*w + z", "w**2 + z*w + 3")]:
        expected = sympy.Poly(sympy.resultant(sympy.sympify(a), sympy.sympify(b), w), z)
        got = resultant(bi(a), bi(b))
        assert got.coeffs == [int(c) for c in reversed(expected.all_coeffs())]


def test_discriminant_quadratic():
    d = discriminant(bi("w**2 - z"))
    assert d in (IntPolynomial([0, 4]), IntPolynomial([0, -4]))


def test_discriminant_needs_degree_two():
    with pytest.raises(PolynomialError):
        discriminant(bi("w - z"))


def test_disc_B_factor():
    d = discriminant(P_B)
    q = d.exact_div(IntPolynomial(maps.DISC_B_FACTOR))
    k, rest = q.strip_z()
    assert rest.degree == 0 and k == 42


def test_disc_M_factor():
    d = discriminant(P_M)
    q = d.exact_div(IntPolynomial(maps.DISC_M_FACTOR))
    k, rest = q.strip_z()
    assert rest.degree == 0 and k == 54


def test_disc_B_against_sympy():
    z, w = sympy.symbols("z w")
    expr = sum(c * z ** i * w ** j for (i, j), c in maps.P_B_TERMS.items())
    expected = sympy.Poly(sympy.discriminant(expr, w), z)
    got = discriminant(P_B)
    assert got.coeffs == [int(c) for c in reversed(expected.all_coeffs())]


def test_annihilator_check():
    s = TruncatedSeries.var(6)
    assert not annihilator_check(bi("w - z**2"), s).ok
    assert annihilator_check(bi("w - z**2"), s).first_failure == 1
    assert annihilator_check(bi("w - z"), s).ok


def test_derive_M_annihilator():
    out = derive_M_annihilator(P_B)
    assert out.degree_w >= 12
    assert cofactor(P_M, out) is not None
    from chordplanar.maps import all_maps_series
    assert annihilator_check(out, all_maps_series(64)).ok


def test_derive_B_annihilator():
    out = derive_B_annihilator()
    q = cofactor(P_B, out)
    assert q is not None
    from chordplanar.maps import two_connected_maps_series
    assert annihilator_check(out, two_connected_maps_series(64)).ok


def test_exact_division_errors():
    with pytest.raises(InexactDivisionError):
        bi("w**2 + 1").exact_div(bi("w + z"))
    with pytest.raises(InexactDivisionError):
        IntPolynomial([1, 0, 1]).exact_div(IntPolynomial([1, 1]))


def test_json_round_trip():
    assert BiPolynomial.from_json(P_M.to_json()) == P_M
    assert P_B.to_json()[0] == [6, 0, "-1"]


def test_squarefree_part():
    p = IntPolynomial([1, -1]) ** 2 * IntPolynomial([2, 1])
    assert p.squarefree_part() == IntPolynomial([-2, 1, 1])
