from fractions import Fraction

import mpmath
import pytest

from chordplanar import maps
from chordplanar.polyalg import IntPolynomial, PolynomialError
from chordplanar.rootfind import (RootFindingError, all_roots, isolate_real_roots,
                                  modulus_dominance, positive_real_roots, refine)

DISC_B = IntPolynomial(maps.DISC_B_FACTOR)
DISC_M = IntPolynomial(maps.DISC_M_FACTOR)


def test_sqrt_two():
    ivs = isolate_real_roots(IntPolynomial([-2, 0, 1]))
    assert len(ivs) == 2
    assert ivs[0].lo < -1.41421356 < ivs[0].hi
    assert ivs[1].lo < 1.41421356 < ivs[1].hi


def test_zero_polynomial():
    with pytest.raises(PolynomialError):
        isolate_real_roots(IntPolynomial([]))


def test_sigma_b_interval():
    pos = positive_real_roots(DISC_B)
    assert len(pos) == 1
    iv = refine(pos[0], Fraction(1, 10 ** 10))
    assert iv.width <= Fraction(1, 10 ** 10)
    assert iv.certificate()
    assert round(float(iv.midpoint), 5) == 0.27370


def test_sigma_interval():
    pos = positive_real_roots(DISC_M)
    assert [round(float(iv.midpoint), 5) for iv in pos] == [0.15616, 0.49512]
    assert all(iv.certificate() for iv in pos)


def test_refine_noop_when_narrow():
    iv = positive_real_roots(DISC_B)[0]
    assert refine(iv, iv.width) == iv


def test_cubic_roots():
    rs = all_roots(IntPolynomial([-6, 11, -6, 1]))
    assert [mpmath.nint(r.value.real) for r in rs.roots] == [1, 2, 3]
    assert all(r.residual_bound < 1e-60 for r in rs.roots)


def test_root_count_matches_squarefree_degree():
    for p in (DISC_B, DISC_M, IntPolynomial([1, -1]) ** 2 * IntPolynomial([1, 0, 1])):
        rs = all_roots(p)
        sq = p.squarefree_part()
        real = len(isolate_real_roots(p))
        assert len(rs) == sq.degree
        assert real + 2 * sum(1 for r in rs.roots if r.value.imag > r.residual_bound) == sq.degree


def test_dominance_B():
    sigma_b = float(positive_real_roots(DISC_B)[0].midpoint)
    rep = modulus_dominance(all_roots(DISC_B, 256), sigma_b)
    assert rep.ok
    assert rep.margin_ratio >= 10


def test_dominance_M():
    sigma = float(positive_real_roots(DISC_M)[0].midpoint)
    rep = modulus_dominance(all_roots(DISC_M, 256), sigma)
    assert rep.ok


def test_smaller_complex_roots_are_reported():
    # both factors carry a conjugate pair of smaller modulus than the real root
    sigma_b = float(positive_real_roots(DISC_B)[0].midpoint)
    rep = modulus_dominance(all_roots(DISC_B, 256), sigma_b)
    assert rep.smaller_moduli == 2


def test_iteration_budget():
    with pytest.raises(RootFindingError):
        all_roots(DISC_M, 256, max_iter=2)


def test_json_shape():
    r = all_roots(IntPolynomial([-2, 0, 1])).roots[0].to_json()
    assert set(r) == {"re", "im", "modulus", "residual_bound"}
