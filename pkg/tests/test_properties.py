"""Property-based checks of the algebraic and combinatorial invariants."""
from fractions import Fraction
from math import comb, factorial

import mpmath
import networkx as nx
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from mpmath import mpf

from chordplanar.asymptotics import AsymptoticLaw, transfer_predict
from chordplanar.oracle import SmallGraph, is_chordal, is_chordal_mcs, is_planar, vertex_pairs
from chordplanar.polyalg import BiPolynomial, IntPolynomial, resultant
from chordplanar.rootfind import isolate_real_roots, refine
from chordplanar.series import TruncatedSeries, solve_fixed_point, solve_newton

ORDER = 8
settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, zero_constant=False):
    cs = draw(st.lists(small, min_size=ORDER + 1, max_size=ORDER + 1))
    if zero_constant:
        cs[0] = Fraction(0)
    return TruncatedSeries(cs, ORDER)


@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series(zero_constant=True))
def test_compose_with_exp(a):
    e = TruncatedSeries([Fraction(1, factorial(k)) for k in range(ORDER + 1)], ORDER)
    assert e.compose(a) == a.exp()
    assert a.exp().log() == a


@given(series())
def test_inverse(a):
    assume(a[0] != 0)
    one = TruncatedSeries.constant(1, ORDER)
    assert a * a.inverse() == one


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=2, max_value=24))
def test_fixed_point_lagrange(k, order):
    # X = z (1 + X)^k has [z^n] X = binom(k n, n - 1) / n
    def phi(x):
        return TruncatedSeries.var(x.order) * (1 + x) ** k

    x = solve_fixed_point(phi, order, 0)
    assert phi(x) == x
    assert x.ogf_counts()[1:] == [comb(k * n, n - 1) // n for n in range(1, order + 1)]

    def jac(x):
        return TruncatedSeries.var(x.order) * k * (1 + x) ** (k - 1)

    assert solve_newton(phi, jac, order, 0) == x


bipoly = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 3)), st.integers(-4, 4), min_size=1, max_size=6
).map(BiPolynomial.from_terms)


def w_degree(p):
    return p.degree_w


@given(bipoly, bipoly)
def test_resultant_antisymmetry(p, q):
    assume(w_degree(p) >= 1 and w_degree(q) >= 1)
    a, b = resultant(p, q), resultant(q, p)
    assert a == b or a == -b
    sign = (-1) ** (w_degree(p) * w_degree(q))
    assert a == b * sign


@given(bipoly, bipoly, bipoly)
def test_resultant_multiplicative(p, q, r):
    assume(w_degree(p) >= 1 and w_degree(q) >= 1 and w_degree(r) >= 1)
    assert resultant(p, q * r) == resultant(p, q) * resultant(p, r)


@given(st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=5),
                min_size=1, max_size=5, unique=True),
       st.integers(min_value=4, max_value=60))
def test_refine_keeps_certificate(roots, bits):
    p = IntPolynomial([1])
    for r in roots:
        p = p * IntPolynomial([-r.numerator, r.denominator])
    ivs = isolate_real_roots(p)
    assert len(ivs) == len(roots)
    target = Fraction(1, 2 ** bits)
    for iv in ivs:
        fine = refine(iv, target)
        assert fine.width <= target
        assert iv.lo <= fine.lo and fine.hi <= iv.hi
        inside = [r for r in roots if fine.lo <= r <= fine.hi]
        assert len(inside) == 1
        if inside[0] not in (fine.lo, fine.hi):
            assert fine.certificate()


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    bits = draw(st.integers(min_value=0, max_value=(1 << len(vertex_pairs(n))) - 1))
    return SmallGraph(n, bits)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list)
    return h


@settings(max_examples=300)
@given(graphs())
def test_chordality_two_ways(g):
    assert is_chordal(g) == is_chordal_mcs(g) == nx.is_chordal(to_nx(g))


@settings(max_examples=300)
@given(graphs())
def test_planarity_against_networkx(g):
    assert is_planar(g) == nx.check_planarity(to_nx(g))[0]


@given(graphs(), st.randoms())
def test_relabelling_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = SmallGraph.from_edges(g.n, [(perm[a], perm[b]) for a, b in g.edge_list])
    assert (is_chordal(h), is_planar(h)) == (is_chordal(g), is_planar(g))


@given(st.fractions(min_value=Fraction(1, 8), max_value=10, max_denominator=8),
       st.sampled_from([mpf(1) / 2, mpf(-1) / 2, mpf(-3) / 2, mpf(2)]),
       st.integers(min_value=1, max_value=40))
def test_egf_scaling(amp, alpha, n):
    with mpmath.workprec(256):
        ogf = AsymptoticLaw(mpf(amp.numerator) / amp.denominator, alpha, mpf(1) / 3)
        egf = AsymptoticLaw(ogf.amplitude, alpha, ogf.rho, "egf")
        assert abs(transfer_predict(egf, n) / (transfer_predict(ogf, n) * factorial(n)) - 1) < 1e-30
