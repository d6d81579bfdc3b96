import mpmath
import pytest
from mpmath import mpf

from chordplanar import graphs, maps, singular
from chordplanar.polyalg import BiPolynomial


@pytest.fixture(autouse=True)
def working_precision():
    with mpmath.workprec(256):
        yield


def sig(x, digits=5):
    return float(mpmath.nstr(x, digits))


@pytest.fixture(scope="module")
def cp():
    return singular.solve_characteristic_system(256)


@pytest.fixture(scope="module")
def cc():
    return singular.connected_constants(256)


@pytest.fixture(scope="module")
def mc():
    return singular.map_constants(256)


def test_characteristic_point(cp):
    assert sig(cp.rho) == 0.092859
    assert sig(cp.E0, 6) == 1.16454
    assert sig(cp.S0) == 0.41919
    assert cp.residual < mpf(2) ** -240
    assert sig(cp.gamma_b, 7) == 10.76897


def test_characteristic_bad_seed():
    with pytest.raises(singular.SingularityError):
        singular.solve_characteristic_system(128, seed=(mpf(3), mpf(-5), mpf(7)))


def test_subcritical_ternary_argument(cp):
    v = cp.rho * cp.E0 ** 3
    assert sig(v) == 0.14665
    assert v < mpf(4) / 27


def test_network_amplitude(cp):
    amp = singular.network_amplitude(256)
    assert sig(amp.E1) == 0.092354
    assert abs(amp.theta_F - 1) < mpf(2) ** -100
    assert amp.agreement_digits >= 6


def test_theta_routes_agree_off_the_branch_point(cp):
    x, f = cp.rho * mpf("0.9"), cp.F0 * mpf("0.8")
    exact = singular.theta_derivatives(x, f)
    fd = singular.theta_derivatives_fd(x, f)
    assert all(abs(a - b) < 1e-20 * abs(a) for a, b in zip(exact, fd))


def test_E_at_regular_point_matches_series():
    e = graphs.network_system(64, False)[0]
    x0 = mpf("0.05")
    got = singular.implicit_derivatives_E(x0, 0)[0]
    assert abs(got - e.evaluate(x0)) < mpf(10) ** -10


def test_E_derivative_at_zero():
    d = singular.implicit_derivatives_E(0, 3)
    assert abs(d[0] - 1) < mpf(10) ** -30
    assert abs(d[1] - 1) < mpf(10) ** -30
    # E = 1 + x + [x^2]E x^2 + ...; compare with the exact series
    e = graphs.network_system(4, False)[0]
    assert abs(d[2] - 2 * mpf(e[2].numerator) / e[2].denominator) < mpf(10) ** -30


def test_E_derivatives_refuse_branch_point(cp):
    with pytest.raises(singular.SingularityError):
        singular.implicit_derivatives_E(cp.rho, 2)


def test_slope_diverges_like_square_root(cp):
    amp = singular.network_amplitude(256)
    ratios = []
    for k in (4, 6, 8):
        x = cp.rho * (1 - mpf(10) ** -k)
        slope = singular.implicit_derivatives_E(x, 1)[1]
        X = mpmath.sqrt(1 - x / cp.rho)
        ratios.append(slope * 2 * cp.rho * X / amp.E1)
    errs = [abs(r - 1) for r in ratios]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-3


def test_network_branch_expansion_matches_direct_solves(cp):
    ee, _ = singular.network_branch_expansion(256)
    errs = []
    for k in (3, 5, 7):
        x = cp.rho * (1 - mpf(10) ** -k)
        direct = singular.implicit_derivatives_E(x, 0)[0]
        errs.append(abs(ee(x) - direct))
    assert errs[0] > errs[1] > errs[2]
    # truncation after X^4 leaves O(X^5) = O(10^{-5k/2})
    assert errs[1] < mpf(10) ** -11


def test_two_connected_expansion(cp):
    bx = singular.two_connected_expansion(256)
    assert sig(bx.B0) == 0.0044796
    assert abs(bx.odd_X1) < mpf(10) ** -40
    # the X^2 coefficient equals -rho_b B'(rho_b) via the regular Taylor data
    t = singular.b_taylor(cp.rho * (1 - mpf(10) ** -12), 1)
    assert abs(bx.B2 - cp.rho * t[1]) < 1e-5


def test_two_connected_expansion_matches_closed_form(cp):
    bx = singular.two_connected_expansion(256)
    for k in (4, 6):
        x = cp.rho * (1 - mpf(10) ** -k)
        direct = singular.b_taylor(x, 0)[0]
        assert abs(bx.expansion(x) - direct) < mpf(10) ** (-5 * k / 2 + 1)


def test_connected_constants(cp, cc):
    assert cc.tau < cp.rho
    assert cp.rho - cc.tau > mpf(2) ** -128
    assert sig(cc.tau) == 0.092859
    assert sig(cc.E_tau, 6) == 1.16446
    assert sig(cc.gamma, 7) == 11.89235
    assert abs(cc.C2 - cc.tau) < mpf(10) ** -30
    # tau B''(tau) = 1
    assert abs(cc.tau * cc.B_derivatives[2] - 1) < mpf(10) ** -30


def test_connected_constant_term_matches_ratio_limit(cc):
    # g_n / c_n -> exp(C0)
    n = 256
    g = graphs.egf_sequence("all", n)
    c = graphs.egf_sequence("connected", n)
    ratio = mpf(g[n]) / c[n]
    assert abs(ratio / cc.G0 - 1) < 1e-3


def test_map_constants(mc):
    assert sig(1 / mc.sigma_b, 6) == 3.65370
    assert sig(1 / mc.sigma, 6) == 6.40375
    assert sig(mc.B_branch.y0) == 0.33301
    assert sig(mc.B_branch.amplitude) == 0.12704
    assert sig(mc.M_branch.y0) == 0.31055
    assert sig(mc.M_branch.amplitude) == 0.22326
    assert sig(mc.other_positive_root) == 0.49512


def test_map_subcriticality(mc):
    assert sig(mc.subcritical_value) == 0.26821
    assert mc.subcritical_value < mc.sigma_b
    assert mc.subcritical_value_alt < mc.subcritical_value


def test_map_branches_decrease_towards_sigma(mc):
    # X -> 0 as z -> sigma from below, and the counting branch increases in z
    assert mc.B_branch.expansion[1] < 0
    assert mc.M_branch.expansion[1] < 0


def test_algebraic_branch_against_continuation(mc):
    p = BiPolynomial.from_terms(maps.P_M_TERMS)
    exp_ = mc.M_branch.expansion
    m = maps.all_maps_series(256)
    errs = []
    for k in (3, 5, 7):
        z = mc.sigma * (1 - mpf(10) ** -k)
        # Newton on p(z, y) = 0 from the expansion value
        y = exp_(z)
        for _ in range(60):
            y -= p(z, y) / p.partial_w()(z, y)
        errs.append(abs(exp_(z) - y))
    assert errs[0] > errs[1] > errs[2]
    # where the truncated series has converged, it agrees with the expansion
    # up to the O(X^5) truncation of the latter
    z = mc.sigma * mpf("0.9")
    assert abs(m.evaluate(z) - exp_(z)) < 10 * mpmath.sqrt(mpf("0.1")) ** 5


def test_trivial_square_root():
    br = singular.algebraic_branch_expansion({(0, 2): 1, (1, 0): 1, (0, 0): -1}, 1,
                                             lambda z: mpmath.sqrt(1 - z))
    assert abs(br.y0) < mpf(10) ** -30
    assert abs(br.amplitude - 1) < mpf(10) ** -30
    assert abs(br.expansion[1] - 1) < mpf(10) ** -30
    assert abs(br.expansion[2]) < mpf(10) ** -30


def test_non_square_root_branch_rejected():
    # y^3 = 1 - z has p_yy = 0 at the branch point
    with pytest.raises(singular.SingularityError):
        singular.algebraic_branch_expansion({(0, 3): 1, (1, 0): 1, (0, 0): -1}, 1,
                                            lambda z: mpmath.cbrt(1 - z))


def test_branch_expansion_requires_four_terms():
    with pytest.raises(ValueError):
        singular.BranchExpansion(mpf(1), (1, 2, 3))


def test_hpreal_digits():
    h = singular.HPReal(mpf(1) / 3, 256)
    assert h.digits == 38
    assert len(str(h)) <= 40


def test_constants_report_json():
    rep = singular.constants_report(2, 128)
    d = rep.to_dict()
    assert d["theorem"] == 2
    assert "sigma_inv" in d["constants"]
    with pytest.raises(ValueError):
        singular.constants_report(3)
