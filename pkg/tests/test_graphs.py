from fractions import Fraction
from math import comb

import pytest

import tables
from chordplanar import graphs
from chordplanar.series import SeriesError


def test_ternary_closed_form():
    s = graphs.ternary_series(64)
    assert s[0] == 0 and s[1] == 1 and s[4] == 55
    assert all(s[n] == comb(3 * n, n) // (2 * n + 1) for n in range(1, 65))


def test_rooted_triangulations():
    t = graphs.rooted_triangulation_series(6)
    assert t[1] == 0
    assert t[2] == Fraction(1, 2)
    assert t[3] == Fraction(3, 2)


def test_unrooted_triangulations():
    u = graphs.egf_sequence("triangulations", 8)
    assert u[3] == 0
    assert u[4] == 1
    assert u[5] == 10


@pytest.mark.parametrize("n, expected", [(4, 1), (5, 10), (6, 180)])
def test_count_3connected(n, expected):
    assert graphs.count_3connected(n) == expected


def test_count_3connected_small_n():
    with pytest.raises(ValueError):
        graphs.count_3connected(3)


def test_triangulation_series_matches_closed_form():
    u = graphs.egf_sequence("triangulations", 40)
    assert all(u[n] == graphs.count_3connected(n) for n in range(4, 41))


def test_network_low_orders():
    e = graphs.network_series(4)
    assert e.coeff(0) == [0, 1]
    assert e.coeff(1) == [0, 0, 0, 1]
    assert e.coeff(2) == [0, 0, 0, 0, 0, Fraction(5, 2), Fraction(1, 2)]


def test_two_connected_bivariate_expansion():
    b = graphs.two_connected_series_bivariate(6)
    assert b.coeff(3) == [0, 0, 0, Fraction(1, 6)]
    assert b.coeff(4) == [0, 0, 0, 0, 0, Fraction(1, 4), Fraction(1, 24)]
    assert b.coeff(5)[7:] == [Fraction(7, 12), Fraction(1, 4), Fraction(1, 12)]
    assert b.at_y(1).egf_counts()[5] == 110


def test_two_connected_closed_values():
    b = graphs.egf_sequence("2conn", 10)
    assert b[2] == 1 and b[4] == 7 and b[10] == 24223100940


def test_dissymmetry_consistency():
    n = 30
    assert graphs.two_connected_series_closed(n) == graphs.two_connected_series_bivariate(n).at_y(1)


def test_connected_values():
    c = graphs.connected_series(8, bivariate=True)
    assert c.at_y(1).egf_counts()[3] == 4
    assert c.at_y(1).egf_counts()[5] == 540
    assert graphs.connected_pointed_series(4).coeff(1) == [1]


def test_all_graphs_profiles():
    g = graphs.all_graphs_series(6)
    assert g.coeff(0) == [1]
    assert g.egf_profile(4) == [1, 6, 15, 20, 12, 6, 1]
    assert g.egf_profile(3) == [1, 3, 3, 1]
    # the printed x^5 bracket has y^3 coefficient 1; the row must sum to 821
    row = g.egf_profile(5)
    assert sum(row) == 821
    assert row[3] == 120


def test_univariate_matches_bivariate():
    n = 16
    assert graphs.all_graphs_series(n, False) == graphs.all_graphs_series(n, True).at_y(1)
    assert graphs.connected_series(n, False) == graphs.connected_series(n, True).at_y(1)


def test_edge_degree_bound():
    b = graphs.two_connected_series_bivariate(12)
    for n in range(3, 13):
        assert b.y_degree(n) == 3 * n - 6


@pytest.mark.parametrize("family, column", [
    ("all", tables.GRAPHS_ALL),
    ("connected", tables.GRAPHS_CONNECTED),
    ("2conn", tables.GRAPHS_TWO_CONNECTED),
])
def test_table_one(family, column):
    assert graphs.count_table(family, 20).counts() == column


def test_count_table_rows_and_errors():
    t = graphs.count_table("2conn", 1)
    assert t.rows == [(1, 0)]
    with pytest.raises(SeriesError):
        graphs.count_table("all", 70)
    assert graphs.count_table("3conn", 6).rows == [(4, 1), (5, 10), (6, 180)]
    assert graphs.count_table("all", 3).to_csv() == "n,count\n1,1\n2,2\n3,8\n"


def test_unknown_family():
    with pytest.raises(ValueError):
        graphs.graph_family("trees")


def test_newton_and_fixed_point_agree():
    a = graphs.network_system(12, True, "newton")
    b = graphs.network_system(12, True, "fixed_point")
    assert a[0] == b[0] and a[1] == b[1]


def test_ordering_and_integrality():
    n = 40
    g = graphs.egf_sequence("all", n)
    c = graphs.egf_sequence("connected", n)
    b = graphs.egf_sequence("2conn", n)
    assert all(g[k] >= c[k] >= b[k] >= 0 for k in range(2, n + 1))
    assert g[3] == 8
