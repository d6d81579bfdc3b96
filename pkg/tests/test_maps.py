import pytest

import tables
from chordplanar import maps
from chordplanar.polyalg import BiPolynomial, annihilator_check
from chordplanar.series import SeriesError


def test_core_series_values():
    d = maps.map_core_series(10)
    assert d[0] == 1
    assert d[2] == 1
    assert d[8] == 288


def test_two_connected_prefix():
    b = maps.two_connected_maps_series(9).ogf_counts()
    assert b == [0, 1, 0, 1, 0, 5, 1, 35, 16, 288]
    assert maps.map_sequence("2conn-maps", 20)[20] == 56747900


def test_all_maps_values():
    m = maps.all_maps_series(8).ogf_counts()
    assert m[0] == 0 and m[1] == 1 and m[6] == 419
    assert m[:4] == [0, 1, 2, 6]


@pytest.mark.parametrize("family, column", [
    ("maps", tables.MAPS_ALL),
    ("2conn-maps", tables.MAPS_TWO_CONNECTED),
])
def test_table_two(family, column):
    assert maps.map_count_table(family, 20).counts() == column


def test_map_count_table_prefixes():
    assert maps.map_count_table("all_maps", 9).counts() == [1, 2, 6, 22, 92, 419, 2025, 10214, 53192]
    assert maps.map_count_table("two_connected_maps", 4).counts() == [1, 0, 1, 0]
    with pytest.raises(SeriesError):
        maps.map_count_table("maps", 80)


def test_annihilators_to_64():
    p_b = BiPolynomial.from_terms(maps.P_B_TERMS)
    p_m = BiPolynomial.from_terms(maps.P_M_TERMS)
    assert annihilator_check(p_b, maps.two_connected_maps_series(64)).ok
    assert annihilator_check(p_m, maps.all_maps_series(64)).ok


def test_annihilator_degrees_match_display():
    p_b = BiPolynomial.from_terms(maps.P_B_TERMS)
    p_m = BiPolynomial.from_terms(maps.P_M_TERMS)
    assert (p_b.degree_w, p_b.degree_z) == (9, 6)
    assert (p_m.degree_w, p_m.degree_z) == (12, 6)


def test_maps_dominate_blocks():
    m = maps.map_sequence("maps", 64)
    b = maps.map_sequence("2conn-maps", 64)
    assert all(x >= y >= 0 for x, y in zip(m, b))


def test_unknown_family():
    with pytest.raises(ValueError):
        maps.map_family("trees")
