import pytest
from hypothesis import given, strategies as st

from tripleforge.chatetus import triple_from_leg
from tripleforge.power_relations import (
    PATH_NAMES,
    alternating_factor,
    base_triple,
    geometric_factor,
    power_triple,
    relate,
)

odd_legs = st.integers(min_value=1, max_value=10**6).map(lambda k: 2 * k + 1)
exponents = st.integers(min_value=1, max_value=40)


@pytest.mark.parametrize("x,expected", [(3, (3, 4, 5)), (5, (5, 12, 13)), (7, (7, 24, 25))])
def test_base_triple(x, expected):
    t = base_triple(x)
    assert t.as_tuple() == expected
    assert t.d == 1 and t.primitive


@pytest.mark.parametrize("x", [1, 2, 4, 0, -3])
def test_base_triple_rejects(x):
    with pytest.raises(ValueError):
        base_triple(x)


@pytest.mark.parametrize(
    "x,m,expected",
    [(3, 2, (9, 40, 41)), (3, 1, (3, 4, 5)), (3, 6, (729, 265720, 265721))],
)
def test_power_triple(x, m, expected):
    assert power_triple(x, m).as_tuple() == expected


@pytest.mark.parametrize("x,m", [(4, 2), (1, 2), (3, 0)])
def test_power_triple_rejects(x, m):
    with pytest.raises(ValueError):
        power_triple(x, m)


@pytest.mark.parametrize("x,m,expected", [(3, 2, 10), (3, 4, 820), (3, 1, 1), (11, 1, 1)])
def test_geometric_factor(x, m, expected):
    assert geometric_factor(x, m) == expected


@pytest.mark.parametrize("x,m,expected", [(3, 2, 8), (3, 3, 73), (3, 1, 1), (9, 1, 1)])
def test_alternating_factor(x, m, expected):
    assert alternating_factor(x, m) == expected


@given(odd_legs, exponents)
def test_factors_match_explicit_sums(x, m):
    assert geometric_factor(x, m) == 1 + sum(x ** (2 * p) for p in range(1, m))
    assert alternating_factor(x, m) == (-1) ** (m - 1) + sum(
        (-1) ** (m - 1 - p) * x ** (2 * p) for p in range(1, m)
    )
    assert alternating_factor(x, m) > 0


@given(odd_legs, exponents)
def test_telescoping_identities(x, m):
    assert geometric_factor(x, m) * (x * x - 1) == x ** (2 * m) - 1
    expected = x ** (2 * m) + 1 if m % 2 else x ** (2 * m) - 1
    assert alternating_factor(x, m) * (x * x + 1) == expected


@pytest.mark.parametrize(
    "x,m,y,z",
    [(3, 2, 40, 41), (3, 5, 29524, 29525), (3, 1, 4, 5), (5, 3, 7812, 7813), (7, 3, 58824, 58825)],
)
def test_relate_examples(x, m, y, z):
    r = relate(x, m)
    assert (r.y_prime, r.z_prime) == (y, z)
    assert r.agreed
    assert set(r.paths) == set(PATH_NAMES)
    assert all(v == (y, z) for v in r.paths.values())


@given(odd_legs, exponents)
def test_relate_paths_agree(x, m):
    r = relate(x, m)
    assert r.agreed
    assert r.z_prime - r.y_prime == 1
    assert (x**m) ** 2 + r.y_prime**2 == r.z_prime**2
    assert r.triple.primitive


@given(odd_legs)
def test_relate_m1_is_base(x):
    r = relate(x, 1)
    b = base_triple(x)
    assert all(v == (b.y, b.z) for v in r.paths.values())


@given(st.integers(min_value=1, max_value=3000).map(lambda k: 2 * k + 1), st.integers(1, 6))
def test_power_triple_matches_generator_one(x, m):
    # the d = 1 triple on x**m, built from the divisor formula
    assert power_triple(x, m) == triple_from_leg(x**m, 1)


def test_report_is_read_only():
    r = relate(3, 3)
    with pytest.raises(TypeError):
        r.paths["direct"] = (0, 0)
