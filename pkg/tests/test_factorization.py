import math

import pytest
from hypothesis import given, strategies as st

from tripleforge.factorization import (
    Factorization,
    divisors,
    divisors_of_square,
    factorize,
    integer_sqrt,
    is_probable_prime,
    two_adic,
)


@pytest.mark.parametrize(
    "n,expected",
    [
        (1, ()),
        (12, ((2, 2), (3, 1))),
        (97, ((97, 1),)),
        (2**10 * 3**4 * 7, ((2, 10), (3, 4), (7, 1))),
    ],
)
def test_factorize_examples(n, expected):
    assert factorize(n).factors == expected


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_pollard_fallback():
    # both factors sit far above the trial-division bound
    p, q = 1_000_003, 998_244_353
    f = factorize(p * q * q, trial_bound=100)
    assert f.factors == ((p, 1), (q, 2))
    assert factorize(2**61 - 1).factors == ((2**61 - 1, 1),)


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(4, ((4, 1),))
    with pytest.raises(ValueError):
        Factorization(6, ((3, 1), (2, 1)))


@pytest.mark.parametrize(
    "n,expected",
    [(9, [1, 3, 9]), (36, [1, 2, 3, 4, 6, 9, 12, 18, 36]), (1, [1])],
)
def test_divisors_examples(n, expected):
    assert divisors(factorize(n)) == expected


@pytest.mark.parametrize("n,s,k", [(6, 1, 3), (12, 2, 3), (7, 0, 7), (1, 0, 1), (2**70, 70, 1)])
def test_two_adic_examples(n, s, k):
    t = two_adic(n)
    assert (t.s, t.k) == (s, k)


def test_two_adic_rejects_zero():
    with pytest.raises(ValueError):
        two_adic(0)


@pytest.mark.parametrize("n,expected", [(0, (0, True)), (25, (5, True)), (26, (5, False))])
def test_integer_sqrt_examples(n, expected):
    assert integer_sqrt(n) == expected


def test_integer_sqrt_big():
    r = 3**400 + 17
    assert integer_sqrt(r * r) == (r, True)
    assert integer_sqrt(r * r - 1) == (r - 1, False)
    assert integer_sqrt(r * r + 2 * r) == (r, False)


def test_integer_sqrt_rejects_negative():
    with pytest.raises(ValueError):
        integer_sqrt(-1)


def _trial_prime(n):
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


def test_primality_matches_trial_division():
    assert [n for n in range(2000) if is_probable_prime(n)] == [
        n for n in range(2000) if _trial_prime(n)
    ]


@given(st.integers(min_value=1, max_value=10**12))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert all(is_probable_prime(p) for p, _ in f.factors)
    primes = [p for p, _ in f.factors]
    assert primes == sorted(set(primes))


@given(st.integers(min_value=1, max_value=10**6))
def test_divisors_complete(n):
    divs = divisors(factorize(n))
    assert divs == sorted(set(divs))
    assert all(n % d == 0 for d in divs)
    assert len(divs) == factorize(n).num_divisors


@given(st.integers(min_value=1, max_value=3000))
def test_divisors_match_brute_force(n):
    assert divisors(factorize(n)) == [d for d in range(1, n + 1) if n % d == 0]


@given(st.integers(min_value=1, max_value=10**9))
def test_divisors_of_square_agree_with_direct(x):
    assert divisors_of_square(x) == divisors(factorize(x * x))


@given(st.integers(min_value=1, max_value=2**200))
def test_two_adic_maximal(n):
    t = two_adic(n)
    assert n == 2**t.s * t.k
    assert t.k % 2 == 1


@given(st.integers(min_value=0, max_value=2**300))
def test_integer_sqrt_floor(n):
    r, exact = integer_sqrt(n)
    assert r * r <= n < (r + 1) ** 2
    assert exact == (r * r == n)
