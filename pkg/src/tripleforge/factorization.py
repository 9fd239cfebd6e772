"""Exact integer helpers: factorization, divisors, 2-adic split, integer sqrt.

Everything here works on Python ints, so there is no precision ceiling and no
floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import count

__all__ = [
    "Factorization",
    "TwoAdic",
    "divisors",
    "divisors_of_square",
    "factorize",
    "integer_sqrt",
    "is_probable_prime",
    "two_adic",
]

DEFAULT_TRIAL_BOUND = 10_000

# Deterministic for n < 3.3e24; a strong probable-prime test above that.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the first thirteen prime bases."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        y = pow(a, d, n)
        if y in (1, n - 1):
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of ``n`` as ``((p1, e1), (p2, e2), ...)``, primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"factorization needs n >= 1, got {self.n}")
        object.__setattr__(self, "factors", tuple((int(p), int(e)) for p, e in self.factors))
        product = 1
        previous = 1
        for p, e in self.factors:
            if p <= previous or e < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            if not is_probable_prime(p):
                raise ValueError(f"{p} is not prime")
            product *= p**e
            previous = p
        if product != self.n:
            raise ValueError(f"factors multiply to {product}, not {self.n}")

    def squared(self) -> Factorization:
        return Factorization(self.n * self.n, tuple((p, 2 * e) for p, e in self.factors))

    @property
    def num_divisors(self) -> int:
        return math.prod(e + 1 for _, e in self.factors)


@dataclass(frozen=True)
class TwoAdic:
    """``n == 2**s * k`` with ``k`` odd."""

    n: int
    s: int
    k: int


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in count(1):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            # batched gcd overshot; step one at a time from the saved point
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise AssertionError("unreachable")


def _split(n: int, primes: dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        primes[n] = primes.get(n, 0) + 1
        return
    f = _pollard_brent(n)
    _split(f, primes)
    _split(n // f, primes)


def factorize(n: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> Factorization:
    """Factor ``n`` by trial division up to ``trial_bound``, then Pollard-Brent rho.

    >>> factorize(12).factors
    ((2, 2), (3, 1))
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need n >= 1")
    primes: dict[int, int] = {}
    m = n
    for p in (2, 3):
        while m % p == 0:
            primes[p] = primes.get(p, 0) + 1
            m //= p
    # 6k +/- 1 wheel
    p, step = 5, 2
    while p <= trial_bound and p * p <= m:
        while m % p == 0:
            primes[p] = primes.get(p, 0) + 1
            m //= p
        p += step
        step = 6 - step
    if m > 1:
        if p * p > m:
            primes[m] = primes.get(m, 0) + 1
        else:
            _split(m, primes)
    return Factorization(n, tuple(sorted(primes.items())))


def divisors(f: Factorization) -> list[int]:
    """All divisors of ``f.n`` in increasing order."""
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    divs.sort()
    return divs


def divisors_of_square(x: int) -> list[int]:
    """Divisors of ``x**2``, obtained from the factorization of ``x`` itself."""
    return divisors(factorize(x).squared())


def two_adic(n: int) -> TwoAdic:
    if n < 1:
        raise ValueError(f"two_adic needs n >= 1, got {n}")
    s = (n & -n).bit_length() - 1
    return TwoAdic(n, s, n >> s)


def integer_sqrt(n: int) -> tuple[int, bool]:
    """Floor square root of ``n`` and whether ``n`` is a perfect square."""
    if n < 0:
        raise ValueError(f"integer_sqrt needs n >= 0, got {n}")
    r = math.isqrt(n)
    return r, r * r == n
