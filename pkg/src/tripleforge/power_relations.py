"""Relations between the ``d = 1`` triple on an odd leg ``x`` and the one on ``x**m``.

For odd ``x >= 3`` the generator-1 triple is ``(x, (x**2-1)/2, (x**2+1)/2)``.
The triple on ``x**m`` can be reached from ``(x, y, z)`` in several ways, and
``relate`` computes all of them independently and compares:

``direct``
    ``y' = (x**(2m) - 1)/2``.
``geometric``
    ``y' = y * (1 + x**2 + ... + x**(2(m-1)))``, ``z' = y' + 1``.
``alternating``
    ``v = z * ((-1)**(m-1) + sum_p (-1)**(m-1-p) x**(2p))``; ``v`` is ``y'``
    when ``m`` is even and ``z'`` when ``m`` is odd, and ``v + (-1)**(m-2)``
    is the other member.
``equivalent``
    ``y' = z + y * (x**2 + ... + x**(2(m-1))) - 1``, ``z' = y' + 1``.

The bracketed factors are accumulated term by term, never by dividing
``x**(2m) +/- 1``, so only the ``direct`` path touches the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from tripleforge.chatetus import Triple

__all__ = [
    "PATH_NAMES",
    "PowerRelationReport",
    "alternating_factor",
    "base_triple",
    "geometric_factor",
    "power_triple",
    "relate",
]

PATH_NAMES = ("direct", "geometric", "alternating", "equivalent")


def _check_leg(x: int) -> None:
    if x % 2 == 0:
        raise ValueError(f"power relations need an odd leg, got {x}")
    if x < 3:
        raise ValueError(f"leg must be at least 3 (x = {x} gives y = 0)")


def _check(x: int, m: int) -> None:
    _check_leg(x)
    if m < 1:
        raise ValueError(f"exponent must be >= 1, got {m}")


def base_triple(x: int) -> Triple:
    """Generator-1 triple on odd ``x``, written with ``x = 2n + 1``."""
    _check_leg(x)
    n = (x - 1) // 2
    y = 2 * n * n + 2 * n
    return Triple(x, y, y + 1, 1)


def power_triple(x: int, m: int) -> Triple:
    """Generator-1 triple on ``x**m`` from the closed form."""
    _check(x, m)
    big = x ** (2 * m)
    return Triple(x**m, (big - 1) // 2, (big + 1) // 2, 1)


def geometric_factor(x: int, m: int) -> int:
    """``1 + x**2 + x**4 + ... + x**(2(m-1))``, by Horner accumulation."""
    _check(x, m)
    sq = x * x
    acc = 1
    for _ in range(m - 1):
        acc = acc * sq + 1
    return acc


def alternating_factor(x: int, m: int) -> int:
    """``sum_{p=0}^{m-1} (-1)**(m-1-p) * x**(2p)``, by Horner accumulation.

    Uses ``A(1) = 1`` and ``A(k+1) = x**2 * A(k) + (-1)**k``.
    """
    _check(x, m)
    sq = x * x
    acc = 1
    sign = -1
    for _ in range(m - 1):
        acc = acc * sq + sign
        sign = -sign
    return acc


@dataclass(frozen=True)
class PowerRelationReport:
    x: int
    m: int
    base: Triple
    geometric_factor: int
    alternating_factor: int
    y_prime: int
    z_prime: int
    paths: Mapping[str, tuple[int, int]] = field(compare=False)
    agreed: bool

    @property
    def triple(self) -> Triple:
        return Triple(self.x**self.m, self.y_prime, self.z_prime, 1)


def relate(x: int, m: int) -> PowerRelationReport:
    """Compute ``(y', z')`` for leg ``x**m`` along every path and compare.

    >>> r = relate(3, 4)
    >>> (r.y_prime, r.z_prime, r.agreed)
    (3280, 3281, True)
    """
    _check(x, m)
    base = base_triple(x)
    y, z = base.y, base.z
    g = geometric_factor(x, m)
    a = alternating_factor(x, m)

    direct = power_triple(x, m)

    y_geo = y * g

    v = z * a
    if m % 2 == 0:
        alt = (v, v + 1)
    else:
        alt = (v - 1, v)

    y_eq = z + y * (g - 1) - 1

    paths = {
        "direct": (direct.y, direct.z),
        "geometric": (y_geo, y_geo + 1),
        "alternating": alt,
        "equivalent": (y_eq, y_eq + 1),
    }
    agreed = len(set(paths.values())) == 1
    return PowerRelationReport(
        x=x,
        m=m,
        base=base,
        geometric_factor=g,
        alternating_factor=a,
        y_prime=direct.y,
        z_prime=direct.z,
        paths=MappingProxyType(paths),
        agreed=agreed,
    )
