"""Every Pythagorean triple with a prescribed leg, generated from divisors of x**2.

A divisor ``d`` of ``x**2`` gives ``y = (x**2/d - d)/2`` and ``z = (x**2/d + d)/2``.
Two enumeration modes are offered:

``Mode.PAPER_STRICT``
    Candidates drawn from the printed sets D(x), P(x) and C(x). The bound on D
    is inclusive (``d <= x``), and the printed set for even legs is not
    complete. Candidates that fail to produce a triple are collected, not
    raised.
``Mode.CORRECTED``
    Candidates are exactly the ``d | x**2`` with ``d < x`` and
    ``x**2/d = d (mod 2)``, which is the precise condition for a positive
    integer ``y``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from tripleforge.factorization import divisors_of_square, two_adic

__all__ = [
    "CandidateSet",
    "DegenerateTriple",
    "LParity",
    "LegEnumeration",
    "Mode",
    "NonIntegerResult",
    "Rejection",
    "Triple",
    "TripleError",
    "candidate_set",
    "divisor_set_D",
    "enumerate_leg",
    "is_primitive",
    "paper_set_P",
    "triple_from_leg",
    "triples_with_leg",
]


class Mode(str, enum.Enum):
    PAPER_STRICT = "paper-strict"
    CORRECTED = "corrected"


class LParity(str, enum.Enum):
    """Which ``l`` may appear in ``d = 2**s * l`` for even legs."""

    ODD = "odd-l"
    ANY = "any-l"


class TripleError(ValueError):
    """A candidate generator that does not yield a Pythagorean triple."""


class NonIntegerResult(TripleError):
    pass


class DegenerateTriple(TripleError):
    pass


@dataclass(frozen=True)
class Triple:
    """``x**2 + y**2 == z**2`` with generator ``d = z - y``; checked on construction."""

    x: int
    y: int
    z: int
    d: int
    primitive: bool = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.x < 1 or self.y < 1:
            raise DegenerateTriple(f"non-positive leg in ({self.x}, {self.y}, {self.z})")
        if self.x * self.x + self.y * self.y != self.z * self.z:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) is not Pythagorean")
        if self.z - self.y != self.d:
            raise ValueError(f"generator {self.d} != z - y = {self.z - self.y}")
        object.__setattr__(self, "primitive", gcd(self.x, self.y) == 1)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class CandidateSet:
    x: int
    mode: Mode
    ds: tuple[int, ...]
    # None for odd legs and for corrected mode, where P(x) is not consulted
    interpretation: LParity | None = None


@dataclass(frozen=True)
class Rejection:
    """A candidate ``d`` that produced no triple, and why."""

    d: int
    reason: str  # "degenerate" or "non-integer"
    detail: str = ""


@dataclass(frozen=True)
class LegEnumeration:
    candidates: CandidateSet
    triples: tuple[Triple, ...]
    rejected: tuple[Rejection, ...]


def divisor_set_D(x: int) -> list[int]:
    """Divisors of ``x**2`` not exceeding ``x`` (inclusive, as printed)."""
    if x < 1:
        raise ValueError(f"leg must be positive, got {x}")
    return [d for d in divisors_of_square(x) if d <= x]


def paper_set_P(x: int, interpretation: LParity = LParity.ODD) -> list[int]:
    """The set ``{2**s * l : l | x**2, 1 <= s <= v2(x) - 1}`` for even ``x``.

    With ``LParity.ODD`` only odd ``l`` are used. Empty whenever ``v2(x) == 1``.
    """
    interpretation = LParity(interpretation)
    if x < 1 or x % 2:
        raise ValueError(f"P(x) is defined for even legs only, got {x}")
    n = two_adic(x).s
    ls = divisors_of_square(x)
    if interpretation is LParity.ODD:
        ls = [l for l in ls if l % 2]
    return sorted({l << s for s in range(1, n) for l in ls})


def _corrected_candidates(x: int) -> list[int]:
    sq = x * x
    return [d for d in divisors_of_square(x) if d < x and (sq // d - d) % 2 == 0]


def candidate_set(
    x: int, mode: Mode = Mode.CORRECTED, interpretation: LParity = LParity.ODD
) -> CandidateSet:
    if x < 1:
        raise ValueError(f"leg must be positive, got {x}")
    mode = Mode(mode)
    if mode is Mode.CORRECTED:
        return CandidateSet(x, mode, tuple(_corrected_candidates(x)))
    ds = divisor_set_D(x)
    if x % 2:
        return CandidateSet(x, mode, tuple(ds))
    interpretation = LParity(interpretation)
    p = set(paper_set_P(x, interpretation))
    return CandidateSet(x, mode, tuple(d for d in ds if d in p), interpretation)


def triple_from_leg(x: int, d: int) -> Triple:
    """Build ``(x, y, z)`` from leg ``x`` and generator ``d``.

    Raises ``NonIntegerResult`` if ``d`` does not divide ``x**2`` or the
    cofactor has the wrong parity, and ``DegenerateTriple`` if ``d >= x``.

    >>> triple_from_leg(3, 1)
    Triple(x=3, y=4, z=5, d=1, primitive=True)
    """
    if x < 1 or d < 1:
        raise ValueError(f"need positive x and d, got x={x}, d={d}")
    sq = x * x
    e, rem = divmod(sq, d)
    if rem:
        raise NonIntegerResult(f"{d} does not divide {sq}")
    if (e - d) % 2:
        raise NonIntegerResult(f"{sq}/{d} = {e} and {d} differ in parity; y is a half-integer")
    if d >= x:
        raise DegenerateTriple(f"d = {d} >= x = {x} gives y = {(e - d) // 2}")
    return Triple(x, (e - d) // 2, (e + d) // 2, d)


def enumerate_leg(
    x: int, mode: Mode = Mode.CORRECTED, interpretation: LParity = LParity.ODD
) -> LegEnumeration:
    """Apply ``triple_from_leg`` to every candidate, keeping the failures too."""
    cs = candidate_set(x, mode, interpretation)
    triples = []
    rejected = []
    for d in cs.ds:
        try:
            triples.append(triple_from_leg(x, d))
        except DegenerateTriple as exc:
            rejected.append(Rejection(d, "degenerate", str(exc)))
        except NonIntegerResult as exc:
            rejected.append(Rejection(d, "non-integer", str(exc)))
    triples.sort(key=lambda t: t.y)
    return LegEnumeration(cs, tuple(triples), tuple(rejected))


def triples_with_leg(
    x: int, mode: Mode = Mode.CORRECTED, interpretation: LParity = LParity.ODD
) -> list[Triple]:
    """Triples with leg ``x``, ascending in ``y``.

    >>> [t.as_tuple() for t in triples_with_leg(12)]
    [(12, 5, 13), (12, 9, 15), (12, 16, 20), (12, 35, 37)]
    """
    return list(enumerate_leg(x, mode, interpretation).triples)


def is_primitive(t: Triple) -> bool:
    return gcd(t.x, t.y) == 1
