"""Exhaustive-search ground truth for triples with a given leg.

The search only uses ``integer_sqrt``. It does not touch factorization or
candidate sets, because its job is to check them.

Completeness: ``(z - y)(z + y) = x**2`` with ``z - y >= 1`` gives
``y < z <= (x**2 + 1)/2``, so ``y <= (x**2 - 1)/2`` covers every triple.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterable, Sequence

from tripleforge.chatetus import LParity, Mode, Rejection, Triple, enumerate_leg
from tripleforge.factorization import integer_sqrt

__all__ = [
    "DEFAULT_SWEEP_LIMIT",
    "DiscrepancyReport",
    "LegDiscrepancy",
    "SweepLimitExceeded",
    "check_leg",
    "cross_check",
    "merge_reports",
    "oracle_triples_with_leg",
    "sweep_limit",
]

DEFAULT_SWEEP_LIMIT = 100_000
SWEEP_LIMIT_ENV = "TRIPLEFORGE_SWEEP_LIMIT"


class SweepLimitExceeded(ValueError):
    pass


def sweep_limit() -> int:
    """Largest leg the oracle will search, from ``TRIPLEFORGE_SWEEP_LIMIT`` if set."""
    raw = os.environ.get(SWEEP_LIMIT_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_SWEEP_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{SWEEP_LIMIT_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise ValueError(f"{SWEEP_LIMIT_ENV} must be positive, got {value}")
    return value


def oracle_triples_with_leg(x: int, limit: int | None = None) -> list[Triple]:
    """All ``(x, y, z)`` with ``x**2 + y**2 == z**2``, found by trying every ``y``."""
    if x < 1:
        raise ValueError(f"leg must be positive, got {x}")
    if limit is None:
        limit = sweep_limit()
    if x > limit:
        raise SweepLimitExceeded(f"leg {x} exceeds sweep limit {limit}")
    sq = x * x
    found = []
    for y in range(1, (sq - 1) // 2 + 1):
        z, exact = integer_sqrt(sq + y * y)
        if exact:
            found.append(Triple(x, y, z, z - y))
    return found


@dataclass(frozen=True)
class LegDiscrepancy:
    """Differences at one leg.

    ``missing`` holds triples the oracle found and the characterization did not.
    ``spurious`` holds rejected candidates plus any emitted triple the oracle
    does not know about (recorded with reason ``"not-in-oracle"``).
    """

    x: int
    missing: tuple[Triple, ...] = ()
    spurious: tuple[Rejection, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.missing and not self.spurious


@dataclass(frozen=True)
class DiscrepancyReport:
    mode: Mode
    interpretation: LParity
    lo: int
    hi: int
    entries: tuple[LegDiscrepancy, ...]
    legs_checked: int

    @property
    def clean(self) -> bool:
        return all(e.empty for e in self.entries)

    def entry(self, x: int) -> LegDiscrepancy | None:
        for e in self.entries:
            if e.x == x:
                return e
        return None


def check_leg(
    x: int,
    mode: Mode = Mode.CORRECTED,
    interpretation: LParity = LParity.ODD,
    limit: int | None = None,
) -> LegDiscrepancy:
    truth = {t.as_tuple(): t for t in oracle_triples_with_leg(x, limit)}
    got = enumerate_leg(x, mode, interpretation)
    emitted = {t.as_tuple() for t in got.triples}
    missing = tuple(t for key, t in truth.items() if key not in emitted)
    spurious = list(got.rejected)
    for t in got.triples:
        if t.as_tuple() not in truth:
            spurious.append(Rejection(t.d, "not-in-oracle", f"{t.as_tuple()} not found by search"))
    spurious.sort(key=lambda r: r.d)
    return LegDiscrepancy(x, missing, tuple(spurious))


def _check_chunk(
    legs: Sequence[int], mode: Mode, interpretation: LParity, limit: int
) -> list[LegDiscrepancy]:
    return [check_leg(x, mode, interpretation, limit) for x in legs]


def cross_check(
    legs: Iterable[int],
    mode: Mode = Mode.CORRECTED,
    interpretation: LParity = LParity.ODD,
    jobs: int = 1,
    limit: int | None = None,
) -> DiscrepancyReport:
    """Compare ``enumerate_leg`` with the oracle on every leg in ``legs``.

    Only legs with a difference get an entry. Entries come out in ascending
    ``x`` for any ``jobs``.
    """
    mode = Mode(mode)
    interpretation = LParity(interpretation)
    legs = sorted(set(legs))
    if not legs:
        raise ValueError("no legs to check")
    if legs[0] < 1:
        raise ValueError(f"legs must be positive, got {legs[0]}")
    if limit is None:
        limit = sweep_limit()
    if legs[-1] > limit:
        raise SweepLimitExceeded(f"leg {legs[-1]} exceeds sweep limit {limit}")

    if jobs <= 1 or len(legs) < 2:
        results = _check_chunk(legs, mode, interpretation, limit)
    else:
        # round-robin so each worker gets a mix of cheap and expensive legs
        chunks = [legs[i::jobs * 4] for i in range(min(len(legs), jobs * 4))]
        work = partial(_check_chunk, mode=mode, interpretation=interpretation, limit=limit)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for chunk in pool.map(work, chunks) for r in chunk]
    entries = tuple(sorted((r for r in results if not r.empty), key=lambda e: e.x))
    return DiscrepancyReport(mode, interpretation, legs[0], legs[-1], entries, len(legs))


def merge_reports(reports: Iterable[DiscrepancyReport]) -> DiscrepancyReport:
    """Combine reports from disjoint leg sets run under the same settings."""
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    first = reports[0]
    for r in reports[1:]:
        if (r.mode, r.interpretation) != (first.mode, first.interpretation):
            raise ValueError("cannot merge reports from different modes")
    entries = sorted((e for r in reports for e in r.entries), key=lambda e: e.x)
    xs = [e.x for e in entries]
    if len(xs) != len(set(xs)):
        raise ValueError("reports overlap")
    return DiscrepancyReport(
        first.mode,
        first.interpretation,
        min(r.lo for r in reports),
        max(r.hi for r in reports),
        tuple(entries),
        sum(r.legs_checked for r in reports),
    )
