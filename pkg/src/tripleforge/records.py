"""Flat record forms of triples, power relations and discrepancies.

Every integer is written as a decimal string so that values far past 64 bits
survive any JSON consumer. ``loads(dumps(obj)) == obj`` for all three kinds.
"""

from __future__ import annotations

import json
from types import MappingProxyType
from typing import Any, Union

from tripleforge.chatetus import Rejection, Triple
from tripleforge.oracle import LegDiscrepancy
from tripleforge.power_relations import (
    PowerRelationReport,
    alternating_factor,
    base_triple,
    geometric_factor,
)

__all__ = ["CSV_FIELDS", "csv_row", "dumps", "from_record", "loads", "to_record"]

Record = Union[Triple, PowerRelationReport, LegDiscrepancy]

CSV_FIELDS = {
    "triple": ("x", "y", "z", "d", "primitive"),
    "relation": ("x", "m", "y_prime", "z_prime", "agreed"),
    "discrepancy": ("x", "missing", "spurious"),
}


def _triple_fields(t: Triple) -> dict[str, Any]:
    return {"x": str(t.x), "y": str(t.y), "z": str(t.z), "d": str(t.d), "primitive": t.primitive}


def _parse_triple(rec: dict[str, Any]) -> Triple:
    t = Triple(int(rec["x"]), int(rec["y"]), int(rec["z"]), int(rec["d"]))
    if "primitive" in rec and rec["primitive"] != t.primitive:
        raise ValueError(f"record claims primitive={rec['primitive']} for {t.as_tuple()}")
    return t


def to_record(obj: Record, *, paths: bool = False) -> dict[str, Any]:
    if isinstance(obj, Triple):
        return {"kind": "triple", **_triple_fields(obj)}
    if isinstance(obj, PowerRelationReport):
        rec: dict[str, Any] = {
            "kind": "relation",
            "x": str(obj.x),
            "m": str(obj.m),
            "y_prime": str(obj.y_prime),
            "z_prime": str(obj.z_prime),
        }
        if paths:
            rec["paths"] = {
                name: {"y_prime": str(y), "z_prime": str(z)} for name, (y, z) in obj.paths.items()
            }
        rec["agreed"] = obj.agreed
        return rec
    if isinstance(obj, LegDiscrepancy):
        return {
            "kind": "discrepancy",
            "x": str(obj.x),
            "missing": [_triple_fields(t) for t in obj.missing],
            "spurious": [
                {"d": str(r.d), "reason": r.reason, "detail": r.detail} for r in obj.spurious
            ],
        }
    raise TypeError(f"no record form for {type(obj).__name__}")


def from_record(rec: dict[str, Any]) -> Record:
    kind = rec.get("kind")
    if kind == "triple":
        return _parse_triple(rec)
    if kind == "relation":
        x, m = int(rec["x"]), int(rec["m"])
        y_prime, z_prime = int(rec["y_prime"]), int(rec["z_prime"])
        if "paths" in rec:
            paths = {k: (int(v["y_prime"]), int(v["z_prime"])) for k, v in rec["paths"].items()}
        else:
            paths = {"direct": (y_prime, z_prime)}
        # base triple and factors are pure functions of (x, m)
        return PowerRelationReport(
            x=x,
            m=m,
            base=base_triple(x),
            geometric_factor=geometric_factor(x, m),
            alternating_factor=alternating_factor(x, m),
            y_prime=y_prime,
            z_prime=z_prime,
            paths=MappingProxyType(paths),
            agreed=bool(rec["agreed"]),
        )
    if kind == "discrepancy":
        return LegDiscrepancy(
            int(rec["x"]),
            tuple(_parse_triple(t) for t in rec["missing"]),
            tuple(Rejection(int(s["d"]), s["reason"], s.get("detail", "")) for s in rec["spurious"]),
        )
    raise ValueError(f"unknown record kind {kind!r}")


def dumps(obj: Record, *, paths: bool = False) -> str:
    """One JSON line, no trailing newline."""
    return json.dumps(to_record(obj, paths=paths), separators=(",", ":"))


def loads(line: str) -> Record:
    return from_record(json.loads(line))


def csv_row(obj: Record) -> list[str]:
    if isinstance(obj, Triple):
        return [str(obj.x), str(obj.y), str(obj.z), str(obj.d), str(obj.primitive).lower()]
    if isinstance(obj, PowerRelationReport):
        return [str(obj.x), str(obj.m), str(obj.y_prime), str(obj.z_prime), str(obj.agreed).lower()]
    if isinstance(obj, LegDiscrepancy):
        return [
            str(obj.x),
            ";".join(f"{t.x} {t.y} {t.z}" for t in obj.missing),
            ";".join(f"{r.d}:{r.reason}" for r in obj.spurious),
        ]
    raise TypeError(f"no CSV form for {type(obj).__name__}")
