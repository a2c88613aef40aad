"""JSON-lines catalog of self-dual negacyclic classifications.

One record per (p, s, n, a) key; appends skip keys already present.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable

from .claims import thm1_exists_selfdual
from .codes import count_selfdual_negacyclic, enumerate_selfdual_negacyclic
from .config import DEFAULT_CATALOG_GENERATOR_LIMIT, OracleLimits
from .errors import CatalogCorruptError, OracleRangeExceeded
from .gf import FieldSpec
from .oracle import oracle_selfdual_search
from .poly import format_poly
from .serde import canonical_json, engine_version, utc_timestamp

CatalogKey = tuple[int, int, int, int]


@dataclass(frozen=True)
class CatalogRecord:
    key: CatalogKey
    exists: bool
    count: int
    generators: tuple[str, ...]
    generators_truncated: bool
    pairing_s: int
    pairing_t: int
    engine_version: str
    timestamp: str
    oracle_checked: bool

    def result_dict(self) -> dict[str, Any]:
        return {
            "exists": self.exists,
            "count": self.count,
            "generators": list(self.generators),
            "generators_truncated": self.generators_truncated,
            "pairing": {"s": self.pairing_s, "t": self.pairing_t},
        }

    def to_dict(self) -> dict[str, Any]:
        p, s, n, a = self.key
        return {
            "key": {"p": p, "s": s, "n": n, "a": a},
            "result": self.result_dict(),
            "provenance": {
                "engine_version": self.engine_version,
                "timestamp": self.timestamp,
                "oracle_checked": self.oracle_checked,
            },
        }

    def to_line(self) -> str:
        return canonical_json(self.to_dict()) + "\n"

    @classmethod
    def from_dict(cls, obj: dict[str, Any]) -> "CatalogRecord":
        key, result, provenance = obj["key"], obj["result"], obj["provenance"]
        return cls(
            key=(int(key["p"]), int(key["s"]), int(key["n"]), int(key["a"])),
            exists=bool(result["exists"]),
            count=int(result["count"]),
            generators=tuple(str(g) for g in result["generators"]),
            generators_truncated=bool(result["generators_truncated"]),
            pairing_s=int(result["pairing"]["s"]),
            pairing_t=int(result["pairing"]["t"]),
            engine_version=str(provenance["engine_version"]),
            timestamp=str(provenance["timestamp"]),
            oracle_checked=bool(provenance["oracle_checked"]),
        )


def build_record(
    field: FieldSpec,
    n: int,
    *,
    verify: bool = False,
    generator_limit: int = DEFAULT_CATALOG_GENERATOR_LIMIT,
    limits: OracleLimits | None = None,
    verbose: bool = False,
) -> CatalogRecord:
    """Classify x^n + 1 over ``field``; ``verify`` cross-checks with the oracle."""
    evidence = thm1_exists_selfdual(field, n)
    count = count_selfdual_negacyclic(field, n)
    truncated = count > generator_limit
    if truncated:
        warnings.warn(
            f"{count} generators for n={n} over {field.label}; catalog list left empty",
            UserWarning,
            stacklevel=2,
        )
        generators: list[str] = []
    else:
        generators = [format_poly(g) for g in enumerate_selfdual_negacyclic(field, n)]

    oracle_checked = False
    if verify:
        try:
            found = oracle_selfdual_search(field, n, -1, limits=limits, verbose=verbose)
        except OracleRangeExceeded as e:
            warnings.warn(f"[Catalog] {field.label} n={n} not oracle-checked: {e}", UserWarning, stacklevel=2)
        else:
            if bool(found) != evidence.exists or len(found) != count:
                raise AssertionError(
                    f"engine and oracle disagree for n={n} over {field.label}: "
                    f"exists={evidence.exists} count={count} oracle={len(found)}"
                )
            oracle_checked = True

    return CatalogRecord(
        key=(field.p, field.s, n, -1),
        exists=evidence.exists,
        count=count,
        generators=tuple(generators),
        generators_truncated=truncated,
        pairing_s=evidence.s,
        pairing_t=evidence.t,
        engine_version=engine_version(),
        timestamp=utc_timestamp(),
        oracle_checked=oracle_checked,
    )


def read_catalog(path: str | Path) -> list[CatalogRecord]:
    path = Path(path)
    if not path.exists():
        return []
    records = []
    with path.open("r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                records.append(CatalogRecord.from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                raise CatalogCorruptError(str(path), line_number, str(e)) from e
    return records


def append_records(path: str | Path, records: Iterable[CatalogRecord], verbose: bool = False) -> list[CatalogRecord]:
    """Append records whose key is not yet in the file; returns the ones written."""
    path = Path(path)
    known = {r.key for r in read_catalog(path)}
    fresh = []
    for record in records:
        if record.key in known:
            continue
        known.add(record.key)
        fresh.append(record)
    if fresh:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("a", encoding="utf-8", newline="\n") as f:
            for record in fresh:
                f.write(record.to_line())
    if verbose:
        print(f"[Catalog] {path}: {len(fresh)} appended, {len(known) - len(fresh)} already present")
    return fresh


def catalog_keys(path: str | Path) -> set[CatalogKey]:
    return {r.key for r in read_catalog(path)}
