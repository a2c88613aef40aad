from __future__ import annotations

import json
from datetime import datetime, timezone
from importlib.metadata import PackageNotFoundError, version as package_version
from typing import Any

from .cyclo import Factorization
from .gf import FieldSpec, make_field
from .poly import Poly, format_poly

try:
    _PACKAGE_VERSION = package_version("selfdual_codes_lib")
except PackageNotFoundError:
    _PACKAGE_VERSION = "unknown"


def engine_version() -> str:
    return _PACKAGE_VERSION


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def canonical_json(obj: Any) -> str:
    """Sorted keys, no whitespace; floats are rejected."""
    _reject_floats(obj)
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def _reject_floats(obj: Any) -> None:
    if isinstance(obj, float):
        raise TypeError(f"float {obj!r} in canonical JSON")
    if isinstance(obj, dict):
        for value in obj.values():
            _reject_floats(value)
    elif isinstance(obj, (list, tuple)):
        for value in obj:
            _reject_floats(value)


def field_to_dict(field: FieldSpec) -> dict[str, Any]:
    prime = make_field(field.p, 1)
    return {
        "p": field.p,
        "s": field.s,
        "modulus": format_poly(Poly(prime, field.modulus)),
    }


def factorization_to_dict(fz: Factorization) -> dict[str, Any]:
    return {
        "field": field_to_dict(fz.field),
        "target": format_poly(fz.target),
        "n": fz.n,
        "a": fz.a,
        "core": fz.core,
        "r": fz.r,
        "s": fz.s,
        "t": fz.t,
        "factors": [
            {"poly": format_poly(f), "mult": mult, "pairing": fz.pairing_label(i)}
            for i, (f, mult) in enumerate(fz.factors)
        ],
    }


def verdict_to_dict(verdict: Any) -> dict[str, Any]:
    return {
        "claim_id": verdict.claim_id,
        "instance": dict(verdict.instance),
        "paper_outcome": verdict.paper_outcome,
        "engine_outcome": verdict.engine_outcome,
        "oracle_outcome": verdict.oracle_outcome,
        "status": verdict.status,
        "details": dict(verdict.details),
        "notes": list(verdict.notes),
    }
