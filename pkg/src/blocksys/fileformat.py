"""Structure-constant documents.

A single JSON document carries one coalgebra (optionally with Hopf
structure).  All scalars are exact: "p/q" strings over Q; over an
extension field of degree d, a scalar is a list of d "p/q" strings
(coordinates in the power basis) and the document carries the monic
modulus under "scalar_modulus".

Serialization is canonical (sorted entries, fixed separators), so
writing the same data twice yields identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .coalgebra import CoalgebraData, HopfData
from .errors import FileFormatError
from .linalg import Field, Matrix
from .scalars import QQ, ExtensionField, format_rational, format_scalar, parse_rational, parse_scalar

FORMAT = "blocksys-structure-constants"
VERSION = 1


def _field_of(doc: dict) -> Field:
    deg = doc.get("scalar_field_degree", 1)
    if not isinstance(deg, int) or deg < 1:
        raise FileFormatError("scalar_field_degree must be a positive integer")
    if deg == 1:
        return QQ
    mod = doc.get("scalar_modulus")
    if not isinstance(mod, list) or len(mod) != deg + 1:
        raise FileFormatError("scalar_modulus must list deg+1 monic coefficients")
    try:
        coeffs = [parse_rational(c) for c in mod]
    except (ValueError, TypeError) as exc:
        raise FileFormatError(f"bad scalar_modulus: {exc}") from None
    return ExtensionField(coeffs)


def _entries_to_sparse(field: Field, entries: Any, dim: int, name: str) -> dict:
    if not isinstance(entries, list):
        raise FileFormatError(f"{name} must be a list of [i, j, k, scalar] entries")
    out = {}
    for ent in entries:
        if not (isinstance(ent, list) and len(ent) == 4):
            raise FileFormatError(f"{name} entry {ent!r} is not [i, j, k, scalar]")
        i, j, k, raw = ent
        if not all(isinstance(t, int) and 0 <= t < dim for t in (i, j, k)):
            raise FileFormatError(f"{name} entry {ent!r} has indices outside [0, {dim})")
        try:
            v = parse_scalar(field, raw)
        except (ValueError, TypeError) as exc:
            raise FileFormatError(f"{name} entry {ent!r}: {exc}") from None
        if (i, j, k) in out:
            raise FileFormatError(f"{name} entry ({i},{j},{k}) appears twice")
        if v:
            out[(i, j, k)] = v
    return out


def _vector(field: Field, raw: Any, dim: int, name: str) -> list:
    if not isinstance(raw, list) or len(raw) != dim:
        raise FileFormatError(f"{name} must be a list of {dim} scalars")
    try:
        return [parse_scalar(field, x) for x in raw]
    except (ValueError, TypeError) as exc:
        raise FileFormatError(f"bad {name}: {exc}") from None


def load_document(text: str) -> CoalgebraData | HopfData:
    """Parse a structure-constant document; returns HopfData when the
    multiplicative structure is present, else CoalgebraData."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FileFormatError("top level must be an object")
    if doc.get("format") not in (None, FORMAT):
        raise FileFormatError(f"unknown format tag {doc.get('format')!r}")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise FileFormatError("dim must be a positive integer")
    field = _field_of(doc)
    delta = _entries_to_sparse(field, doc.get("delta", []), dim, "delta")
    counit = _vector(field, doc.get("counit"), dim, "counit")

    hopf_keys = [k for k in ("mult", "unit", "antipode") if k in doc]
    if not hopf_keys:
        return CoalgebraData.make(field, dim, delta, counit)
    if len(hopf_keys) != 3:
        raise FileFormatError("mult, unit, antipode must be given together")
    mult = _entries_to_sparse(field, doc["mult"], dim, "mult")
    unit = _vector(field, doc["unit"], dim, "unit")
    anti = doc["antipode"]
    if not isinstance(anti, list) or len(anti) != dim:
        raise FileFormatError("antipode must be a dim x dim matrix")
    rows = [_vector(field, row, dim, "antipode row") for row in anti]
    return HopfData.make(field, dim, delta, counit, mult, unit, rows)


def _sparse_to_entries(sparse: dict) -> list:
    return [[i, j, k, format_scalar(v)] for (i, j, k), v in sorted(sparse.items())]


def dump_document(data: CoalgebraData | HopfData) -> str:
    """Serialize canonically (byte-deterministic)."""
    if isinstance(data, HopfData):
        co = data.coalgebra
    else:
        co = data
    doc: dict[str, Any] = {
        "format": FORMAT,
        "version": VERSION,
        "dim": co.dim,
    }
    if co.field.degree > 1:
        doc["scalar_field_degree"] = co.field.degree
        doc["scalar_modulus"] = [format_rational(c) for c in co.field.modulus]
    doc["delta"] = _sparse_to_entries(co.delta)
    doc["counit"] = [format_scalar(x) for x in co.counit]
    if isinstance(data, HopfData):
        doc["mult"] = _sparse_to_entries(data.mult)
        doc["unit"] = [format_scalar(x) for x in data.unit]
        doc["antipode"] = [[format_scalar(x) for x in row] for row in data.antipode.entries]
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def load_path(path: str) -> CoalgebraData | HopfData:
    with open(path, "r", encoding="utf-8") as fh:
        return load_document(fh.read())


def dump_path(path: str, data: CoalgebraData | HopfData) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_document(data))
