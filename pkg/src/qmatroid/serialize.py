"""JSON formats for matroids, families, closure maps, fields and reports.

All writers are deterministic: objects are emitted in canonical lattice
order, so equal objects serialize to identical bytes.
"""

from __future__ import annotations

import json
import sys
from typing import Any

from .errors import DimensionMismatch, QMatroidError
from .family import SubspaceFamily
from .gf import ExtField, ext_field_build
from .matroid import ClosureMap, FamilyKind, QMatroid, from_rank_table, uniform
from .representable import GeneratorMatrix, matroid_from_matrix, parse_elem, representable_matroid
from .subspace import Subspace, get_lattice


class FormatError(QMatroidError):
    """Malformed or unrecognised JSON document."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def space_to_json(S: Subspace) -> list[str]:
    return S.row_strings()


def space_from_json(rows, q: int, n: int) -> Subspace:
    rows = list(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch(f"rows {rows} are not vectors of length {n}")
    return Subspace.from_strings(rows, q, n)


# ---------------------------------------------------------------- matroids


def matroid_to_json(M: QMatroid) -> dict:
    lat = M.lattice
    return {
        "q": M.q,
        "n": M.n,
        "kind": "rank_table",
        "provenance": M.provenance,
        "entries": [
            {"space": S.row_strings(), "rank": int(r)} for S, r in zip(lat.spaces, M.ranks)
        ],
    }


def matroid_from_json(d: dict, check: bool = True) -> QMatroid:
    if "construction" in d:
        return build_construction(d, check=check)
    if d.get("kind") != "rank_table":
        raise FormatError(f"expected kind 'rank_table', got {d.get('kind')!r}")
    q, n = _qn(d)
    table = {}
    for e in d["entries"]:
        S = space_from_json(e["space"], q, n)
        if S in table:
            raise FormatError(f"duplicate entry for {S!r}")
        table[S] = int(e["rank"])
    M = from_rank_table(q, n, table, check=check)
    if d.get("provenance"):
        M.provenance = str(d["provenance"])
    return M


def _qn(d: dict) -> tuple[int, int]:
    try:
        return int(d["q"]), int(d["n"])
    except (KeyError, TypeError, ValueError):
        raise FormatError("document needs integer fields 'q' and 'n'") from None


# ---------------------------------------------------------------- families


def family_to_json(F: SubspaceFamily, kind: "FamilyKind | str | None" = None) -> dict:
    d: dict = {"q": F.q, "n": F.n}
    if kind is not None:
        d["kind"] = _kind_name(kind)
    d["members"] = F.to_rows()
    return d


def _kind_name(kind) -> str:
    try:
        return FamilyKind.parse(kind).value
    except ValueError:
        return str(kind)


def family_from_json(d: dict) -> SubspaceFamily:
    q, n = _qn(d)
    get_lattice(q, n)
    spaces = [space_from_json(rows, q, n) for rows in d["members"]]
    return SubspaceFamily.from_spaces(spaces, q, n)


# ---------------------------------------------------------------- closure


def closure_to_json(cl: ClosureMap) -> dict:
    lat = cl.lattice
    return {
        "q": cl.q,
        "n": cl.n,
        "kind": "closure",
        "entries": [
            {"space": S.row_strings(), "closure": lat.spaces[int(t)].row_strings()}
            for S, t in zip(lat.spaces, cl.table)
        ],
    }


def closure_from_json(d: dict) -> ClosureMap:
    q, n = _qn(d)
    mapping = {
        space_from_json(e["space"], q, n): space_from_json(e["closure"], q, n) for e in d["entries"]
    }
    return ClosureMap.from_mapping(q, n, mapping)


# ---------------------------------------------------------------- fields and constructions


def field_to_json(F: ExtField) -> dict:
    return F.to_dict()


def field_from_json(d: dict) -> ExtField:
    if "modulus" in d:
        return ExtField.from_dict(d)
    return ext_field_build(int(d["q"]), int(d["m"]))


def matrix_to_json(G: GeneratorMatrix) -> dict:
    return {"construction": "matrix", "field": field_to_json(G.field), "rows": G.to_strings()}


def build_construction(d: dict, check: bool = True) -> QMatroid:
    """Build from a construction spec (representable, uniform, matrix or rank_table)."""
    kind = d.get("construction")
    try:
        if kind == "representable":
            return representable_matroid(int(d["p"]), int(d["s"]), int(d["q"]))
        if kind == "uniform":
            return uniform(int(d["k"]), int(d["n"]), int(d["q"]))
        if kind == "matrix":
            F = field_from_json(d["field"])
            rows = tuple(tuple(parse_elem(F, str(x)) for x in row) for row in d["rows"])
            return matroid_from_matrix(GeneratorMatrix(F, rows), "matrix")
        if kind == "rank_table":
            return matroid_from_json({k: v for k, v in d.items() if k != "construction"}, check)
    except KeyError as e:
        raise FormatError(f"construction {kind!r} is missing field {e.args[0]!r}") from None
    raise FormatError(f"unknown construction {kind!r}")


# ---------------------------------------------------------------- dispatch


def load(d: dict, check: bool = True):
    """Decode any supported document: QMatroid, SubspaceFamily or ClosureMap."""
    if not isinstance(d, dict):
        raise FormatError("top-level JSON value must be an object")
    if "construction" in d:
        return build_construction(d, check)
    if d.get("kind") == "rank_table":
        return matroid_from_json(d, check)
    if d.get("kind") == "closure":
        return closure_from_json(d)
    if "members" in d:
        return family_from_json(d)
    raise FormatError("unrecognised document: expected a rank table, closure map, family or construction")


def to_json(obj, kind=None) -> dict:
    if isinstance(obj, QMatroid):
        return matroid_to_json(obj)
    if isinstance(obj, ClosureMap):
        return closure_to_json(obj)
    if isinstance(obj, SubspaceFamily):
        return family_to_json(obj, kind)
    if isinstance(obj, GeneratorMatrix):
        return matrix_to_json(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def read_file(path: str, check: bool = True):
    with open(path, encoding="utf-8") as fh:
        return load(json.load(fh), check)


def write_file(path: str | None, doc: dict) -> None:
    text = dumps(doc)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
