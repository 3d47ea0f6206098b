"""JSON algebra documents.

A document looks like::

    {"name": "UT2", "group": {"orders": [2]},
     "basis": ["e11", "e12", "e22"],
     "deg": [[0, 0], [1, 0], [0, 0]],
     "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 2, 1, "1"], [2, 2, 2, "1"]],
     "unit": ["1", "0", "1"],
     "wedderburn": {"components": [[["1", "0", "0"]], [["0", "0", "1"]]],
                    "radical": [["0", "1", "0"]]}}

``deg`` entries are the group residues followed by the parity bit (the bit
may be omitted, meaning even).  Scalars are strings "p" or "p/q".  Emitting
sorts the structure constants, so emit(parse(emit(A))) == emit(A).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import AlgebraError, GradedAlgebra, WedderburnData, from_table
from .groups import ExtendedDegree, Group
from .linalg import Scalar, Subspace, num


class AlgebraFileError(ValueError):
    """Malformed algebra document."""


def _scalar_text(x: Scalar) -> str:
    return str(Fraction(x))


def _scalar(x: Any, where: str) -> Scalar:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise AlgebraFileError(f"{where}: expected a rational string like \"3/4\", got {x!r}")
    try:
        return num(Fraction(x))
    except (ValueError, ZeroDivisionError) as e:
        raise AlgebraFileError(f"{where}: bad rational {x!r}") from e


def to_document(A: GradedAlgebra) -> dict:
    doc: dict[str, Any] = {
        "name": A.name,
        "group": {"orders": list(A.group.orders)},
        "basis": list(A.labels),
        "deg": [d.to_list() for d in A.degrees],
        "mult": [[i, j, k, _scalar_text(c)]
                 for i, row in enumerate(A.mult) for j, prod in enumerate(row)
                 for k, c in sorted(prod.items()) if c],
    }
    if A.unit is not None:
        doc["unit"] = [_scalar_text(x) for x in A.unit]
    if A.wedderburn is not None:
        doc["wedderburn"] = {
            "components": [[[_scalar_text(x) for x in v] for v in C.basis] for C in A.wedderburn.components],
            "radical": [[_scalar_text(x) for x in v] for v in A.wedderburn.radical.basis],
        }
    return doc


def from_document(doc: dict) -> GradedAlgebra:
    if not isinstance(doc, dict):
        raise AlgebraFileError("an algebra document must be a JSON object")
    missing = [k for k in ("name", "group", "basis", "deg", "mult") if k not in doc]
    if missing:
        raise AlgebraFileError(f"missing field(s): {', '.join(missing)}")
    try:
        G = Group(tuple(int(n) for n in doc["group"]["orders"]))
    except (KeyError, TypeError, ValueError) as e:
        raise AlgebraFileError(f"group: expected {{\"orders\": [...]}} ({e})") from e
    labels = [str(x) for x in doc["basis"]]
    d = len(labels)
    if len(set(labels)) != d:
        raise AlgebraFileError("basis labels must be distinct")
    if len(doc["deg"]) != d:
        raise AlgebraFileError(f"deg has {len(doc['deg'])} entries for {d} basis elements")
    r = len(G.orders)
    degrees = []
    for i, entry in enumerate(doc["deg"]):
        entry = list(entry)
        if len(entry) not in (r, r + 1):
            raise AlgebraFileError(f"deg[{i}]: expected {r} residues and an optional parity bit")
        parity = int(entry[r]) if len(entry) > r else 0
        try:
            degrees.append(ExtendedDegree(G.element(entry[:r]), parity))
        except ValueError as e:
            raise AlgebraFileError(f"deg[{i}]: {e}") from e
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for n, entry in enumerate(doc["mult"]):
        if len(entry) != 4:
            raise AlgebraFileError(f"mult[{n}]: expected [i, j, k, \"p/q\"]")
        i, j, k = (int(x) for x in entry[:3])
        if not all(0 <= x < d for x in (i, j, k)):
            raise AlgebraFileError(f"mult[{n}]: index out of range 0..{d - 1}")
        if (i, j) in table and k in table[(i, j)]:
            raise AlgebraFileError(f"mult[{n}]: duplicate entry for ({i}, {j}, {k})")
        table.setdefault((i, j), {})[k] = _scalar(entry[3], f"mult[{n}]")
    unit: Any = False
    if "unit" in doc and doc["unit"] is not None:
        if len(doc["unit"]) != d:
            raise AlgebraFileError("unit must have one coordinate per basis element")
        unit = [_scalar(x, "unit") for x in doc["unit"]]
    try:
        A = from_table(str(doc["name"]), G, labels, degrees, table, unit=unit)
    except AlgebraError as e:
        raise AlgebraFileError(str(e)) from e
    w = doc.get("wedderburn")
    if w is not None:
        def vecs(rows, where):
            out = []
            for v in rows:
                if len(v) != d:
                    raise AlgebraFileError(f"{where}: vectors need {d} coordinates")
                out.append([_scalar(x, where) for x in v])
            return out
        comps = tuple(Subspace.span(vecs(c, "wedderburn.components"), d) for c in w.get("components", []))
        A.wedderburn = WedderburnData(comps, Subspace.span(vecs(w.get("radical", []), "wedderburn.radical"), d))
    return A


def dumps(A: GradedAlgebra) -> str:
    return json.dumps(to_document(A), indent=1, sort_keys=True)


def loads(text: str) -> GradedAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"not valid JSON: {e}") from e
    return from_document(doc)


def load(path: str | Path) -> GradedAlgebra:
    return loads(Path(path).read_text())


def save(A: GradedAlgebra, path: str | Path) -> None:
    Path(path).write_text(dumps(A) + "\n")
