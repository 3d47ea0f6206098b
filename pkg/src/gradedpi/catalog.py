"""Named algebras: the bodies B whose Grassmann envelopes E(B) are the listed
G-graded algebras, each with declared Wedderburn data."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import (
    AlgebraError,
    GradedAlgebra,
    group_algebra,
    matrix_elementary,
    matrix_subalgebra,
    superfield,
    triangular_subalgebra,
    twisted_group_algebra,
)
from .groups import (
    ExtendedDegree,
    Group,
    GroupElement,
    element_label,
    parse_extended_label,
    parse_label,
    sign_cocycle,
    subgroup_generated,
    trivial_cocycle,
)


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    id: str
    params: tuple
    group: Group
    body: GradedAlgebra
    description: str = ""

    @property
    def spec(self) -> str:
        p = ",".join(str(x) for x in self.params)
        return f"{self.id}({p})@{self.group}" if self.params else f"{self.id}@{self.group}"


def ext(g: GroupElement, parity: int = 0) -> ExtendedDegree:
    return ExtendedDegree(g, parity)


def cumulative(group: Group, underline: Sequence[GroupElement]) -> list[ExtendedDegree]:
    """(1, g1, g1 g2, g1 g2 g3, ...) as even degrees."""
    out = [ext(group.identity)]
    acc = group.identity
    for g in underline:
        acc = acc * g
        out.append(ext(acc))
    return out


def _unit(dim: int, *idx: int) -> list[int]:
    v = [0] * dim
    for i in idx:
        v[i] = 1
    return v


def _wedderburn(A: GradedAlgebra, components: Sequence[Sequence[str]], radical: Sequence[str]) -> GradedAlgebra:
    d = A.dim
    comps = [[_unit(d, A.index(l)) for l in c] for c in components]
    rad = [_unit(d, A.index(l)) for l in radical]
    return A.with_wedderburn(comps, rad)


def _simple(A: GradedAlgebra) -> GradedAlgebra:
    return A.with_wedderburn([[_unit(A.dim, i) for i in range(A.dim)]], [])


def _element_of_order(group: Group, n: int) -> GroupElement:
    for el in group.elements():
        if el.order() == n:
            return el
    raise CatalogError(f"group {group} has no element of order {n}")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


# ---------------------------------------------------------------------------
# matrix patterns


def pattern_M(grading: Sequence[ExtendedDegree], name: str = "M") -> GradedAlgebra:
    """5x5 pattern: row 1 free beyond column 1, row 2 free from column 2, the
    (3,4) block [[u, v], [v, u]], and entries (3,5), (4,5)."""
    basis, labels = [], []

    def add(lab, entries):
        basis.append({(i, j, 0): 1 for i, j in entries})
        labels.append(lab)
    for j in (1, 2, 3, 4):
        add(f"e1{j + 1}", [(0, j)])
    for j in (1, 2, 3, 4):
        add(f"e2{j + 1}", [(1, j)])
    add("e33+e44", [(2, 2), (3, 3)])
    add("e34+e43", [(2, 3), (3, 2)])
    add("e35", [(2, 4)])
    add("e45", [(3, 4)])
    A = matrix_subalgebra(name, 5, grading, basis, labels)
    return _wedderburn(A, [["e22"], ["e33+e44", "e34+e43"]],
                       ["e12", "e13", "e14", "e15", "e23", "e24", "e25", "e35", "e45"])


def pattern_N(grading: Sequence[ExtendedDegree], name: str = "N") -> GradedAlgebra:
    """5x5 pattern: row 1 free beyond column 1, the (2,3) block [[u, v], [v, u]],
    rows 2-3 free in columns 4-5, and entries (4,4), (4,5)."""
    basis, labels = [], []

    def add(lab, entries):
        basis.append({(i, j, 0): 1 for i, j in entries})
        labels.append(lab)
    for j in (1, 2, 3, 4):
        add(f"e1{j + 1}", [(0, j)])
    add("e22+e33", [(1, 1), (2, 2)])
    add("e23+e32", [(1, 2), (2, 1)])
    for i in (1, 2):
        for j in (3, 4):
            add(f"e{i + 1}{j + 1}", [(i, j)])
    add("e44", [(3, 3)])
    add("e45", [(3, 4)])
    A = matrix_subalgebra(name, 5, grading, basis, labels)
    return _wedderburn(A, [["e22+e33", "e23+e32"], ["e44"]],
                       ["e12", "e13", "e14", "e15", "e24", "e25", "e34", "e35", "e45"])


def pattern_P(grading: Sequence[ExtendedDegree], name: str = "P") -> GradedAlgebra:
    """4x4 pattern: a11 = a44, the (2,3) block [[u, v], [v, u]], free (1,2..4),
    (2,4), (3,4)."""
    basis, labels = [], []

    def add(lab, entries):
        basis.append({(i, j, 0): 1 for i, j in entries})
        labels.append(lab)
    add("e11+e44", [(0, 0), (3, 3)])
    for j in (1, 2, 3):
        add(f"e1{j + 1}", [(0, j)])
    add("e22+e33", [(1, 1), (2, 2)])
    add("e23+e32", [(1, 2), (2, 1)])
    add("e24", [(1, 3)])
    add("e34", [(2, 3)])
    A = matrix_subalgebra(name, 4, grading, basis, labels)
    return _wedderburn(A, [["e11+e44"], ["e22+e33", "e23+e32"]], ["e12", "e13", "e14", "e24", "e34"])


# ---------------------------------------------------------------------------
# constructors


def build_A1(G: Group, g: GroupElement, i: int) -> GradedAlgebra:
    return _simple(matrix_elementary(2, [ext(G.identity), ext(g, i)], name=f"M2^{element_label(g)},{i}"))


def build_A2(G: Group, p: int, g: GroupElement | None = None) -> GradedAlgebra:
    if not _is_prime(p):
        raise CatalogError(f"A2 needs a prime, got {p}")
    if G.order % p:
        raise CatalogError(f"A2({p}) needs p | |G|, but |G| = {G.order}")
    g = g if g is not None else _element_of_order(G, p)
    if g.order() != p:
        raise CatalogError(f"A2({p}): element {g} has order {g.order()}")
    return _simple(group_algebra(subgroup_generated([g]), G, name=f"FC{p}"))


def build_A3(G: Group, g: GroupElement | None = None) -> GradedAlgebra:
    g = g if g is not None else _element_of_order(G, 4)
    if g.order() != 4:
        raise CatalogError(f"A3 needs an element of order 4, got {g}")
    return _simple(group_algebra(subgroup_generated([g]), G, name="FC4"))


def build_A4(G: Group, g: GroupElement | None = None) -> GradedAlgebra:
    g = g if g is not None else _element_of_order(G, 4)
    if g.order() != 4:
        raise CatalogError(f"A4 needs an element of order 4, got {g}")
    return _simple(group_algebra(subgroup_generated([ext(g, 1)]), G, name="FC4,1"))


def klein_pair(G: Group) -> tuple[GroupElement, GroupElement]:
    inv = sorted((x for x in G.elements() if x.order() == 2),
                 key=lambda x: (len(element_label(x)), element_label(x)))
    if not inv:
        raise CatalogError(f"group {G} has no element of order 2")
    g = inv[0]
    for h in inv[1:]:
        if h != g:
            return g, h
    raise CatalogError(f"group {G} lacks two distinct elements of order 2")


def build_A5(G: Group, i: int, j: int, cocycle: str = "sign",
             g: GroupElement | None = None, h: GroupElement | None = None) -> GradedAlgebra:
    if g is None or h is None:
        g, h = klein_pair(G)
    if g.order() != 2 or h.order() != 2 or g == h:
        raise CatalogError("A5 needs two distinct elements of order 2")
    a, b = ext(g, i), ext(h, j)
    if cocycle == "sign":
        c = sign_cocycle(a, b)
    elif cocycle == "trivial":
        c = trivial_cocycle(subgroup_generated([a, b]))
    else:
        raise CatalogError(f"unknown cocycle {cocycle!r} (use sign or trivial)")
    return _simple(twisted_group_algebra(c, G, name=f"F^aH{i},{j}"))


def build_A6(G: Group, g1, g2, g3) -> GradedAlgebra:
    A = triangular_subalgebra(4, cumulative(G, [g1, g2, g3]), identify=[[0, 3]], name="A6")
    return _wedderburn(A, [["e11+e44"], ["e22"], ["e33"]], ["e12", "e13", "e14", "e23", "e24", "e34"])


def build_A7(G: Group, g1, g2, g3, g4) -> GradedAlgebra:
    A = triangular_subalgebra(5, cumulative(G, [g1, g2, g3, g4]), zero=[0, 4], name="A7")
    rad = [f"e{i}{j}" for i in range(1, 6) for j in range(i + 1, 6)]
    return _wedderburn(A, [["e22"], ["e33"], ["e44"]], rad)


def build_A8(G: Group, g1, g2) -> GradedAlgebra:
    """Body over F + cF (c odd, c^2 = 1) of the pattern [[a, x, y], [0, b, z], [0, 0, a]],
    b even; grading from the cumulative tuple of (1, g2, g1)."""
    S = superfield(G)
    grading = cumulative(G, [g2, g1])
    basis, labels = [], []
    basis.append({(0, 0, 0): 1, (2, 2, 0): 1})
    labels.append("e11+e33")
    basis.append({(0, 0, 1): 1, (2, 2, 1): 1})
    labels.append("c(e11+e33)")
    basis.append({(1, 1, 0): 1})
    labels.append("e22")
    for i, j in ((0, 1), (0, 2), (1, 2)):
        basis.append({(i, j, 0): 1})
        labels.append(f"e{i + 1}{j + 1}")
        basis.append({(i, j, 1): 1})
        labels.append(f"ce{i + 1}{j + 1}")
    A = matrix_subalgebra("A8", 3, grading, basis, labels, S)
    return _wedderburn(A, [["e11+e33", "c(e11+e33)"], ["e22"]],
                       ["e12", "ce12", "e13", "ce13", "e23", "ce23"])


def _prod(*xs):
    acc = xs[0]
    for x in xs[1:]:
        acc = acc * x
    return acc


A9_TUPLES = {
    # parities of positions 2..5 of (e, g1, g1g2, g1g2, g1g2g3)
    "A9": (0, 0, 1, 0),
    "A9_1": (0, 0, 1, 1),
    "A9_2": (1, 1, 0, 1),
    "A9_3": (1, 1, 0, 0),
}
A10_TUPLES = {
    # parities of positions 2..5 of (e, g1, g1, g1g2, g1g2g3)
    "A10": (0, 1, 0, 0),
    "A10_1": (1, 0, 1, 1),
    "A10_2": (0, 1, 0, 1),
    "A10_3": (1, 0, 1, 0),
}


def build_A9(G: Group, g1, g2, g3, variant: str = "A9") -> GradedAlgebra:
    p = A9_TUPLES[variant]
    gs = [g1, g1 * g2, g1 * g2, _prod(g1, g2, g3)]
    grading = [ext(G.identity)] + [ext(g, q) for g, q in zip(gs, p)]
    return pattern_M(grading, name=variant)


def build_A10(G: Group, g1, g2, g3, variant: str = "A10") -> GradedAlgebra:
    p = A10_TUPLES[variant]
    gs = [g1, g1, g1 * g2, _prod(g1, g2, g3)]
    grading = [ext(G.identity)] + [ext(g, q) for g, q in zip(gs, p)]
    return pattern_N(grading, name=variant)


def build_A11(G: Group, g1, g2, last_parity: int = 0, name: str = "A11") -> GradedAlgebra:
    grading = [ext(G.identity), ext(g1, 0), ext(g1, 1), ext(g1 * g2, last_parity)]
    return pattern_P(grading, name=name)


def build_B1(G: Group, t1, t2) -> GradedAlgebra:
    _first_identity("B1", t1)
    A = matrix_subalgebra("B1", 2, [ext(t1), ext(t2)], [{(0, 1, 0): 1}, {(1, 1, 0): 1}], ["e12", "e22"])
    return _wedderburn(A, [["e22"]], ["e12"])


def build_B2(G: Group, t1, t2, t3) -> GradedAlgebra:
    """[[u, v, a], [v, u, b], [0, 0, 0]] with u, a even and v, b odd."""
    _first_identity("B2", t1)
    grading = [ext(t1), ext(t2, 1), ext(t3, 0)]
    basis = [{(0, 0, 0): 1, (1, 1, 0): 1}, {(0, 1, 0): 1, (1, 0, 0): 1}, {(0, 2, 0): 1}, {(1, 2, 0): 1}]
    A = matrix_subalgebra("B2", 3, grading, basis, ["e11+e22", "e12+e21", "e13", "e23"])
    return _wedderburn(A, [["e11+e22", "e12+e21"]], ["e13", "e23"])


def build_C1(G: Group, t1, t2, t3) -> GradedAlgebra:
    """[[0, a, b], [0, u, v], [0, v, u]] with u, a even and v, b odd."""
    _first_identity("C1", t1)
    grading = [ext(t1), ext(t2, 0), ext(t3, 1)]
    basis = [{(0, 1, 0): 1}, {(0, 2, 0): 1}, {(1, 1, 0): 1, (2, 2, 0): 1}, {(1, 2, 0): 1, (2, 1, 0): 1}]
    A = matrix_subalgebra("C1", 3, grading, basis, ["e12", "e13", "e22+e33", "e23+e32"])
    return _wedderburn(A, [["e22+e33", "e23+e32"]], ["e12", "e13"])


def build_C2(G: Group, t1, t2) -> GradedAlgebra:
    _first_identity("C2", t1)
    A = matrix_subalgebra("C2", 2, [ext(t1), ext(t2)], [{(0, 0, 0): 1}, {(0, 1, 0): 1}], ["e11", "e12"])
    return _wedderburn(A, [["e11"]], ["e12"])


def build_D(G: Group, t1, t2, t3) -> GradedAlgebra:
    _first_identity("D", t1)
    A = triangular_subalgebra(3, [ext(t1), ext(t2), ext(t3)], identify=[[0, 2]], name="D")
    return _wedderburn(A, [["e11+e33"], ["e22"]], ["e12", "e13", "e23"])


def build_D0(G: Group, t1, t2, t3, t4) -> GradedAlgebra:
    _first_identity("D0", t1)
    A = triangular_subalgebra(4, [ext(t) for t in (t1, t2, t3, t4)], zero=[0, 3], name="D0")
    rad = [f"e{i}{j}" for i in range(1, 5) for j in range(i + 1, 5)]
    return _wedderburn(A, [["e22"], ["e33"]], rad)


def build_E(G: Group, b: GroupElement | None = None) -> GradedAlgebra:
    """F + cF, c odd with G-degree b (trivial by default); its envelope is E or E^b."""
    if b is not None and b.order() != 2:
        raise CatalogError(f"E_b needs an element of order 2, got {b}")
    S = superfield(G, b)
    S.name = "E" if b is None else f"E^{element_label(b)}"
    return _simple(S)


def _first_identity(name: str, t) -> None:
    if not t.is_identity:
        raise CatalogError(f"{name}: first tuple entry must be the identity, got {t}")


# ---------------------------------------------------------------------------
# parsing catalog specs

DEFAULT_GROUPS = {"A2": None, "A3": "Z4", "A4": "Z4", "A5": "Z2xZ2", "E_trivial": "1"}

SIGNATURES = {
    "A1": ("g,i", 4), "A2": ("p[,g]", "p"), "A3": ("[g]", 4), "A4": ("[g]", 4),
    "A5": ("i,j[,cocycle[,g,h]]", 4), "A6": ("g1,g2,g3", 9), "A7": ("g1,g2,g3,g4", 13),
    "A8": ("g1,g2", 9), "A9": ("g1,g2,g3", 12), "A9_1": ("g1,g2,g3", 12), "A9_2": ("g1,g2,g3", 12),
    "A9_3": ("g1,g2,g3", 12), "A10": ("g1,g2,g3", 12), "A10_1": ("g1,g2,g3", 12),
    "A10_2": ("g1,g2,g3", 12), "A10_3": ("g1,g2,g3", 12), "A11": ("g1,g2", 8), "A12": ("g1,g2", 8),
    "B1": ("1,g", 2), "B2": ("1,1,g", 4), "C1": ("1,g,g", 4), "C2": ("1,g", 2),
    "D": ("1,g,h", 5), "D0": ("1,g,h,h'", 8), "E_trivial": ("", 2), "E_b": ("b", 2),
    "M_pattern": ("t1^p,...,t5^p", 12), "N_pattern": ("t1^p,...,t5^p", 12), "P_pattern": ("t1^p,...,t4^p", 8),
}

_SPEC_RE = re.compile(r"^\s*(?:catalog:)?\s*([A-Za-z][A-Za-z0-9_]*)\s*(?:\((.*)\))?\s*(?:@\s*(\S+))?\s*$")


def _split_params(text: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def build(spec: str, label_map=None) -> CatalogEntry:
    """Build from text like ``A6(g,1,g)@Z2`` or ``catalog:A2(3)@Z3``."""
    m = _SPEC_RE.match(spec)
    if not m:
        raise CatalogError(f"cannot parse catalog spec {spec!r}")
    ident, ptext, gtext = m.group(1), m.group(2) or "", m.group(3)
    if ident not in SIGNATURES:
        raise CatalogError(f"unknown catalog id {ident!r}; known: {', '.join(SIGNATURES)}")
    params = _split_params(ptext)
    if gtext is None:
        if ident == "A2" and params:
            gtext = f"Z{params[0]}"
        elif ident in DEFAULT_GROUPS and DEFAULT_GROUPS[ident]:
            gtext = DEFAULT_GROUPS[ident]
        else:
            raise CatalogError(f"{ident} needs a group, e.g. {ident}(...)@Z2")
    G = Group.parse(gtext)
    return build_entry(ident, params, G, label_map)


def build_entry(ident: str, params: Sequence[str], G: Group, label_map=None) -> CatalogEntry:
    lab = lambda s: parse_label(G, s, label_map)  # noqa: E731
    want = SIGNATURES[ident][0]
    try:
        body = _dispatch(ident, list(params), G, lab, label_map)
    except (AlgebraError, ValueError, IndexError, KeyError) as exc:
        if isinstance(exc, CatalogError):
            raise
        raise CatalogError(f"{ident}({','.join(params)}): {exc}; expected parameters ({want})") from None
    return CatalogEntry(ident, tuple(params), G, body)


def _need(ident: str, params: list, counts: Sequence[int]) -> None:
    if len(params) not in counts:
        raise CatalogError(f"{ident} takes {' or '.join(map(str, counts))} parameters "
                           f"({SIGNATURES[ident][0]}), got {len(params)}")


def _dispatch(ident: str, params: list[str], G: Group, lab: Callable, label_map) -> GradedAlgebra:
    if ident == "A1":
        _need(ident, params, [2])
        return build_A1(G, lab(params[0]), int(params[1]))
    if ident == "A2":
        _need(ident, params, [1, 2])
        return build_A2(G, int(params[0]), lab(params[1]) if len(params) > 1 else None)
    if ident in ("A3", "A4"):
        _need(ident, params, [0, 1])
        g = lab(params[0]) if params else None
        return build_A3(G, g) if ident == "A3" else build_A4(G, g)
    if ident == "A5":
        _need(ident, params, [2, 3, 5])
        coc = params[2] if len(params) > 2 else "sign"
        g = lab(params[3]) if len(params) == 5 else None
        h = lab(params[4]) if len(params) == 5 else None
        return build_A5(G, int(params[0]), int(params[1]), coc, g, h)
    if ident == "A6":
        _need(ident, params, [3])
        return build_A6(G, *map(lab, params))
    if ident == "A7":
        _need(ident, params, [4])
        return build_A7(G, *map(lab, params))
    if ident == "A8":
        _need(ident, params, [2])
        return build_A8(G, *map(lab, params))
    if ident.startswith("A9"):
        _need(ident, params, [3])
        return build_A9(G, *map(lab, params), variant=ident)
    if ident.startswith("A10"):
        _need(ident, params, [3])
        return build_A10(G, *map(lab, params), variant=ident)
    if ident in ("A11", "A12"):
        _need(ident, params, [2])
        return build_A11(G, *map(lab, params), last_parity=0 if ident == "A11" else 1, name=ident)
    simple = {"B1": (build_B1, 2), "B2": (build_B2, 3), "C1": (build_C1, 3), "C2": (build_C2, 2),
              "D": (build_D, 3), "D0": (build_D0, 4)}
    if ident in simple:
        fn, k = simple[ident]
        _need(ident, params, [k])
        return fn(G, *map(lab, params))
    if ident == "E_trivial":
        _need(ident, params, [0])
        return build_E(G)
    if ident == "E_b":
        _need(ident, params, [1])
        return build_E(G, lab(params[0]))
    if ident in ("M_pattern", "N_pattern", "P_pattern"):
        n = 4 if ident == "P_pattern" else 5
        _need(ident, params, [n])
        grading = [parse_extended_label(G, p, label_map) for p in params]
        if not grading[0].is_identity:
            raise CatalogError(f"{ident}: first tuple entry must be e")
        fn = {"M_pattern": pattern_M, "N_pattern": pattern_N, "P_pattern": pattern_P}[ident]
        return fn(grading, name=ident[0])
    raise CatalogError(f"unknown catalog id {ident!r}")


def default_instances() -> list[str]:
    """One representative instance per id (used by ``catalog list`` and the test suite)."""
    return [
        "A1(g,0)@Z2", "A1(g,1)@Z2", "A2(2)@Z2", "A2(3)@Z3", "A2(5)@Z5", "A3@Z4", "A4@Z4",
        "A5(0,0)@Z2xZ2", "A5(1,1)@Z2xZ2", "A5(1,0,trivial)@Z2xZ2",
        "A6(g,1,g)@Z2", "A6(1,1,1)@1", "A7(g,1,1,g)@Z2", "A8(g,1)@Z2",
        "A9(g,g,g)@Z3", "A9_1(g,g,g)@Z3", "A9_2(g,g,g)@Z3", "A9_3(g,g,g)@Z3",
        "A10(g,g,g)@Z3", "A10_1(g,g,g)@Z3", "A10_2(g,g,g)@Z3", "A10_3(g,g,g)@Z3",
        "A11(g,1)@Z2", "A12(g,1)@Z2", "B1(1,g)@Z3", "B2(1,1,g)@Z3", "C1(1,g,g)@Z3", "C2(1,g)@Z3",
        "D(1,g,h)@Z2xZ2", "D0(1,g,h,gh)@Z2xZ2", "E_trivial@1", "E_b(g)@Z2",
        "M_pattern(e,g^0,g^0,g^1,1^0)@Z2", "N_pattern(e,g^0,g^1,1^0,g^0)@Z2", "P_pattern(e,g^0,g^1,1^0)@Z2",
    ]


def catalog_listing() -> list[dict]:
    rows = []
    for ident, (sig, dim) in SIGNATURES.items():
        rows.append({"id": ident, "params": sig, "dim": dim})
    return rows


# ---------------------------------------------------------------------------
# non-comparability witnesses


@dataclass(frozen=True)
class WitnessEntry:
    """``poly`` should be an identity of ``holds_in`` and not of ``fails_in``.

    ``kind`` is ``witness`` for entries expected to match machine evaluation,
    or ``literal`` for a verbatim reading recorded for information only.
    """

    name: str
    poly: str
    holds_in: str
    fails_in: str
    kind: str = "witness"
    note: str = ""


def a5_witness_poly(cocycle_name: str = "sign") -> str:
    """alpha(g,h) y z - alpha(h,g) z y with y of degree h and z of degree g."""
    if cocycle_name == "sign":
        # alpha(g, h) = 1, alpha(h, g) = -1
        return "x1:h x2:g + x2:g x1:h"
    return "x1:h x2:g - x2:g x1:h"


def witness_table() -> list[WitnessEntry]:
    W = WitnessEntry
    return [
        W("A6 tuples", "x1:g x2:g x3:g", "A6(g2,g2,g2)@Z3", "A6(g,g,g)@Z3"),
        W("A6 tuples (reverse)", "x1:g2 x2:g2 x3:g2", "A6(g,g,g)@Z3", "A6(g2,g2,g2)@Z3"),
        W("A7 tuples", "x1:g x2:g x3:g x4:g", "A7(g2,g2,g2,g2)@Z3", "A7(g,g,g,g)@Z3"),
        W("A7 tuples (reverse)", "x1:g2 x2:g2 x3:g2 x4:g2", "A7(g,g,g,g)@Z3", "A7(g2,g2,g2,g2)@Z3"),
        # deg e12 = g2 and deg e23 = g1 for the tuple (1, g2, g1)
        W("A8 tuples", "x1:1 x2:g", "A8(1,g2)@Z3", "A8(g,1)@Z3",
          note="decoration read from the constructor: x1 has the degree of e12, x2 that of e23"),
        W("A8 tuples (reverse)", "x1:g2 x2:1", "A8(g,1)@Z3", "A8(1,g2)@Z3"),
        W("A8 printed decoration", "x1:g x2:1", "A8(1,g2)@Z3", "A8(g,1)@Z3", kind="literal",
          note="x1 carries g1 and x2 carries g2 as printed; with (g1,g2)=(g,1) this monomial vanishes"),
        W("A9 tuples", "x1:g x2:g x3:g", "A9(g2,g2,g2)@Z3", "A9(g,g,g)@Z3"),
        W("A9 tuples (reverse)", "x1:g2 x2:g2 x3:g2", "A9(g,g,g)@Z3", "A9(g2,g2,g2)@Z3"),
        W("A9 tuples differing only in g2", "x1:g x2:1 x3:g", "A9(g,g,g)@Z2", "A9(g,1,g)@Z2", kind="literal",
          note="the monomial is nonzero in both algebras (e12 e22 e23 and e12 e23 e35)"),
        W("A10 tuples", "x1:g x2:g x3:g", "A10(g2,g2,g2)@Z3", "A10(g,g,g)@Z3"),
        W("A10 tuples (reverse)", "x1:g2 x2:g2 x3:g2", "A10(g,g,g)@Z3", "A10(g2,g2,g2)@Z3"),
        W("A3 vs A4 commutator", "[x1:g, x2:g]", "A3@Z4", "A4@Z4"),
        W("A3 vs A4 anticommutator", "ac(x1:g, x2:g)", "A4@Z4", "A3@Z4"),
        W("A5 anticommutator, odd vs even", "ac(x1:g, x2:g)", "A5(1,0)@Z2xZ2", "A5(0,0)@Z2xZ2"),
        W("A5 anticommutator, odd vs even (1,1)", "ac(x1:g, x2:g)", "A5(1,1)@Z2xZ2", "A5(0,1)@Z2xZ2"),
        W("A5 cocycle-twisted commutator", a5_witness_poly("sign"), "A5(0,0)@Z2xZ2", "A5(1,1)@Z2xZ2"),
        W("A5 cocycle-twisted commutator, trivial cocycle", a5_witness_poly("trivial"),
          "A5(0,0,trivial)@Z2xZ2", "A5(1,1,trivial)@Z2xZ2"),
        W("A3 vs A1, g = 1", "[x1:1, x2:1]", "A3@Z4", "A1(1,0)@Z4"),
        W("A3 vs A1, g of order 2", "[x1:g2, x2:g2]", "A3@Z4", "A1(g2,0)@Z4"),
        W("A3 vs A1, g of order 4", "[x1:1, x2:g]", "A3@Z4", "A1(g,0)@Z4"),
        W("A3 vs A1 odd, g of order 4", "[x1:1, x2:g]", "A3@Z4", "A1(g,1)@Z4"),
        W("A4 vs A1, g of order 4", "[x1:1, x2:g]", "A4@Z4", "A1(g,0)@Z4"),
        W("A4 vs A1, printed anticommutator", "ac(x1:1, x2:g)", "A4@Z4", "A1(g,0)@Z4", kind="literal",
          note="the even unit times an odd element of degree g gives 2 a e b_g, nonzero"),
        W("A2(3) vs A1", "x1:g x2:g", "A1(g,0)@Z3", "A2(3)@Z3"),
        W("A5 vs A1", "[x1:1, x2:g]", "A5(0,0)@Z2xZ2", "A1(g,0)@Z2xZ2"),
        W("A11 vs A2", "[x1:1, x2:g]", "A2(2)@Z2", "A11(g,1)@Z2"),
        W("A11 vs A3", "[x1:1, x2:g]", "A3(g)@Z4", "A11(g,1)@Z4"),
        W("A11 vs A4", "ac(x1:1, x2:h)", "A4(g)@Z4xZ2", "A11(h,1)@Z4xZ2",
          note="g1 = h lies outside the cyclic group carrying A4"),
        W("A11 vs A5", "[x1:1, x2:g]", "A5(0,0)@Z2xZ2", "A11(g,1)@Z2xZ2"),
    ]
