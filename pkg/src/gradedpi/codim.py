"""Multilinear identity and central-polynomial kernels of E(B) per degree tuple,
graded codimension sequences, and verdicts for individual polynomials."""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import GradedAlgebra
from .envelope import BodyData, EnvelopeContext
from .groups import GroupElement, element_label
from .linalg import KernelTracker, Scalar, Subspace, num
from .poly import (GradedPoly, MultilinearPoly, PolySubspace, all_tuples, canonical_tuples,
                   multilinearize, parse, perm_index, permutations)

DEFAULT_BUDGET = 6


class BudgetExceeded(RuntimeError):
    """The requested computation is beyond the configured budget."""


def _deadline_from_env() -> float | None:
    ms = os.environ.get("GPI_BUDGET_MS")
    if not ms:
        return None
    return time.time() + float(ms) / 1000.0


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.time() > deadline:
        raise BudgetExceeded("time budget (GPI_BUDGET_MS) exhausted")


def word_values(data: BodyData, assignment: Sequence[int]) -> list[tuple[int, int, dict]]:
    """(permutation index, sign, body product) for every nonzero ordered product.

    Products are built depth first so shared prefixes are multiplied once and
    vanishing prefixes prune their whole subtree.
    """
    n = len(assignment)
    idx = perm_index(n)
    mult = data.mult
    odd = [data.parities[b] for b in assignment]
    out = []
    word: list[int] = []
    used = [False] * n

    def rec(acc: dict, inv: int):
        if len(word) == n:
            out.append((idx[tuple(word)], -1 if inv % 2 else 1, acc))
            return
        for i in range(n):
            if used[i]:
                continue
            b = assignment[i]
            if acc is None:
                nxt = {b: 1}
            else:
                nxt = {}
                for k, c in acc.items():
                    for m, d in mult[k][b].items():
                        nxt[m] = nxt.get(m, 0) + c * d
                nxt = {m: x for m, x in nxt.items() if x}
                if not nxt:
                    continue
            extra = 0
            if odd[i]:
                extra = sum(1 for j in word if odd[j] and j > i)
            used[i] = True
            word.append(i)
            rec(nxt, inv + extra)
            word.pop()
            used[i] = False

    rec(None, 0)
    return out


def _assignments(data: BodyData, degrees: Sequence[GroupElement]):
    return itertools.product(*(data.candidates(g) for g in degrees))


def _kernel_pair(data: BodyData, reducers, degrees: Sequence[GroupElement], central: bool = True,
                 deadline: float | None = None) -> tuple[Subspace, Subspace | None]:
    n = len(degrees)
    size = math.factorial(n)
    ident = KernelTracker(size)
    cent = KernelTracker(size) if central else None
    for count, assignment in enumerate(_assignments(data, degrees)):
        if count % 64 == 63:
            _check_deadline(deadline)
        if not ident.dim and (cent is None or not cent.dim):
            break
        vals = word_values(data, assignment)
        if not vals:
            continue
        cols: dict[int, dict[int, Scalar]] = {}
        for p, s, acc in vals:
            for k, c in acc.items():
                col = cols.setdefault(k, {})
                col[p] = col.get(p, 0) + s * c
        for col in cols.values():
            ident.add_column(col)
        if cent is not None and cent.dim:
            parity = sum(data.parities[b] for b in assignment) % 2
            red = reducers[parity]
            rcols: dict[int, dict[int, Scalar]] = {}
            for p, s, acc in vals:
                for k, c in acc.items():
                    for j, x in red[k].items():
                        col = rcols.setdefault(j, {})
                        col[p] = col.get(p, 0) + s * c * x
            for col in rcols.values():
                cent.add_column(col)
    return ident.subspace(), (cent.subspace() if cent is not None else None)


@dataclass(frozen=True)
class KernelPair:
    identities: PolySubspace
    central: PolySubspace

    @property
    def c(self) -> int:
        return self.identities.codim

    @property
    def cz(self) -> int:
        return self.central.codim

    @property
    def cdelta(self) -> int:
        return self.c - self.cz


def tuple_kernels(body: GradedAlgebra | EnvelopeContext, degrees: Sequence[GroupElement],
                  deadline: float | None = None) -> KernelPair:
    """Id(E(B)) and the central polynomials of E(B) inside P_{degrees}."""
    ctx = body if isinstance(body, EnvelopeContext) else EnvelopeContext(body)
    degrees = tuple(degrees)
    I, C = _kernel_pair(ctx.data, ctx.reducers, degrees, True, deadline)
    return KernelPair(PolySubspace(degrees, I), PolySubspace(degrees, C))


def identity_kernel(body: GradedAlgebra | EnvelopeContext, degrees: Sequence[GroupElement]) -> PolySubspace:
    ctx = body if isinstance(body, EnvelopeContext) else EnvelopeContext(body)
    I, _ = _kernel_pair(ctx.data, ctx.reducers, tuple(degrees), False)
    return PolySubspace(tuple(degrees), I)


def central_kernel(body: GradedAlgebra | EnvelopeContext, degrees: Sequence[GroupElement]) -> PolySubspace:
    return tuple_kernels(body, degrees).central


def _tuple_codims(data: BodyData, reducers, degrees, deadline) -> tuple[int, int]:
    size = math.factorial(len(degrees))
    if any(not data.candidates(g) for g in degrees):
        return 0, 0
    _check_deadline(deadline)
    I, C = _kernel_pair(data, reducers, degrees, True, deadline)
    return size - I.dim, size - C.dim


@dataclass(frozen=True)
class TupleRow:
    degrees: tuple[GroupElement, ...]
    c: int
    cz: int

    @property
    def cdelta(self) -> int:
        return self.c - self.cz

    @property
    def label(self) -> str:
        return "(" + ",".join(element_label(g) for g in self.degrees) + ")"


@dataclass
class CodimReport:
    n: int
    rows: list[TupleRow] = field(default_factory=list)

    @property
    def c(self) -> int:
        return sum(r.c for r in self.rows)

    @property
    def cz(self) -> int:
        return sum(r.cz for r in self.rows)

    @property
    def cdelta(self) -> int:
        return self.c - self.cz


def codim_sequence(body: GradedAlgebra, n_max: int, *, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                   deadline: float | None = None) -> list[CodimReport]:
    """Graded codimensions c, c^z and c^delta for n = 1..n_max.

    Each sorted tuple is computed once; reordered tuples share its values
    since renaming variables is an isomorphism of the multilinear spaces.
    """
    if n_max > budget:
        raise BudgetExceeded(f"n={n_max} exceeds the budget n<={budget}")
    if n_max < 1:
        raise ValueError("n must be at least 1")
    if deadline is None:
        deadline = _deadline_from_env()
    ctx = EnvelopeContext(body)
    data, reducers = ctx.data, ctx.reducers
    reports = []
    for n in range(1, n_max + 1):
        canon = [t for t, _ in canonical_tuples(body.group, n)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                res = list(pool.map(_tuple_codims, itertools.repeat(data), itertools.repeat(reducers),
                                    canon, itertools.repeat(deadline)))
        else:
            res = []
            for t in canon:
                _check_deadline(deadline)
                res.append(_tuple_codims(data, reducers, t, deadline))
        table = dict(zip(canon, res))
        rep = CodimReport(n)
        for t in all_tuples(body.group, n):
            c, cz = table[tuple(sorted(t))]
            rep.rows.append(TupleRow(t, c, cz))
        reports.append(rep)
    return reports


# ---------------------------------------------------------------------------
# single polynomials


@dataclass
class PolyVerdict:
    kind: str  # "identity", "proper-central" or "not-central"
    counterexample: dict | None = None

    @property
    def is_identity(self) -> bool:
        return self.kind == "identity"

    @property
    def is_central(self) -> bool:
        return self.kind != "not-central"


def _as_poly(f, body: GradedAlgebra, label_map=None) -> GradedPoly:
    return parse(f, body.group, label_map) if isinstance(f, str) else f


def classify(f: GradedPoly | str, body: GradedAlgebra | EnvelopeContext, label_map=None) -> PolyVerdict:
    """Decide whether f is a graded identity, a proper central polynomial or neither for E(B)."""
    ctx = body if isinstance(body, EnvelopeContext) else EnvelopeContext(body)
    B = ctx.body
    f = _as_poly(f, B, label_map)
    comps = multilinearize(f)
    nonzero = None
    for m in comps:
        for assignment in _assignments(ctx.data, m.degrees):
            v = ctx.eval_poly(m, assignment)
            if v.is_zero:
                continue
            where = {"component": m.to_graded(B.group).__str__(),
                     "assignment": [B.labels[b] for b in assignment],
                     "value": {B.labels[k]: str(x) for k, x in v.body}}
            if not ctx.is_central_value(v):
                return PolyVerdict("not-central", where)
            if nonzero is None:
                nonzero = where
    if nonzero is None:
        return PolyVerdict("identity")
    return PolyVerdict("proper-central", nonzero)


def is_identity(f: GradedPoly | str, body, label_map=None) -> bool:
    ctx = body if isinstance(body, EnvelopeContext) else EnvelopeContext(body)
    f = _as_poly(f, ctx.body, label_map)
    for m in multilinearize(f):
        for assignment in _assignments(ctx.data, m.degrees):
            if not ctx.eval_poly(m, assignment).is_zero:
                return False
    return True


def is_central(f: GradedPoly | str, body, label_map=None) -> bool:
    return classify(f, body, label_map).is_central


# ---------------------------------------------------------------------------
# sign-free route for bodies without odd part


def direct_identity_kernel(body: GradedAlgebra, degrees: Sequence[GroupElement]) -> PolySubspace:
    """Identities of B itself in P_{degrees}, by plain evaluation on basis elements.

    For a body with trivial odd part E(B) and B satisfy the same identities,
    so this is an independent check of the envelope kernel.
    """
    if body.has_odd_part:
        raise ValueError("direct evaluation needs a body with trivial odd part")
    n = len(degrees)
    perms = permutations(n)
    tracker = KernelTracker(len(perms))
    cands = [body.basis_of_degree(g) for g in degrees]
    for assignment in itertools.product(*cands):
        vecs = [body.basis_vector(b) for b in assignment]
        cols: dict[int, dict[int, Scalar]] = {}
        for p, w in enumerate(perms):
            v = body.product(*[vecs[i] for i in w])
            for k, x in enumerate(v):
                if x:
                    cols.setdefault(k, {})[p] = num(x)
        for col in cols.values():
            tracker.add_column(col)
    return PolySubspace(tuple(degrees), tracker.subspace())
