"""Exponents from the Wedderburn-Malcev data of the body.

exp^G(E(B)) is the largest dimension of an admissible sum of graded-simple
components.  For exp^{G,delta} the engine looks for proper central
polynomials whose evaluation touches every component of a candidate sum and
reports the best certified dimension as a lower bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import GradedAlgebra, chain_product, homogeneous_basis, supercenter
from .codim import BudgetExceeded, _check_deadline, _deadline_from_env, tuple_kernels
from .envelope import EnvelopeContext
from .groups import ExtendedDegree, GroupElement, element_label
from .linalg import Scalar, Subspace, num
from .poly import GradedPoly, MultilinearPoly, canonical_tuples, commutator, multilinearize

RADICAL = -1


class MissingWedderburnData(ValueError):
    pass


def _require_wedderburn(B: GradedAlgebra):
    if B.wedderburn is None:
        raise MissingWedderburnData(f"{B.name} has no Wedderburn data")
    return B.wedderburn


@dataclass(frozen=True)
class AdmissibilityCertificate:
    components: tuple[int, ...]
    witness: tuple[Scalar, ...]
    dim: int


def _component_dims(B: GradedAlgebra) -> list[int]:
    return [C.dim for C in _require_wedderburn(B).components]


def is_admissible(B: GradedAlgebra, seq: Sequence[int]) -> Subspace:
    """B_{i1} J B_{i2} ... J B_{ik} as a subspace (nonzero iff admissible in this order)."""
    W = _require_wedderburn(B)
    spaces = []
    for k, i in enumerate(seq):
        if k:
            spaces.append(W.radical)
        spaces.append(W.components[i])
    return chain_product(B, spaces)


def admissible_max(B: GradedAlgebra) -> tuple[int, AdmissibilityCertificate | None]:
    """Exhaustive search over ordered sequences of distinct components."""
    W = _require_wedderburn(B)
    dims = [C.dim for C in W.components]
    best: tuple[int, AdmissibilityCertificate | None] = (0, None)
    m = len(dims)
    for k in range(1, m + 1):
        for seq in itertools.permutations(range(m), k):
            total = sum(dims[i] for i in seq)
            if total <= best[0]:
                continue
            P = is_admissible(B, seq)
            if P.dim:
                best = (total, AdmissibilityCertificate(seq, P.basis[0], total))
    return best


def admissible_sets(B: GradedAlgebra) -> list[tuple[int, ...]]:
    """Component sets admitting some admissible ordering, largest first."""
    W = _require_wedderburn(B)
    dims = [C.dim for C in W.components]
    out = []
    for k in range(1, len(dims) + 1):
        for S in itertools.combinations(range(len(dims)), k):
            if any(is_admissible(B, seq).dim for seq in itertools.permutations(S)):
                out.append(S)
    out.sort(key=lambda S: (-sum(dims[i] for i in S), S))
    return out


# ---------------------------------------------------------------------------
# adapted basis and homogeneous evaluation


@dataclass(frozen=True)
class AdaptedElement:
    vector: tuple[Scalar, ...]
    degree: ExtendedDegree
    owner: int  # component index, or RADICAL

    @property
    def sparse(self) -> dict[int, Scalar]:
        return {i: x for i, x in enumerate(self.vector) if x}


def adapted_basis(B: GradedAlgebra) -> list[AdaptedElement]:
    W = _require_wedderburn(B)
    out = []
    for owner, U in list(enumerate(W.components)) + [(RADICAL, W.radical)]:
        for v in homogeneous_basis(B, U):
            out.append(AdaptedElement(tuple(v), B.homogeneous_degree(v), owner))
    return out


def eval_homogeneous(B: GradedAlgebra, f: MultilinearPoly, elems: Sequence[AdaptedElement]) -> dict[int, Scalar]:
    """Body part of f evaluated on homogeneous elements, each tensored with its own generator when odd."""
    odd = [e.degree.parity for e in elems]
    total: dict[int, Scalar] = {}
    for word, c in f.coeffs:
        acc = elems[word[0]].sparse
        for i in word[1:]:
            acc = B.mul_sparse(acc, elems[i].sparse)
            if not acc:
                break
        if not acc:
            continue
        seq = [i for i in word if odd[i]]
        inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
        s = -c if inv % 2 else c
        for k, x in acc.items():
            total[k] = total.get(k, 0) + s * x
    return {k: num(x) for k, x in total.items() if x}


@dataclass
class CentralWitness:
    n: int
    degrees: tuple[GroupElement, ...]
    poly: MultilinearPoly
    assignment: tuple[AdaptedElement, ...]
    value: dict[int, Scalar]
    targets: tuple[int, ...]
    mode: str

    def describe(self, B: GradedAlgebra) -> dict:
        def show(v):
            return " + ".join(f"{num(x)}*{B.labels[i]}" if x != 1 else B.labels[i]
                              for i, x in enumerate(v) if x)
        return {
            "n": self.n,
            "tuple": [element_label(g) for g in self.degrees],
            "polynomial": str(self.poly.to_graded(B.group)),
            "assignment": [show(e.vector) for e in self.assignment],
            "owners": [e.owner for e in self.assignment],
            "value": show([self.value.get(i, 0) for i in range(B.dim)]),
            "targets": list(self.targets),
            "mode": self.mode,
        }


def _touches(elems: Sequence[AdaptedElement], targets: Sequence[int]) -> bool:
    owners = {e.owner for e in elems}
    return all(t in owners for t in targets)


def _word_trie(f: MultilinearPoly) -> dict:
    """Nested dict over the words of f; the key None holds the coefficient at a leaf."""
    root: dict = {}
    for word, c in f.coeffs:
        node = root
        for i in word:
            node = node.setdefault(i, {})
        node[None] = c
    return root


def all_values_central(B: GradedAlgebra, f: MultilinearPoly) -> tuple[bool, tuple | None]:
    """Check every basis evaluation of f in E(B) is central; returns (ok, failing assignment)."""
    ctx = EnvelopeContext(B)
    mult = B.mult
    par = B.parities
    trie = _word_trie(f)
    red = ctx.reducers
    for assignment in itertools.product(*(ctx.candidates(g) for g in f.degrees)):
        odd = [par[b] for b in assignment]
        total: dict[int, Scalar] = {}

        def walk(node, acc, seq):
            for i, child in node.items():
                if i is None:
                    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
                    c = -child if inv % 2 else child
                    for k, x in acc.items():
                        total[k] = total.get(k, 0) + c * x
                    continue
                b = assignment[i]
                if acc is None:
                    nxt = {b: 1}
                else:
                    nxt = {}
                    for k, x in acc.items():
                        for m, y in mult[k][b].items():
                            nxt[m] = nxt.get(m, 0) + x * y
                    nxt = {m: x for m, x in nxt.items() if x}
                    if not nxt:
                        continue
                walk(child, nxt, seq + [i] if odd[i] else seq)

        walk(trie, None, [])
        r = red[sum(odd) % 2]
        rem: dict[int, Scalar] = {}
        for k, x in total.items():
            if x:
                for j, y in r[k].items():
                    rem[j] = rem.get(j, 0) + x * y
        if any(rem.values()):
            return False, assignment
    return True, None


def verify_witness(B: GradedAlgebra, w: CentralWitness) -> bool:
    """Re-check centrality over every basis assignment and the touching evaluation."""
    if not _touches(w.assignment, w.targets):
        return False
    val = eval_homogeneous(B, w.poly, w.assignment)
    if not val or val != w.value:
        return False
    return all_values_central(B, w.poly)[0]


# ---------------------------------------------------------------------------
# full mode


def _full_search(B: GradedAlgebra, targets, n_max: int, basis: list[AdaptedElement], deadline) -> CentralWitness | None:
    for n in range(1, n_max + 1):
        for degrees, _ in canonical_tuples(B.group, n):
            _check_deadline(deadline)
            pools = [[e for e in basis if e.degree.g == g] for g in degrees]
            if any(not p for p in pools):
                continue
            K = tuple_kernels(B, degrees, deadline)
            if K.central.dim == K.identities.dim:
                continue
            # a complement of the identities inside the central kernel
            polys = [p for p in K.central.basis() if not K.identities.contains(p)]
            for elems in itertools.product(*pools):
                if not _touches(elems, targets):
                    continue
                for f in polys:
                    val = eval_homogeneous(B, f, elems)
                    if val:
                        return CentralWitness(n, degrees, f, tuple(elems), val, tuple(targets), "full")
    return None


# ---------------------------------------------------------------------------
# template mode: products of left-normed commutators of consecutive variables


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def template_poly(group, blocks: Sequence[int], degrees: Sequence[GroupElement]) -> MultilinearPoly:
    acc = None
    pos = 0
    for ln in blocks:
        c = GradedPoly.var(group, pos + 1, degrees[pos])
        for k in range(1, ln):
            c = commutator(c, GradedPoly.var(group, pos + k + 1, degrees[pos + k]))
        pos += ln
        acc = c if acc is None else acc * c
    (m,) = multilinearize(acc)
    return m


class _TemplateContext:
    def __init__(self, B: GradedAlgebra, basis: list[AdaptedElement]):
        self.B = B
        self.basis = basis
        self.Z = (supercenter(B, 0), supercenter(B, 1))
        self._spans: dict = {}
        self._values: dict = {}

    def homogeneous_space(self, g: GroupElement, q: int) -> Subspace:
        return Subspace.span([e.vector for e in self.basis if e.degree == ExtendedDegree(g, q)], self.B.dim)

    def block_spans(self, degs: tuple) -> dict[int, Subspace]:
        """Span of the values of [x_1,...,x_l] per parity of the value."""
        if degs in self._spans:
            return self._spans[degs]
        B = self.B
        if len(degs) == 1:
            out = {q: self.homogeneous_space(degs[0], q) for q in (0, 1)}
        else:
            prev = self.block_spans(degs[:-1])
            out = {0: [], 1: []}
            for q, Wq in prev.items():
                for r in (0, 1):
                    Br = self.homogeneous_space(degs[-1], r)
                    s = -1 if q * r else 1
                    for w in Wq.basis:
                        for b in Br.basis:
                            out[q ^ r].append([x - s * y for x, y in zip(B.mul(w, b), B.mul(b, w))])
            out = {q: Subspace.span(v, B.dim) for q, v in out.items()}
        self._spans[degs] = out
        return out

    def is_central_template(self, blocks, degrees) -> bool:
        spans = []
        pos = 0
        for ln in blocks:
            spans.append(self.block_spans(tuple(degrees[pos:pos + ln])))
            pos += ln
        for qs in itertools.product((0, 1), repeat=len(blocks)):
            acc = spans[0][qs[0]]
            for sp, q in zip(spans[1:], qs[1:]):
                if not acc.dim:
                    break
                acc = _product_space(self.B, acc, sp[q])
            if acc.dim and not acc.issubspace(self.Z[sum(qs) % 2]):
                return False
        return True

    def block_values(self, degs: tuple) -> list[tuple[dict, int, frozenset, tuple]]:
        """Nonzero values of a block on adapted basis elements: (value, parity, owners, elements)."""
        if degs in self._values:
            return self._values[degs]
        B = self.B
        pools = [[e for e in self.basis if e.degree.g == g] for g in degs]
        out = []
        for elems in itertools.product(*pools):
            acc = elems[0].sparse
            q = elems[0].degree.parity
            for e in elems[1:]:
                r = e.degree.parity
                left = B.mul_sparse(acc, e.sparse)
                right = B.mul_sparse(e.sparse, acc)
                s = -1 if q * r else 1
                for k, x in right.items():
                    left[k] = left.get(k, 0) - s * x
                acc = {k: num(x) for k, x in left.items() if x}
                q ^= r
                if not acc:
                    break
            if acc:
                out.append((acc, q, frozenset(e.owner for e in elems), elems))
        self._values[degs] = out
        return out


def _product_space(B: GradedAlgebra, U: Subspace, V: Subspace) -> Subspace:
    return Subspace.span([B.mul(u, v) for u in U.basis for v in V.basis], B.dim)


def _touching_product(B: GradedAlgebra, tctx: _TemplateContext, blocks, degrees, targets, deadline):
    per_block = []
    pos = 0
    for ln in blocks:
        per_block.append(tctx.block_values(tuple(degrees[pos:pos + ln])))
        pos += ln
    if any(not vals for vals in per_block):
        return None
    # owners reachable from block i onwards
    reach = [frozenset()] * (len(per_block) + 1)
    for i in range(len(per_block) - 1, -1, -1):
        reach[i] = reach[i + 1] | frozenset().union(*(o for _, _, o, _ in per_block[i]))
    target_set = frozenset(targets)
    if not target_set <= reach[0]:
        return None
    counter = [0]

    def dfs(i, acc, covered, chosen):
        counter[0] += 1
        if counter[0] % 4096 == 0:
            _check_deadline(deadline)
        if i == len(per_block):
            return (acc, chosen) if target_set <= covered else None
        if not target_set <= covered | reach[i]:
            return None
        for val, _q, owners, elems in per_block[i]:
            nxt = val if acc is None else B.mul_sparse(acc, val)
            if not nxt:
                continue
            res = dfs(i + 1, nxt, covered | owners, chosen + elems)
            if res is not None:
                return res
        return None

    return dfs(0, None, frozenset(), ())


def _template_search(B: GradedAlgebra, targets, n_max: int, basis, deadline) -> CentralWitness | None:
    tctx = _TemplateContext(B, basis)
    support = sorted({e.degree.g for e in basis})
    for n in range(1, n_max + 1):
        for blocks in _compositions(n):
            for degrees in itertools.product(support, repeat=n):
                _check_deadline(deadline)
                if not tctx.is_central_template(blocks, degrees):
                    continue
                found = _touching_product(B, tctx, blocks, degrees, targets, deadline)
                if found is None:
                    continue
                value, elems = found
                f = template_poly(B.group, blocks, degrees)
                val = eval_homogeneous(B, f, elems)
                return CentralWitness(n, tuple(degrees), f, tuple(elems), val, tuple(targets), "template")
    return None


def central_witness_search(B: GradedAlgebra, targets: Sequence[int], n_max: int, mode: str = "full",
                           deadline: float | None = None) -> CentralWitness | None:
    """A proper central polynomial with a nonzero evaluation touching each target component.

    Returns None when nothing is found up to ``n_max``; this is not a proof of
    nonexistence.
    """
    if mode not in ("full", "template"):
        raise ValueError(f"unknown mode {mode!r}; expected full or template")
    if mode == "full" and n_max > 4:
        raise BudgetExceeded("full mode is limited to n <= 4; use template mode")
    if mode == "template" and n_max > 8:
        raise BudgetExceeded("template mode is limited to n <= 8")
    basis = adapted_basis(B)
    if mode == "full":
        return _full_search(B, tuple(targets), n_max, basis, deadline)
    return _template_search(B, tuple(targets), n_max, basis, deadline)


@dataclass
class ExponentReport:
    algebra: str
    exp_G: int
    admissible: AdmissibilityCertificate | None
    delta_lower_bound: int = 0
    delta_witness: CentralWitness | None = None
    delta_exact: int | None = None
    searched: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.delta_lower_bound <= self.exp_G

    def as_dict(self, B: GradedAlgebra) -> dict:
        adm = None
        if self.admissible is not None:
            adm = {"components": list(self.admissible.components),
                   "witness": {B.labels[i]: str(x) for i, x in enumerate(self.admissible.witness) if x},
                   "dim": self.admissible.dim}
        return {
            "algebra": self.algebra,
            "exp_G": self.exp_G,
            "admissible": adm,
            "delta_lower_bound": self.delta_lower_bound,
            "delta_exact": self.delta_exact,
            "delta_witness": self.delta_witness.describe(B) if self.delta_witness else None,
            "searched": self.searched,
            "consistent": self.consistent,
        }


def exponent_report(B: GradedAlgebra, n_max: int = 4, *, delta: bool = True, mode: str = "full",
                    declared_delta: int | None = None, deadline: float | None = None) -> ExponentReport:
    """exp^G with its certificate and, optionally, the best certified exp^{G,delta} lower bound.

    Candidate component sets are tried in decreasing total dimension, ties
    broken lexicographically, so the first witness found gives the bound.
    """
    exp_G, cert = admissible_max(B)
    rep = ExponentReport(B.name, exp_G, cert)
    if not delta:
        return rep
    if deadline is None:
        deadline = _deadline_from_env()
    dims = _component_dims(B)
    sets = []
    for k in range(1, len(dims) + 1):
        sets.extend(itertools.combinations(range(len(dims)), k))
    sets.sort(key=lambda S: (-sum(dims[i] for i in S), S))
    rep.searched = {"mode": mode, "n_max": n_max, "sets_tried": []}
    for S in sets:
        w = central_witness_search(B, S, n_max, mode, deadline)
        rep.searched["sets_tried"].append(list(S))
        if w is not None:
            rep.delta_lower_bound = sum(dims[i] for i in S)
            rep.delta_witness = w
            break
    if rep.delta_lower_bound == exp_G or (declared_delta is not None and rep.delta_lower_bound == declared_delta):
        rep.delta_exact = rep.delta_lower_bound
    return rep
