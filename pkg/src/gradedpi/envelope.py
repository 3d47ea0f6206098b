"""Evaluation in the Grassmann envelope E(B) through the sign rule.

A substitution places a homogeneous body basis element b_i at variable i,
tensored with its own Grassmann generator when b_i is odd.  The value of a
monomial is then (sign of the odd variables' order in the word) times the
body product, tagged by the set of odd variables.  Centrality of such a value
reduces to membership of the body part in the supercenter of the matching
parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .algebra import GradedAlgebra, supercenter, to_dense
from .groups import GroupElement
from .linalg import Scalar, Subspace, num
from .poly import MultilinearPoly


@dataclass(frozen=True)
class TaggedValue:
    """body (sparse coordinates) tensor the product of the generators in ``tag``."""

    body: tuple[tuple[int, Scalar], ...]
    tag: frozenset[int]

    @property
    def parity(self) -> int:
        return len(self.tag) % 2

    @property
    def is_zero(self) -> bool:
        return not self.body

    def dense(self, dim: int) -> list[Scalar]:
        return to_dense(dict(self.body), dim)


def odd_inversions(word: Sequence[int], odd: Sequence[bool]) -> int:
    seq = [i for i in word if odd[i]]
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


@dataclass(frozen=True)
class BodyData:
    """The picklable part of a body algebra needed by the kernels."""

    dim: int
    mult: tuple
    parities: tuple[int, ...]
    gdegrees: tuple[GroupElement, ...]

    @classmethod
    def of(cls, A: GradedAlgebra) -> "BodyData":
        return cls(A.dim, A.mult, A.parities, tuple(d.g for d in A.degrees))

    def candidates(self, g: GroupElement) -> list[int]:
        return [i for i, h in enumerate(self.gdegrees) if h == g]


class EnvelopeContext:
    """Evaluation helpers for E(B) with B fixed."""

    def __init__(self, body: GradedAlgebra):
        self.body = body
        self.data = BodyData.of(body)
        self._zp: dict[int, Subspace] = {}

    @property
    def group(self):
        return self.body.group

    def candidates(self, g: GroupElement) -> list[int]:
        return self.data.candidates(g)

    def supercenter(self, parity: int) -> Subspace:
        if parity not in self._zp:
            self._zp[parity] = supercenter(self.body, parity)
        return self._zp[parity]

    @cached_property
    def reducers(self) -> tuple[dict, dict]:
        """Sparse reduction of each basis vector modulo Z_0 and Z_1."""
        out = []
        for p in (0, 1):
            Z = self.supercenter(p)
            red = {}
            for k in range(self.body.dim):
                r = Z.reduce([1 if j == k else 0 for j in range(self.body.dim)])
                red[k] = {j: x for j, x in enumerate(r) if x}
            out.append(red)
        return out[0], out[1]

    def eval_monomial(self, word: Sequence[int], assignment: Sequence[int]) -> TaggedValue:
        """Value of x_{word[0]} ... x_{word[-1]} with x_i = b_{assignment[i]} (tensor e_i if odd)."""
        A = self.body
        odd = [A.parities[assignment[i]] for i in range(len(assignment))]
        acc = {assignment[word[0]]: 1}
        for i in word[1:]:
            acc = A.mul_sparse(acc, {assignment[i]: 1})
            if not acc:
                break
        sign = -1 if odd_inversions(word, odd) % 2 else 1
        tag = frozenset(i for i in range(len(assignment)) if odd[i])
        return TaggedValue(tuple(sorted((k, sign * c) for k, c in acc.items())), tag)

    def eval_poly(self, f: MultilinearPoly, assignment: Sequence[int]) -> TaggedValue:
        if len(assignment) != f.n:
            raise ValueError("assignment length differs from the number of variables")
        for i, b in enumerate(assignment):
            if self.body.degrees[b].g != f.degrees[i]:
                raise ValueError(f"variable {i} of degree {f.degrees[i]} got {self.body.labels[b]}")
        total: dict[int, Scalar] = {}
        tag = frozenset(i for i, b in enumerate(assignment) if self.body.parities[b])
        for word, c in f.coeffs:
            v = self.eval_monomial(word, assignment)
            for k, x in v.body:
                total[k] = total.get(k, 0) + c * x
        body = tuple(sorted((k, num(x)) for k, x in total.items() if x))
        return TaggedValue(body, tag)

    def is_central_value(self, value: TaggedValue) -> bool:
        return self.supercenter(value.parity).contains(value.dense(self.body.dim))

    def eval_vectors(self, f: MultilinearPoly, vectors: Sequence[Mapping[int, Scalar]]) -> dict[frozenset, dict]:
        """Evaluate on homogeneous-degree body vectors of mixed parity by linearity.

        Returns {tag: body sparse vector}; each basis element of an input
        vector carries the generator of its variable when odd.
        """
        out: dict[frozenset, dict] = {}

        def rec(i, chosen, coef):
            if i == len(vectors):
                v = self.eval_poly(f, chosen)
                d = out.setdefault(v.tag, {})
                for k, x in v.body:
                    d[k] = d.get(k, 0) + coef * x
                return
            for b, c in vectors[i].items():
                if c:
                    rec(i + 1, chosen + [b], coef * c)

        rec(0, [], 1)
        return {t: {k: num(x) for k, x in d.items() if x} for t, d in out.items()}
