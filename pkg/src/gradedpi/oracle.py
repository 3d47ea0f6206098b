"""Independent route to the kernels: generic elements over a free
supercommutative algebra.

For variable i of degree g the generic element is

    Z^{i,g} = sum_a e_a (x) s_{i,a}

over the body basis elements e_a of G-degree g, where s_{i,a} is an even
(commuting) variable when e_a is even and an odd (anticommuting) one when e_a
is odd.  The product is the plain tensor product of algebras, so no sign rule
is used: signs only come from reordering odd variables inside S.
"""

from __future__ import annotations

import math
from typing import Sequence

from .algebra import GradedAlgebra
from .groups import GroupElement
from .linalg import KernelTracker, Scalar
from .poly import PolySubspace, permutations

# An S-monomial is (even part, odd part): sorted tuples of variables (i, a).
Mono = tuple[tuple, tuple]
# Elements of B (x) S: {(k, mono): coefficient}
Elem = dict


def mono_mul(m1: Mono, m2: Mono) -> tuple[int, Mono] | None:
    """Product of S-monomials as (sign, monomial), or None if an odd variable repeats."""
    even = tuple(sorted(m1[0] + m2[0]))
    odd = list(m1[1] + m2[1])
    if len(set(odd)) != len(odd):
        return None
    sign = 1
    # bubble sort, counting transpositions
    for i in range(len(odd)):
        for j in range(len(odd) - 1 - i):
            if odd[j] > odd[j + 1]:
                odd[j], odd[j + 1] = odd[j + 1], odd[j]
                sign = -sign
    return sign, (even, tuple(odd))


def elem_mul(B: GradedAlgebra, x: Elem, y: Elem) -> Elem:
    out: Elem = {}
    for (k1, m1), c1 in x.items():
        row = B.mult[k1]
        for (k2, m2), c2 in y.items():
            prod = row[k2]
            if not prod:
                continue
            mm = mono_mul(m1, m2)
            if mm is None:
                continue
            s, m = mm
            for k, c in prod.items():
                key = (k, m)
                out[key] = out.get(key, 0) + s * c1 * c2 * c
    return {k: v for k, v in out.items() if v}


def generic_element(B: GradedAlgebra, i: int, g: GroupElement) -> Elem:
    out: Elem = {}
    for a in B.basis_of_degree(g):
        var = (i, a)
        mono = ((), (var,)) if B.parities[a] else ((var,), ())
        out[(a, mono)] = 1
    return out


def _word_products(B: GradedAlgebra, degrees: Sequence[GroupElement]) -> list[Elem]:
    Z = [generic_element(B, i, g) for i, g in enumerate(degrees)]
    out = []
    for w in permutations(len(degrees)):
        acc = Z[w[0]]
        for i in w[1:]:
            acc = elem_mul(B, acc, Z[i])
            if not acc:
                break
        out.append(acc)
    return out


def _kernel(values: list[Elem], size: int) -> KernelTracker:
    cols: dict = {}
    for p, v in enumerate(values):
        for key, c in v.items():
            cols.setdefault(key, {})[p] = c
    tracker = KernelTracker(size)
    for col in cols.values():
        tracker.add_column(col)
    return tracker


def oracle_identity_kernel(B: GradedAlgebra, degrees: Sequence[GroupElement]) -> PolySubspace:
    """f is an identity of E(B) iff f(Z^{1,g_1}, ..., Z^{n,g_n}) = 0."""
    size = math.factorial(len(degrees))
    return PolySubspace(tuple(degrees), _kernel(_word_products(B, degrees), size).subspace())


def oracle_central_kernel(B: GradedAlgebra, degrees: Sequence[GroupElement]) -> PolySubspace:
    """f is central for E(B) iff [f(Z), Z^{n+1,h}] = 0 for every h in G."""
    n = len(degrees)
    size = math.factorial(n)
    words = _word_products(B, degrees)
    values: list[Elem] = [dict() for _ in words]
    for h in B.group.elements():
        W = generic_element(B, n, h)
        if not W:
            continue
        for p, v in enumerate(words):
            left = elem_mul(B, v, W)
            right = elem_mul(B, W, v)
            acc = values[p]
            for key, c in left.items():
                acc[(h, key)] = acc.get((h, key), 0) + c
            for key, c in right.items():
                acc[(h, key)] = acc.get((h, key), 0) - c
    values = [{k: c for k, c in v.items() if c} for v in values]
    return PolySubspace(tuple(degrees), _kernel(values, size).subspace())
