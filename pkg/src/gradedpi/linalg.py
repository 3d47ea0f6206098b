"""Exact linear algebra over the rationals.

Coefficients are kept as ``int`` whenever they are integral and as
``Fraction`` otherwise; Python mixes the two exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = int | Fraction


def num(x) -> Scalar:
    """Normalize to int when integral."""
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        x = Fraction(x)
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def fmt(x: Scalar) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rref(rows: Iterable[Sequence[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form of the span of ``rows``; zero rows dropped."""
    # rows are kept sparse while eliminating; kernels are mostly zeros
    basis: dict[int, dict[int, Scalar]] = {}
    for row in rows:
        if len(row) != ncols:
            raise ValueError(f"row length {len(row)} != {ncols}")
        v = {i: num(x) for i, x in enumerate(row) if x}
        for p in sorted(k for k in v if k in basis):
            c = v.get(p)
            if c:
                for i, y in basis[p].items():
                    x = v.get(i, 0) - c * y
                    if x:
                        v[i] = x
                    else:
                        v.pop(i, None)
        if not v:
            continue
        lead = min(v)
        inv = Fraction(1, 1) / v[lead]
        v = {i: num(x * inv) for i, x in v.items()}
        # clear the new pivot column from earlier rows
        for b in basis.values():
            c = b.get(lead)
            if c:
                for i, y in v.items():
                    x = b.get(i, 0) - c * y
                    if x:
                        b[i] = x
                    else:
                        b.pop(i, None)
        basis[lead] = v
    pivots = sorted(basis)
    dense = []
    for p in pivots:
        r: list[Scalar] = [0] * ncols
        for i, x in basis[p].items():
            r[i] = num(x)
        dense.append(r)
    return dense, pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient in canonical reduced echelon form."""

    ambient: int
    basis: tuple[tuple[Scalar, ...], ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Scalar]], ambient: int) -> "Subspace":
        b, p = rref(vectors, ambient)
        return cls(ambient, tuple(tuple(r) for r in b), tuple(p))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, (), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.span((unit_vector(ambient, i) for i in range(ambient)), ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[Scalar]) -> list[Scalar]:
        """Remainder of ``v`` after eliminating the pivot coordinates."""
        v = list(v)
        for b, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [num(x - c * y) for x, y in zip(v, b)]
        return v

    def contains(self, v: Sequence[Scalar]) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(list(self.basis) + list(other.basis), self.ambient)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.ambient)
        # kernel of [A; -B] gives coefficient pairs with a.A = b.B
        rows = [list(b) for b in self.basis] + [[-x for x in b] for b in other.basis]
        ker = left_kernel(rows, self.ambient)
        vecs = []
        for k in ker.basis:
            vecs.append(combine(k[: self.dim], self.basis, self.ambient))
        return Subspace.span(vecs, self.ambient)

    def _check(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def coordinates(self, v: Sequence[Scalar]) -> list[Scalar]:
        """Coordinates of ``v`` in the echelon basis (requires membership)."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return [num(v[p]) for p in self.pivots]


def unit_vector(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def combine(coeffs: Sequence[Scalar], vectors: Sequence[Sequence[Scalar]], n: int) -> list[Scalar]:
    out: list[Scalar] = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return [num(x) for x in out]


def left_kernel(rows: Sequence[Sequence[Scalar]], ncols: int) -> Subspace:
    """{c : sum_i c_i rows[i] = 0} as a subspace of Q^len(rows)."""
    tracker = KernelTracker(len(rows))
    for j in range(ncols):
        tracker.add_column([r[j] for r in rows])
    return tracker.subspace()


def _integral(col: Sequence[Scalar]) -> list[int]:
    dens = [x.denominator for x in col if isinstance(x, Fraction) and x.denominator != 1]
    if not dens:
        return [int(x) for x in col]
    m = math.lcm(*dens)
    return [int(x * m) for x in col]


class KernelTracker:
    """Incremental left kernel of a matrix fed one column at a time.

    Keeps an integer basis of the coefficient vectors annihilating every
    column seen so far; updates are fraction-free with content removal.
    Sparse columns are given as ``{row: value}`` dicts.
    """

    def __init__(self, nrows: int):
        self.nrows = nrows
        self.vectors: list[list[int]] = [unit_vector(nrows, i) for i in range(nrows)]
        self.columns_seen = 0

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def add_column(self, col) -> None:
        self.columns_seen += 1
        if not self.vectors:
            return
        if isinstance(col, dict):
            items = [(i, x) for i, x in col.items() if x]
            if not items:
                return
            if any(isinstance(x, Fraction) and x.denominator != 1 for _, x in items):
                scale = _integral([x for _, x in items])
                items = [(i, s) for (i, _), s in zip(items, scale)]
            dots = [sum(v[i] * x for i, x in items) for v in self.vectors]
        else:
            c = _integral(col)
            nz = [(i, x) for i, x in enumerate(c) if x]
            if not nz:
                return
            dots = [sum(v[i] * x for i, x in nz) for v in self.vectors]
        p = next((k for k, d in enumerate(dots) if d), None)
        if p is None:
            return
        pv, pd = self.vectors[p], dots[p]
        new = []
        for k, (v, d) in enumerate(zip(self.vectors, dots)):
            if k == p:
                continue
            if d:
                w = [pd * a - d * b for a, b in zip(v, pv)]
                g = 0
                for a in w:
                    if a:
                        g = math.gcd(g, a)
                        if g == 1:
                            break
                if g > 1:
                    w = [a // g for a in w]
                new.append(w)
            else:
                new.append(v)
        self.vectors = new

    def subspace(self) -> Subspace:
        return Subspace.span(self.vectors, self.nrows)


def solve(basis: Sequence[Sequence[Scalar]], target: Sequence[Scalar]) -> list[Scalar] | None:
    """Coefficients c with sum c_i basis[i] = target, or None.

    ``basis`` must be linearly independent.
    """
    n = len(target)
    k = len(basis)
    rows = [list(b) + [1 if j == i else 0 for j in range(k)] for i, b in enumerate(basis)]
    ech, piv = rref(rows, n + k)
    v = list(target) + [0] * k
    for r, p in zip(ech, piv):
        if p >= n:
            break
        c = v[p]
        if c:
            v = [num(x - c * y) for x, y in zip(v, r)]
    if any(v[:n]):
        return None
    # v[n:] now holds -coefficients
    return [num(-x) for x in v[n:]]


def rank(rows: Sequence[Sequence[Scalar]], ncols: int) -> int:
    return len(rref(rows, ncols)[0])
