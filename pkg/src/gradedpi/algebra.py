"""Finite-dimensional G x Z2-graded algebras over Q given by structure constants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .groups import Cocycle, ExtendedDegree, Group, GroupElement, identity_degree, validate_cocycle
from .linalg import Scalar, Subspace, combine, left_kernel, num, solve, unit_vector

Sparse = dict[int, Scalar]


class AlgebraError(ValueError):
    pass


@dataclass
class ValidationReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    counterexample: tuple | None = None

    def fail(self, message: str, where: tuple | None = None) -> "ValidationReport":
        self.ok = False
        self.failures.append(message)
        if self.counterexample is None and where is not None:
            self.counterexample = where
        return self

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class WedderburnData:
    components: tuple[Subspace, ...]
    radical: Subspace


@dataclass(eq=False)
class GradedAlgebra:
    """Basis e_0..e_{d-1}, each homogeneous of a G x Z2 degree.

    ``mult[i][j]`` is a sparse dict {k: c} with e_i e_j = sum c e_k.
    ``matrices`` optionally records a faithful matrix realization of the
    basis (used by constructors and construction checks).
    """

    name: str
    group: Group
    labels: tuple[str, ...]
    degrees: tuple[ExtendedDegree, ...]
    mult: tuple[tuple[Sparse, ...], ...]
    unit: tuple[Scalar, ...] | None = None
    wedderburn: WedderburnData | None = None
    matrices: tuple | None = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(d.parity for d in self.degrees)

    @property
    def has_odd_part(self) -> bool:
        return any(self.parities)

    def basis_vector(self, i: int) -> list[int]:
        return unit_vector(self.dim, i)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def vec(self, **coeffs) -> list[Scalar]:
        """Dense vector from label keyword arguments (labels must be identifiers)."""
        v: list[Scalar] = [0] * self.dim
        for k, c in coeffs.items():
            v[self.index(k)] = num(c)
        return v

    def mul_sparse(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Sparse:
        out: Sparse = {}
        for i, a in u.items():
            row = self.mult[i]
            for j, b in v.items():
                for k, c in row[j].items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: num(c) for k, c in out.items() if c}

    def mul(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> list[Scalar]:
        s = self.mul_sparse(to_sparse(u), to_sparse(v))
        return to_dense(s, self.dim)

    def product(self, *vectors: Sequence[Scalar]) -> list[Scalar]:
        acc = to_sparse(vectors[0])
        for v in vectors[1:]:
            acc = self.mul_sparse(acc, to_sparse(v))
        return to_dense(acc, self.dim)

    def homogeneous_degree(self, v: Sequence[Scalar]) -> ExtendedDegree | None:
        """Degree of ``v`` if it is nonzero and homogeneous, else None."""
        degs = {self.degrees[i] for i, x in enumerate(v) if x}
        return degs.pop() if len(degs) == 1 else None

    def degree_support(self) -> set[GroupElement]:
        return {d.g for d in self.degrees}

    def basis_of_degree(self, g: GroupElement) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d.g == g]

    def with_wedderburn(self, components: Iterable[Iterable[Sequence[Scalar]]],
                        radical: Iterable[Sequence[Scalar]]) -> "GradedAlgebra":
        w = WedderburnData(tuple(Subspace.span(c, self.dim) for c in components),
                           Subspace.span(radical, self.dim))
        return replace(self, wedderburn=w)

    def __repr__(self) -> str:
        return f"GradedAlgebra({self.name!r}, dim={self.dim}, group={self.group})"


def to_sparse(v: Sequence[Scalar] | Mapping[int, Scalar]) -> Sparse:
    if isinstance(v, Mapping):
        return {k: num(c) for k, c in v.items() if c}
    return {i: num(x) for i, x in enumerate(v) if x}


def to_dense(s: Mapping[int, Scalar], n: int) -> list[Scalar]:
    out: list[Scalar] = [0] * n
    for k, c in s.items():
        out[k] = c
    return out


def from_table(name: str, group: Group, labels: Sequence[str], degrees: Sequence[ExtendedDegree],
               table: Mapping[tuple[int, int], Mapping[int, Scalar]], *, unit=None,
               matrices=None) -> GradedAlgebra:
    """Build an algebra from a sparse table (i, j) -> {k: c}; absent pairs are zero."""
    d = len(labels)
    if len(degrees) != d:
        raise AlgebraError("one degree per basis element required")
    mult = tuple(tuple({k: num(c) for k, c in table.get((i, j), {}).items() if c}
                       for j in range(d)) for i in range(d))
    A = GradedAlgebra(name, group, tuple(labels), tuple(degrees), mult,
                      matrices=tuple(matrices) if matrices is not None else None)
    if unit is None:
        u = find_unit(A)
        if u is not None:
            A.unit = tuple(u)
    elif unit is not False:
        A.unit = tuple(num(x) for x in unit)
    return A


def find_unit(A: GradedAlgebra) -> list[Scalar] | None:
    """Two-sided identity, if the algebra has one."""
    if A.dim == 0:
        return None
    # unknown u: for all j, u e_j = e_j and e_j u = e_j
    rows, rhs = [], []
    for j in range(A.dim):
        for k in range(A.dim):
            rows.append([A.mult[i][j].get(k, 0) for i in range(A.dim)])
            rhs.append(1 if j == k else 0)
            rows.append([A.mult[j][i].get(k, 0) for i in range(A.dim)])
            rhs.append(1 if j == k else 0)
    cols = [[r[i] for r in rows] for i in range(A.dim)]
    return solve_columns(cols, rhs)


def solve_columns(cols: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> list[Scalar] | None:
    """Some x with sum x_i cols[i] = rhs, or None."""
    n = len(rhs)
    # independent subset of columns
    chosen: list[int] = []
    span = Subspace.zero(n)
    for i, c in enumerate(cols):
        if not span.contains(c):
            chosen.append(i)
            span = span + Subspace.span([c], n)
    coeffs = solve([cols[i] for i in chosen], rhs)
    if coeffs is None:
        return None
    x: list[Scalar] = [0] * len(cols)
    for i, c in zip(chosen, coeffs):
        x[i] = c
    return x


# ---------------------------------------------------------------------------
# matrix constructions


def scalar_field(group: Group) -> GradedAlgebra:
    """F itself, one basis element of trivial degree."""
    return from_table("F", group, ["1"], [identity_degree(group)], {(0, 0): {0: 1}})


def superfield(group: Group, c_degree: GroupElement | None = None) -> GradedAlgebra:
    """F + cF with c odd, c^2 = 1; c carries G-degree ``c_degree`` (default trivial)."""
    g = c_degree if c_degree is not None else group.identity
    return from_table("F+cF", group, ["1", "c"], [identity_degree(group), ExtendedDegree(g, 1)],
                      {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}})


MatrixEntry = tuple[int, int, int]  # (row, col, scalar basis index)


def matrix_subalgebra(name: str, n: int, grading: Sequence[ExtendedDegree],
                      basis: Sequence[Mapping[MatrixEntry, Scalar]], labels: Sequence[str],
                      scalars: GradedAlgebra | None = None) -> GradedAlgebra:
    """Subalgebra of M_n(S) with elementary grading spanned by ``basis``.

    Entry (i, j, s) stands for e_ij (x) s_s, of degree grading[i]^-1 grading[j] deg(s_s).
    Each basis element must be homogeneous; the span must be closed under
    the product, otherwise AlgebraError is raised.
    """
    if len(grading) != n:
        raise AlgebraError(f"grading tuple has length {len(grading)}, expected {n}")
    group = grading[0].g.group
    S = scalars if scalars is not None else scalar_field(group)
    m = S.dim

    def flat(i: int, j: int, s: int) -> int:
        return (i * n + j) * m + s

    size = n * n * m
    degrees = []
    vecs = []
    for b, lab in zip(basis, labels):
        degs = {grading[i].inverse() * grading[j] * S.degrees[s] for (i, j, s), c in b.items() if c}
        if len(degs) != 1:
            raise AlgebraError(f"basis element {lab} is not homogeneous: degrees {sorted(degs)}")
        degrees.append(degs.pop())
        v = [0] * size
        for (i, j, s), c in b.items():
            v[flat(i, j, s)] = num(c)
        vecs.append(v)

    def mat_mul(u: list, v: list) -> list:
        out: list[Scalar] = [0] * size
        nz_u = [(idx, c) for idx, c in enumerate(u) if c]
        nz_v = [(idx, c) for idx, c in enumerate(v) if c]
        for iu, cu in nz_u:
            i, rem = divmod(iu, n * m)
            j, s = divmod(rem, m)
            for iv, cv in nz_v:
                j2, rem2 = divmod(iv, n * m)
                if j2 != j:
                    continue
                k, t = divmod(rem2, m)
                for r, c in S.mult[s][t].items():
                    out[flat(i, k, r)] += cu * cv * c
        return out

    span = Subspace.span(vecs, size)
    if span.dim != len(vecs):
        raise AlgebraError(f"{name}: basis elements are linearly dependent")
    table = {}
    for a in range(len(vecs)):
        for b in range(len(vecs)):
            p = mat_mul(vecs[a], vecs[b])
            if not any(p):
                continue
            coeffs = solve(vecs, p)
            if coeffs is None:
                raise AlgebraError(f"{name}: span not closed under product ({labels[a]} * {labels[b]})")
            table[(a, b)] = {k: c for k, c in enumerate(coeffs) if c}
    A = from_table(name, group, labels, degrees, table, matrices=[tuple(v) for v in vecs])
    A._matrix_shape = (n, m)
    A._matrix_mul = mat_mul
    return A


def matrix_coordinates(A: GradedAlgebra, entries: Mapping[MatrixEntry, Scalar]) -> list[Scalar] | None:
    """Coordinates of a matrix (given by entries) in a matrix-built algebra, or None."""
    if A.matrices is None:
        raise AlgebraError(f"{A.name} has no matrix realization")
    n, m = A._matrix_shape
    v = [0] * (n * n * m)
    for (i, j, s), c in entries.items():
        v[(i * n + j) * m + s] = num(c)
    return solve(list(A.matrices), v)


def unit_label(i: int, j: int) -> str:
    return f"e{i + 1}{j + 1}"


def matrix_elementary(n: int, grading: Sequence[ExtendedDegree], scalars: GradedAlgebra | None = None,
                      name: str | None = None) -> GradedAlgebra:
    """M_n(S) with elementary grading: deg e_ij = grading[i]^-1 grading[j]."""
    if len(grading) != n:
        raise AlgebraError(f"grading tuple has length {len(grading)}, expected {n}")
    group = grading[0].g.group
    S = scalars if scalars is not None else scalar_field(group)
    basis, labels = [], []
    for i in range(n):
        for j in range(n):
            for s in range(S.dim):
                basis.append({(i, j, s): 1})
                labels.append(unit_label(i, j) + ("" if S.dim == 1 else f"*{S.labels[s]}"))
    return matrix_subalgebra(name or f"M{n}", n, grading, basis, labels, S)


def triangular_subalgebra(n: int, grading: Sequence[ExtendedDegree], *, identify: Sequence[Sequence[int]] = (),
                          zero: Sequence[int] = (), name: str | None = None) -> GradedAlgebra:
    """Upper-triangular matrices with diagonal constraints.

    ``identify`` lists groups of (0-based) diagonal positions forced equal,
    ``zero`` lists diagonal positions forced to vanish.  Strictly upper
    entries are all kept.
    """
    group = grading[0].g.group
    used = set(zero)
    basis, labels = [], []
    for grp in identify:
        grp = sorted(grp)
        if used.intersection(grp):
            raise AlgebraError(f"diagonal position used twice in {grp}")
        used.update(grp)
        basis.append({(i, i, 0): 1 for i in grp})
        labels.append("+".join(unit_label(i, i) for i in grp))
    for i in range(n):
        if i not in used:
            basis.append({(i, i, 0): 1})
            labels.append(unit_label(i, i))
    for i in range(n):
        for j in range(i + 1, n):
            basis.append({(i, j, 0): 1})
            labels.append(unit_label(i, j))
    return matrix_subalgebra(name or f"UT{n}", n, grading, basis, labels, scalar_field(group))


def group_algebra(elements: Sequence, group: Group, name: str | None = None) -> GradedAlgebra:
    """FH for a finite subgroup H of G (GroupElement) or of G x Z2 (ExtendedDegree)."""
    return twisted_group_algebra(None, group, elements=elements, name=name)


def twisted_group_algebra(cocycle: Cocycle | None, group: Group, *, elements: Sequence | None = None,
                          name: str | None = None) -> GradedAlgebra:
    """F^alpha H: b_a b_b = alpha(a, b) b_ab, deg b_h = h.

    Components of G outside H are zero, so H simply sits inside the ambient grading.
    """
    if cocycle is not None:
        rep = validate_cocycle(cocycle)
        if not rep.ok:
            raise AlgebraError(f"invalid cocycle: {rep.message} at {rep.triple}")
        H = list(cocycle.subgroup)
    else:
        H = list(elements)
    H = sorted(H)
    degs = [h if isinstance(h, ExtendedDegree) else ExtendedDegree(h, 0) for h in H]
    idx = {h: i for i, h in enumerate(H)}
    table = {}
    for a in H:
        for b in H:
            c = cocycle(a, b) if cocycle is not None else 1
            table[(idx[a], idx[b])] = {idx[a * b]: c}
    labels = [f"b{h}" for h in H]
    default = "F^aH" if cocycle is not None else "FH"
    return from_table(name or default, group, labels, degs, table)


def direct_sum(A: GradedAlgebra, B: GradedAlgebra, name: str | None = None) -> GradedAlgebra:
    if A.group != B.group:
        raise AlgebraError("direct sum needs a common group")
    off = A.dim
    table = {}
    for i in range(A.dim):
        for j in range(A.dim):
            if A.mult[i][j]:
                table[(i, j)] = dict(A.mult[i][j])
    for i in range(B.dim):
        for j in range(B.dim):
            if B.mult[i][j]:
                table[(i + off, j + off)] = {k + off: c for k, c in B.mult[i][j].items()}
    labels = [f"{l}@1" for l in A.labels] + [f"{l}@2" for l in B.labels]
    return from_table(name or f"{A.name}+{B.name}", A.group, labels, A.degrees + B.degrees, table)


def subalgebra(A: GradedAlgebra, vectors: Sequence[Sequence[Scalar]], labels: Sequence[str] | None = None,
               name: str | None = None) -> GradedAlgebra:
    """The algebra structure on span(vectors), which must be closed and homogeneous."""
    vecs = [list(v) for v in vectors]
    degs = []
    for v in vecs:
        d = A.homogeneous_degree(v)
        if d is None:
            raise AlgebraError("subalgebra basis must consist of nonzero homogeneous elements")
        degs.append(d)
    table = {}
    for a, u in enumerate(vecs):
        for b, v in enumerate(vecs):
            p = A.mul(u, v)
            if not any(p):
                continue
            coeffs = solve(vecs, p)
            if coeffs is None:
                raise AlgebraError("span is not closed under the product")
            table[(a, b)] = {k: c for k, c in enumerate(coeffs) if c}
    labels = labels or [f"s{i}" for i in range(len(vecs))]
    return from_table(name or f"sub({A.name})", A.group, labels, degs, table)


def homogeneous_basis(A: GradedAlgebra, U: Subspace) -> list[list[Scalar]]:
    """A basis of U made of homogeneous vectors (U must be graded)."""
    out = []
    for d in sorted(set(A.degrees)):
        idx = [i for i, e in enumerate(A.degrees) if e == d]
        mask = Subspace.span([A.basis_vector(i) for i in idx], A.dim)
        out.extend(list(b) for b in U.intersection(mask).basis)
    return out


def is_graded_subspace(A: GradedAlgebra, U: Subspace) -> bool:
    for b in U.basis:
        for d in set(A.degrees):
            proj = [x if A.degrees[i] == d else 0 for i, x in enumerate(b)]
            if not U.contains(proj):
                return False
    return True


# ---------------------------------------------------------------------------
# validation


def validate_algebra(A: GradedAlgebra) -> ValidationReport:
    rep = ValidationReport(True)
    d = A.dim
    for i in range(d):
        for j in range(d):
            target = A.degrees[i] * A.degrees[j]
            for k, c in A.mult[i][j].items():
                if c and A.degrees[k] != target:
                    rep.fail(f"grading violated: {A.labels[i]}*{A.labels[j]} has a component on "
                             f"{A.labels[k]} of degree {A.degrees[k]}, expected {target}", (i, j, k))
                    return rep
    for i in range(d):
        for j in range(d):
            ij = A.mult[i][j]
            for k in range(d):
                left = A.mul_sparse(ij, {k: 1})
                right = A.mul_sparse({i: 1}, A.mult[j][k])
                if left != right:
                    rep.fail(f"associativity fails on ({A.labels[i]},{A.labels[j]},{A.labels[k]})", (i, j, k))
                    return rep
    if A.unit is not None:
        u = to_sparse(A.unit)
        if any(not A.degrees[i].is_identity for i in u):
            rep.fail("unit is not of identity degree", ("unit",))
        for j in range(d):
            if A.mul_sparse(u, {j: 1}) != {j: 1} or A.mul_sparse({j: 1}, u) != {j: 1}:
                rep.fail(f"unit law fails at {A.labels[j]}", ("unit", j))
                break
    return rep


def is_commutative(A: GradedAlgebra) -> bool:
    return all(A.mult[i][j] == A.mult[j][i] for i in range(A.dim) for j in range(A.dim))


# ---------------------------------------------------------------------------
# center, radical, products


def center(A: GradedAlgebra) -> Subspace:
    """{z : z e_i = e_i z for every basis element}."""
    return supercenter(A, None)


def supercenter(A: GradedAlgebra, parity: int | None) -> Subspace:
    """Elements z of the given parity with z b = (-1)^(parity |b|) b z for homogeneous b.

    ``parity=None`` gives the ordinary center (no parity restriction, no signs).
    """
    d = A.dim
    allowed = [i for i in range(d) if parity is None or A.parities[i] == parity]
    rows = []  # one row per allowed basis element; columns = (j, k) constraints
    for i in allowed:
        row = []
        for j in range(d):
            sign = -1 if parity is not None and parity and A.parities[j] else 1
            for k in range(d):
                row.append(A.mult[i][j].get(k, 0) - sign * A.mult[j][i].get(k, 0))
        rows.append(row)
    if not rows:
        return Subspace.zero(d)
    ker = left_kernel(rows, d * d)
    vecs = []
    for c in ker.basis:
        v = [0] * d
        for i, x in zip(allowed, c):
            v[i] = x
        vecs.append(v)
    return Subspace.span(vecs, d)


def subspace_product(A: GradedAlgebra, U: Subspace, V: Subspace) -> Subspace:
    if U.ambient != A.dim or V.ambient != A.dim:
        raise AlgebraError("ambient mismatch in subspace product")
    prods = [A.mul(u, v) for u in U.basis for v in V.basis]
    return Subspace.span(prods, A.dim)


def chain_product(A: GradedAlgebra, spaces: Sequence[Subspace]) -> Subspace:
    acc = spaces[0]
    for S in spaces[1:]:
        if not acc.dim:
            return acc
        acc = subspace_product(A, acc, S)
    return acc


def ideal_generated(A: GradedAlgebra, gens: Sequence[Sequence[Scalar]], within: Subspace | None = None) -> Subspace:
    """Two-sided ideal of the subalgebra ``within`` (default A) generated by ``gens``."""
    W = within if within is not None else Subspace.full(A.dim)
    I = Subspace.span(gens, A.dim)
    while True:
        new = list(I.basis)
        for x in I.basis:
            for w in W.basis:
                new.append(A.mul(w, x))
                new.append(A.mul(x, w))
        J = Subspace.span(new, A.dim)
        if J.dim == I.dim:
            return I
        I = J


def generated_subalgebra(A: GradedAlgebra, gens: Sequence[Sequence[Scalar]]) -> Subspace:
    S = Subspace.span(gens, A.dim)
    while True:
        new = list(S.basis) + [A.mul(x, y) for x in S.basis for y in S.basis]
        T = Subspace.span(new, A.dim)
        if T.dim == S.dim:
            return S
        S = T


def _trace_form(A: GradedAlgebra) -> list[list[Scalar]]:
    """tau(e_i, e_j) = tr(L_{e_i e_j}) on the unitization (index d is the adjoined 1)."""
    d = A.dim
    tr = [sum(A.mult[k][j].get(j, 0) for j in range(d)) for k in range(d)]
    # on the unitization, L_a for a in A has the same trace; L_1 has trace d + 1
    tau = [[0] * (d + 1) for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(d + 1):
            if i == d and j == d:
                tau[i][j] = d + 1
            elif i == d:
                tau[i][j] = tr[j]
            elif j == d:
                tau[i][j] = tr[i]
            else:
                tau[i][j] = sum(c * tr[k] for k, c in A.mult[i][j].items())
    return tau


class RadicalCertificateError(AssertionError):
    pass


def jacobson_radical(A: GradedAlgebra, certify: bool = True) -> Subspace:
    """Radical of the trace form of the unitization (exact in characteristic zero)."""
    d = A.dim
    if d == 0:
        return Subspace.zero(0)
    tau = _trace_form(A)
    ker = left_kernel(tau, d + 1)
    vecs = []
    for v in ker.basis:
        if v[d]:
            raise RadicalCertificateError("radical meets the adjoined unit")
        vecs.append(list(v[:d]))
    J = Subspace.span(vecs, d)
    if certify:
        certify_radical(A, J)
    return J


def certify_radical(A: GradedAlgebra, J: Subspace) -> None:
    full = Subspace.full(A.dim)
    if not subspace_product(A, full, J).issubspace(J) or not subspace_product(A, J, full).issubspace(J):
        raise RadicalCertificateError("J is not a two-sided ideal")
    P = J
    for _ in range(A.dim + 1):
        if not P.dim:
            break
        P = subspace_product(A, P, J)
    if P.dim:
        raise RadicalCertificateError("J is not nilpotent")
    if not is_graded_subspace(A, J):
        raise RadicalCertificateError("J is not graded")
    Q = quotient(A, J)
    if Q.dim:
        tau = _trace_form(Q)
        if left_kernel(tau, Q.dim + 1).dim:
            raise RadicalCertificateError("A/J has degenerate trace form")


def quotient(A: GradedAlgebra, I: Subspace, name: str | None = None) -> GradedAlgebra:
    """A/I for a graded ideal I; basis = non-pivot basis elements of A."""
    keep = [i for i in range(A.dim) if i not in I.pivots]
    pos = {i: n for n, i in enumerate(keep)}
    table = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            r = I.reduce(to_dense(A.mult[i][j], A.dim))
            s = {pos[k]: c for k, c in enumerate(r) if c}
            if any(k not in pos for k, c in enumerate(r) if c):
                raise AlgebraError("quotient reduction left a pivot coordinate")
            if s:
                table[(a, b)] = s
    return from_table(name or f"{A.name}/I", A.group, [A.labels[i] for i in keep],
                      [A.degrees[i] for i in keep], table, unit=False)


# ---------------------------------------------------------------------------
# Wedderburn data


def graded_simplicity_report(A: GradedAlgebra, C: Subspace) -> ValidationReport:
    """C is graded-simple: unital, semisimple, identity-degree center is F,
    and every homogeneous basis element of C generates all of C as an ideal."""
    rep = ValidationReport(True)
    hb = homogeneous_basis(A, C)
    if len(hb) != C.dim:
        return rep.fail("component is not a graded subspace", ("component",))
    try:
        B = subalgebra(A, hb)
    except AlgebraError as exc:
        return rep.fail(f"component is not a subalgebra: {exc}", ("component",))
    if B.unit is None:
        return rep.fail("component has no unit", ("component",))
    if jacobson_radical(B).dim:
        return rep.fail("component has nonzero radical", ("component",))
    Z = center(B)
    idx = [i for i, d in enumerate(B.degrees) if d.is_identity]
    mask = Subspace.span([B.basis_vector(i) for i in idx], B.dim)
    if Z.intersection(mask).dim != 1:
        return rep.fail("identity-degree part of the center is not one-dimensional", ("center",))
    for i in range(B.dim):
        if ideal_generated(B, [B.basis_vector(i)]).dim != B.dim:
            return rep.fail(f"basis element {i} generates a proper graded ideal", ("ideal", i))
    return rep


def verify_wedderburn(A: GradedAlgebra, W: WedderburnData | None = None) -> ValidationReport:
    W = W if W is not None else A.wedderburn
    rep = ValidationReport(True)
    if W is None:
        return rep.fail("no Wedderburn data", None)
    total = Subspace.zero(A.dim)
    dims = 0
    for C in list(W.components) + [W.radical]:
        total = total + C
        dims += C.dim
    if total.dim != A.dim or dims != A.dim:
        rep.fail(f"components plus radical do not give a direct sum decomposition "
                 f"(span {total.dim}, dims {dims}, algebra {A.dim})", ("sum",))
    J = jacobson_radical(A)
    if J != W.radical:
        rep.fail(f"declared radical (dim {W.radical.dim}) differs from computed J (dim {J.dim})", ("radical",))
    for a, Ca in enumerate(W.components):
        for b, Cb in enumerate(W.components):
            if a != b and subspace_product(A, Ca, Cb).dim:
                rep.fail(f"components {a} and {b} are not orthogonal", ("orthogonal", a, b))
    for a, C in enumerate(W.components):
        sub = graded_simplicity_report(A, C)
        if not sub.ok:
            rep.fail(f"component {a}: " + "; ".join(sub.failures), ("component", a))
    return rep
