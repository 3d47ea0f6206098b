"""Graded polynomials of the free algebra, multilinear spaces per degree tuple,
and multilinear consequence spans of T-ideals."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .groups import Group, GroupElement, element_label, parse_label
from .linalg import Scalar, Subspace, fmt, num

Var = tuple[int, GroupElement]  # (index, G-degree)
Word = tuple[Var, ...]


class PolySyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text[:pos]}<<>>{text[pos:]}")
        self.pos = pos


# ---------------------------------------------------------------------------
# general graded polynomials


@dataclass(frozen=True)
class GradedPoly:
    group: Group
    terms: tuple[tuple[Word, Scalar], ...]

    @classmethod
    def from_dict(cls, group: Group, d: Mapping[Word, Scalar]) -> "GradedPoly":
        items = sorted(((w, num(c)) for w, c in d.items() if c), key=lambda t: _word_key(t[0]))
        return cls(group, tuple(items))

    @classmethod
    def var(cls, group: Group, index: int, degree: GroupElement) -> "GradedPoly":
        return cls(group, ((((index, degree),), 1),))

    def as_dict(self) -> dict[Word, Scalar]:
        return dict(self.terms)

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        d = self.as_dict()
        for w, c in other.terms:
            d[w] = d.get(w, 0) + c
        return GradedPoly.from_dict(self.group, d)

    def __neg__(self) -> "GradedPoly":
        return self.scale(-1)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def scale(self, c: Scalar) -> "GradedPoly":
        return GradedPoly.from_dict(self.group, {w: c * x for w, x in self.terms})

    def __mul__(self, other: "GradedPoly") -> "GradedPoly":
        d: dict[Word, Scalar] = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                w = w1 + w2
                d[w] = d.get(w, 0) + c1 * c2
        return GradedPoly.from_dict(self.group, d)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> list[Var]:
        return sorted({v for w, _ in self.terms for v in w}, key=_var_key)

    def __str__(self) -> str:
        return emit(self)


def _var_key(v: Var):
    return (v[0], v[1].residues)


def _word_key(w: Word):
    return (len(w), tuple(_var_key(v) for v in w))


def commutator(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    return a * b - b * a


def anticommutator(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    return a * b + b * a


# ---------------------------------------------------------------------------
# parser / emitter
#
#   poly   := term (('+'|'-') term)*
#   term   := [rational] factor+
#   factor := var | '[' poly (',' poly)+ ']' | 'ac(' poly ',' poly ')' | '(' poly ')'
#   var    := 'x' index ':' label


class _Parser:
    def __init__(self, text: str, group: Group, label_map):
        self.text = text
        self.pos = 0
        self.group = group
        self.label_map = label_map

    def error(self, msg: str):
        raise PolySyntaxError(msg, self.pos, self.text)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.ws()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def parse(self) -> GradedPoly:
        if self.text.strip() == "0":  # the emitted form of the zero polynomial
            return GradedPoly(self.group, ())
        p = self.poly()
        self.ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return p

    def poly(self) -> GradedPoly:
        sign = 1
        if self.peek("-"):
            self.pos += 1
            sign = -1
        elif self.peek("+"):
            self.pos += 1
        acc = self.term().scale(sign)
        while True:
            if self.peek("+"):
                self.pos += 1
                acc = acc + self.term()
            elif self.peek("-"):
                self.pos += 1
                acc = acc - self.term()
            else:
                return acc

    def rational(self) -> Scalar | None:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        value = Fraction(int(self.text[start:self.pos]))
        if self.peek("/"):
            self.pos += 1
            self.ws()
            s2 = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == s2:
                self.error("expected denominator")
            den = int(self.text[s2:self.pos])
            if den == 0:
                self.error("zero denominator")
            value /= den
        return num(value)

    def term(self) -> GradedPoly:
        coef = self.rational()
        factors = []
        while True:
            f = self.factor()
            if f is None:
                break
            factors.append(f)
        if not factors:
            self.error("expected a factor")
        acc = factors[0]
        for f in factors[1:]:
            acc = acc * f
        return acc.scale(coef) if coef is not None else acc

    def factor(self) -> GradedPoly | None:
        self.ws()
        if self.peek("ac("):
            self.pos += 3
            a = self.poly()
            self.expect(",")
            b = self.poly()
            self.expect(")")
            return anticommutator(a, b)
        if self.peek("x"):
            return self.var()
        if self.peek("["):
            self.pos += 1
            parts = [self.poly()]
            while self.peek(","):
                self.pos += 1
                parts.append(self.poly())
            self.expect("]")
            if len(parts) < 2:
                self.error("commutator needs at least two arguments")
            acc = parts[0]
            for p in parts[1:]:
                acc = commutator(acc, p)
            return acc
        if self.peek("("):
            self.pos += 1
            p = self.poly()
            self.expect(")")
            return p
        return None

    def var(self) -> GradedPoly:
        self.expect("x")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected variable index")
        index = int(self.text[start:self.pos])
        if not self.text.startswith(":", self.pos):
            self.error("expected ':' and a degree label")
        self.pos += 1
        label = self.label()
        try:
            deg = parse_label(self.group, label, self.label_map)
        except ValueError as exc:
            self.pos -= len(label)
            self.error(str(exc))
        return GradedPoly.var(self.group, index, deg)

    def label(self) -> str:
        t = self.text
        if t.startswith("(", self.pos):
            end = t.find(")", self.pos)
            if end < 0:
                self.error("unterminated degree label")
            lab = t[self.pos:end + 1]
            self.pos = end + 1
            return lab
        start = self.pos
        while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] in "_'") and t[self.pos] != "x":
            self.pos += 1
        if t[start:self.pos].endswith("ac") and t.startswith("(", self.pos):
            self.pos -= 2
        if start == self.pos:
            self.error("expected degree label")
        return t[start:self.pos]


def parse(text: str, group: Group, label_map: Mapping[str, Sequence[int]] | None = None) -> GradedPoly:
    return _Parser(text, group, label_map).parse()


def _label(g: GroupElement, label_map) -> str:
    if label_map:
        for k, v in label_map.items():
            if tuple(v) == g.residues:
                return k
    return element_label(g)


def emit(p: GradedPoly, label_map: Mapping[str, Sequence[int]] | None = None) -> str:
    """Canonical text: terms in word order, ``+``/``-`` separators, coefficient 1 omitted."""
    if not p.terms:
        return "0"
    out = []
    for k, (w, c) in enumerate(p.terms):
        word = " ".join(f"x{i}:{_label(g, label_map)}" for i, g in w)
        mag = abs(Fraction(c))
        coef = "" if mag == 1 else fmt(mag) + " "
        if k == 0:
            out.append(("-" if c < 0 else "") + coef + word)
        else:
            out.append(("- " if c < 0 else "+ ") + coef + word)
    return " ".join(out)


# ---------------------------------------------------------------------------
# multilinear polynomials


@lru_cache(maxsize=None)
def permutations(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def perm_index(n: int) -> dict[tuple[int, ...], int]:
    return {p: i for i, p in enumerate(permutations(n))}


@dataclass(frozen=True)
class MultilinearPoly:
    """sum c_w x_{w_1} ... x_{w_n}, variables 0..n-1 with degrees ``degrees``."""

    degrees: tuple[GroupElement, ...]
    coeffs: tuple[tuple[tuple[int, ...], Scalar], ...]

    @classmethod
    def from_dict(cls, degrees: Sequence[GroupElement], d: Mapping[tuple[int, ...], Scalar]) -> "MultilinearPoly":
        n = len(degrees)
        for w in d:
            if sorted(w) != list(range(n)):
                raise ValueError(f"word {w} is not a permutation of {n} variables")
        return cls(tuple(degrees), tuple(sorted((w, num(c)) for w, c in d.items() if c)))

    @classmethod
    def from_vector(cls, degrees: Sequence[GroupElement], v: Sequence[Scalar]) -> "MultilinearPoly":
        perms = permutations(len(degrees))
        return cls.from_dict(degrees, {perms[i]: c for i, c in enumerate(v) if c})

    @property
    def n(self) -> int:
        return len(self.degrees)

    def as_dict(self) -> dict[tuple[int, ...], Scalar]:
        return dict(self.coeffs)

    def vector(self) -> list[Scalar]:
        idx = perm_index(self.n)
        v: list[Scalar] = [0] * math.factorial(self.n)
        for w, c in self.coeffs:
            v[idx[w]] = c
        return v

    def relabel(self, mapping: Sequence[int]) -> "MultilinearPoly":
        """Rename variable i to mapping[i] (a permutation); degrees follow."""
        degs = [None] * self.n
        for i, j in enumerate(mapping):
            degs[j] = self.degrees[i]
        return MultilinearPoly.from_dict(degs, {tuple(mapping[i] for i in w): c for w, c in self.coeffs})

    def to_graded(self, group: Group, offset: int = 1) -> GradedPoly:
        return GradedPoly.from_dict(group, {tuple((i + offset, self.degrees[i]) for i in w): c
                                            for w, c in self.coeffs})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


def multilinearize(f: GradedPoly) -> list[MultilinearPoly]:
    """Full polarization of each multihomogeneous component (no 1/k! factors).

    A variable occurring d times is replaced by d fresh variables and only the
    part linear in each is kept.  Fresh variables are numbered by (original
    index, degree) order, copies consecutively.
    """
    comps: dict[tuple, dict[Word, Scalar]] = {}
    for w, c in f.terms:
        key = tuple(sorted(Counter(w).items(), key=lambda t: _var_key(t[0])))
        comps.setdefault(key, {})[w] = c
    out = []
    for key, terms in sorted(comps.items(), key=lambda t: [(_var_key(v), k) for v, k in t[0]]):
        fresh: dict[Var, list[int]] = {}
        degrees: list[GroupElement] = []
        for v, k in key:
            fresh[v] = list(range(len(degrees), len(degrees) + k))
            degrees.extend([v[1]] * k)
        res: dict[tuple[int, ...], Scalar] = {}
        for w, c in terms.items():
            positions = {v: [i for i, x in enumerate(w) if x == v] for v in fresh}
            choices = [list(itertools.permutations(fresh[v])) for v in fresh]
            for combo in itertools.product(*choices):
                word = [0] * len(w)
                for v, perm in zip(fresh, combo):
                    for pos, var in zip(positions[v], perm):
                        word[pos] = var
                t = tuple(word)
                res[t] = res.get(t, 0) + c
        m = MultilinearPoly.from_dict(degrees, res)
        if not m.is_zero:
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# subspaces of P_n for a fixed tuple


@dataclass(frozen=True)
class PolySubspace:
    degrees: tuple[GroupElement, ...]
    space: Subspace

    @classmethod
    def span(cls, degrees: Sequence[GroupElement], polys: Iterable[MultilinearPoly | Sequence[Scalar]]) -> "PolySubspace":
        n = len(degrees)
        vecs = [p.vector() if isinstance(p, MultilinearPoly) else list(p) for p in polys]
        return cls(tuple(degrees), Subspace.span(vecs, math.factorial(n)))

    @classmethod
    def zero(cls, degrees: Sequence[GroupElement]) -> "PolySubspace":
        return cls(tuple(degrees), Subspace.zero(math.factorial(len(degrees))))

    @classmethod
    def full(cls, degrees: Sequence[GroupElement]) -> "PolySubspace":
        return cls(tuple(degrees), Subspace.full(math.factorial(len(degrees))))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def codim(self) -> int:
        return math.factorial(self.n) - self.space.dim

    def _check(self, other: "PolySubspace"):
        if self.degrees != other.degrees:
            raise ValueError(f"tuple mismatch: {self.degrees} vs {other.degrees}")

    def __add__(self, other: "PolySubspace") -> "PolySubspace":
        self._check(other)
        return PolySubspace(self.degrees, self.space + other.space)

    def intersection(self, other: "PolySubspace") -> "PolySubspace":
        self._check(other)
        return PolySubspace(self.degrees, self.space.intersection(other.space))

    def issubspace(self, other: "PolySubspace") -> bool:
        self._check(other)
        return self.space.issubspace(other.space)

    def contains(self, f: MultilinearPoly) -> bool:
        if f.degrees != self.degrees:
            raise ValueError("tuple mismatch")
        return self.space.contains(f.vector())

    def basis(self) -> list[MultilinearPoly]:
        return [MultilinearPoly.from_vector(self.degrees, b) for b in self.space.basis]

    def witness_outside(self, other: "PolySubspace") -> MultilinearPoly | None:
        """A basis element of self not in other, if any."""
        for b in self.space.basis:
            if not other.space.contains(b):
                return MultilinearPoly.from_vector(self.degrees, b)
        return None


def word_degree(group: Group, degrees: Sequence[GroupElement], word: Sequence[int]) -> GroupElement:
    acc = group.identity
    for i in word:
        acc = acc * degrees[i]
    return acc


def _compositions(total: int, parts: int):
    """Tuples of ``parts`` positive integers summing to at most ``total``."""
    if parts == 0:
        yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def substitution_instances(gen: MultilinearPoly, degrees: Sequence[GroupElement], group: Group):
    """Vectors u f(w_1..w_k) v over all cuts of all orderings of the variables."""
    n = len(degrees)
    k = gen.n
    if k > n:
        return
    idx = perm_index(n)
    size = math.factorial(n)
    coeffs = gen.coeffs
    seen = set()
    for pi in permutations(n):
        for lens in _compositions(n, k):
            used = sum(lens)
            for a in range(0, n - used + 1):
                u = pi[:a]
                ws = []
                pos = a
                ok = True
                for j, ln in enumerate(lens):
                    w = pi[pos:pos + ln]
                    if word_degree(group, degrees, w) != gen.degrees[j]:
                        ok = False
                        break
                    ws.append(w)
                    pos += ln
                if not ok:
                    continue
                v = pi[pos:]
                key = (u, tuple(ws), v)
                if key in seen:
                    continue
                seen.add(key)
                vec: dict[int, Scalar] = {}
                for word, c in coeffs:
                    full = u + tuple(x for j in word for x in ws[j]) + v
                    i = idx[full]
                    vec[i] = vec.get(i, 0) + c
                dense = [0] * size
                for i, c in vec.items():
                    dense[i] = c
                if any(dense):
                    yield dense


def t_consequences(generators: Sequence[GradedPoly | MultilinearPoly], degrees: Sequence[GroupElement],
                   group: Group) -> PolySubspace:
    """Multilinear component, in the given tuple, of the T-ideal generated by ``generators``."""
    mls: list[MultilinearPoly] = []
    for g in generators:
        mls.extend(multilinearize(g) if isinstance(g, GradedPoly) else [g])
    n = len(degrees)
    size = math.factorial(n)
    space = Subspace.zero(size)
    for m in mls:
        batch = list(substitution_instances(m, degrees, group))
        if batch:
            space = Subspace.span(list(space.basis) + batch, size)
            if space.dim == size:
                break
    return PolySubspace(tuple(degrees), space)


def restrict_tuple(degrees: Sequence[GroupElement], subset: Sequence[int]) -> tuple[GroupElement, ...]:
    return tuple(degrees[i] for i in subset)


def product_span(k1: Callable[[tuple], PolySubspace], k2: Callable[[tuple], PolySubspace],
                 degrees: Sequence[GroupElement]) -> PolySubspace:
    """Multilinear component of the product of two T-ideals.

    ``k1`` and ``k2`` return the multilinear components of the factors for a
    given sub-tuple.  The result is spanned by f(x_S) h(x_{S^c}) over nonempty
    proper subsets S, f in k1 on S and h in k2 on the complement.
    """
    n = len(degrees)
    idx = perm_index(n)
    size = math.factorial(n)
    vecs = []
    for r in range(1, n):
        for S in itertools.combinations(range(n), r):
            T = tuple(i for i in range(n) if i not in S)
            K1 = k1(restrict_tuple(degrees, S))
            if not K1.dim:
                continue
            K2 = k2(restrict_tuple(degrees, T))
            if not K2.dim:
                continue
            for f in K1.basis():
                for h in K2.basis():
                    vec = [0] * size
                    for wf, cf in f.coeffs:
                        for wh, ch in h.coeffs:
                            full = tuple(S[i] for i in wf) + tuple(T[i] for i in wh)
                            vec[idx[full]] += cf * ch
                    vecs.append(vec)
    return PolySubspace(tuple(degrees), Subspace.span(vecs, size))


def product_generators(gens1: Sequence[GradedPoly], gens2: Sequence[GradedPoly], group: Group) -> list[GradedPoly]:
    """Generators f(x) g(z) and f(x) y^h g(z) (all h) of the product of two T-ideals."""
    out = []
    for f in gens1:
        for ml_f in multilinearize(f):
            for g in gens2:
                for ml_g in multilinearize(g):
                    a = ml_f.to_graded(group, 1)
                    b = ml_g.to_graded(group, ml_f.n + 1)
                    out.append(a * b)
                    mid = ml_f.n + ml_g.n + 1
                    for h in group.elements():
                        out.append(a * GradedPoly.var(group, mid, h) * b)
    return out


def all_tuples(group: Group, n: int) -> list[tuple[GroupElement, ...]]:
    return list(itertools.product(group.elements(), repeat=n))


def canonical_tuples(group: Group, n: int) -> list[tuple[tuple[GroupElement, ...], int]]:
    """Sorted tuples with the number of tuples that reorder to each."""
    out = []
    for combo in itertools.combinations_with_replacement(group.elements(), n):
        counts = Counter(combo)
        mult = math.factorial(n)
        for c in counts.values():
            mult //= math.factorial(c)
        out.append((combo, mult))
    return out


def sorting_permutation(degrees: Sequence[GroupElement]) -> list[int]:
    """mapping[i] = position of variable i after a stable sort by degree."""
    order = sorted(range(len(degrees)), key=lambda i: (degrees[i], i))
    mapping = [0] * len(degrees)
    for new, old in enumerate(order):
        mapping[old] = new
    return mapping


def relabel_subspace(U: PolySubspace, mapping: Sequence[int]) -> PolySubspace:
    polys = [p.relabel(mapping) for p in U.basis()]
    degs = [None] * U.n
    for i, j in enumerate(mapping):
        degs[j] = U.degrees[i]
    return PolySubspace.span(tuple(degs), polys)
