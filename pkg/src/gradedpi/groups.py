"""Finite abelian groups as products of cyclic groups, the G x Z2 extension,
and 2-cocycles with rational values."""

from __future__ import annotations

import itertools
import re
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class GroupMismatch(ValueError):
    """Raised when elements of different groups are combined."""


@dataclass(frozen=True)
class Group:
    """Z_{n1} x ... x Z_{nk}, written multiplicatively."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def parse(cls, text: str) -> "Group":
        """Parse ``Z2``, ``Z2xZ2``, ``Z4xZ2`` or ``1`` (trivial)."""
        text = text.strip()
        if text in ("1", "trivial", ""):
            return cls(())
        parts = text.replace("×", "x").split("x")
        try:
            return cls(tuple(int(p.strip().lstrip("Zz")) for p in parts))
        except ValueError:
            raise ValueError(f"cannot parse group {text!r}; expected e.g. Z2xZ2") from None

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.orders))

    def element(self, residues: Iterable[int] | int) -> "GroupElement":
        if isinstance(residues, int):
            residues = (residues,)
        residues = tuple(residues)
        if len(residues) != len(self.orders):
            raise GroupMismatch(f"{residues} has wrong length for {self}")
        return GroupElement(self, tuple(r % n for r, n in zip(residues, self.orders)))

    def elements(self) -> list["GroupElement"]:
        return [GroupElement(self, r) for r in itertools.product(*(range(n) for n in self.orders))]

    def generators(self) -> list["GroupElement"]:
        out = []
        for i in range(len(self.orders)):
            r = [0] * len(self.orders)
            r[i] = 1
            out.append(self.element(r))
        return out

    def __str__(self) -> str:
        return "x".join(f"Z{n}" for n in self.orders) if self.orders else "1"


@dataclass(frozen=True, order=True)
class GroupElement:
    group: Group
    residues: tuple[int, ...]

    def _check(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement) or other.group != self.group:
            raise GroupMismatch(f"cannot combine {self} with {other}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, tuple((a + b) % n for a, b, n in
                                              zip(self.residues, other.residues, self.group.orders)))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, tuple((-a) % n for a, n in zip(self.residues, self.group.orders)))

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(self.group, tuple((a * k) % n for a, n in zip(self.residues, self.group.orders)))

    @property
    def is_identity(self) -> bool:
        return not any(self.residues)

    def order(self) -> int:
        return math.lcm(*(n // math.gcd(n, a) for a, n in zip(self.residues, self.group.orders))) \
            if self.residues else 1

    def __str__(self) -> str:
        if self.is_identity:
            return "1"
        return "(" + ",".join(map(str, self.residues)) + ")"

    __repr__ = __str__


@dataclass(frozen=True, order=True)
class ExtendedDegree:
    """An element of G x Z2: a group element with a parity bit."""

    g: GroupElement
    parity: int = 0

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {self.parity}")

    def __mul__(self, other: "ExtendedDegree") -> "ExtendedDegree":
        return ExtendedDegree(self.g * other.g, self.parity ^ other.parity)

    def inverse(self) -> "ExtendedDegree":
        return ExtendedDegree(self.g.inverse(), self.parity)

    def order(self) -> int:
        return math.lcm(self.g.order(), 2 if self.parity else 1)

    @property
    def is_identity(self) -> bool:
        return self.g.is_identity and not self.parity

    def to_list(self) -> list[int]:
        return [*self.g.residues, self.parity]

    def __str__(self) -> str:
        return f"{self.g}^{self.parity}"

    __repr__ = __str__


def identity_degree(group: Group) -> ExtendedDegree:
    return ExtendedDegree(group.identity, 0)


def subgroup_generated(gens: list) -> list:
    """Closure of ``gens`` under the product, sorted canonically.

    Works for GroupElement and ExtendedDegree alike; at least one generator
    is required so the ambient group is known.
    """
    if not gens:
        raise ValueError("need at least one generator")
    first = gens[0]
    identity = (ExtendedDegree(first.g.group.identity, 0) if isinstance(first, ExtendedDegree)
                else first.group.identity)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = a * s
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


@dataclass(frozen=True)
class Cocycle:
    """A normalized 2-cocycle on a finite subgroup, given as a full table."""

    subgroup: tuple
    table: Mapping

    def __call__(self, a, b) -> Fraction:
        return self.table[(a, b)]


@dataclass
class CocycleReport:
    ok: bool
    message: str = ""
    triple: tuple | None = None


def validate_cocycle(c: Cocycle) -> CocycleReport:
    """Check totality, nonvanishing, normalization and the cocycle identity."""
    H = list(c.subgroup)
    hs = set(H)
    for a in H:
        for b in H:
            if a * b not in hs:
                return CocycleReport(False, f"subgroup not closed: {a}*{b}", (a, b))
            if (a, b) not in c.table:
                return CocycleReport(False, f"table missing ({a},{b})", (a, b))
            if c.table[(a, b)] == 0:
                return CocycleReport(False, f"zero value at ({a},{b})", (a, b))
    e = next(h for h in H if h.is_identity)
    for h in H:
        if c.table[(e, h)] != 1 or c.table[(h, e)] != 1:
            return CocycleReport(False, f"normalization violated at {h}", (e, h))
    for a in H:
        for b in H:
            for d in H:
                if c.table[(a, b)] * c.table[(a * b, d)] != c.table[(b, d)] * c.table[(a, b * d)]:
                    return CocycleReport(False, "cocycle identity violated", (a, b, d))
    return CocycleReport(True)


def trivial_cocycle(subgroup: list) -> Cocycle:
    return Cocycle(tuple(subgroup), {(a, b): Fraction(1) for a in subgroup for b in subgroup})


def sign_cocycle(g, h) -> Cocycle:
    """Bilinear sign cocycle on <g, h> (both of order 2, g != h).

    Writing elements as g^a h^b, alpha(g^a h^b, g^c h^d) = (-1)^(b*c), so that
    b_g b_h = b_gh and b_h b_g = -b_gh.
    """
    e = g * g.inverse()
    coords = {}
    for a in (0, 1):
        for b in (0, 1):
            x = e
            if a:
                x = x * g
            if b:
                x = x * h
            coords[x] = (a, b)
    if len(coords) != 4:
        raise ValueError("sign cocycle needs two distinct elements of order 2")
    table = {}
    for x, (a, b) in coords.items():
        for y, (c, _d) in coords.items():
            table[(x, y)] = Fraction(-1 if (b * c) % 2 else 1)
    return Cocycle(tuple(sorted(coords)), table)


# ---------------------------------------------------------------------------
# human-readable labels

GENERATOR_LETTERS = "ghklmnpqrs"


def element_label(el: GroupElement) -> str:
    """``1``, ``g``, ``g2``, ``gh``, ``g3h`` ... (generator letters g, h, k, ...)."""
    if el.is_identity:
        return "1"
    parts = []
    for letter, r in zip(GENERATOR_LETTERS, el.residues):
        if r:
            parts.append(letter if r == 1 else f"{letter}{r}")
    return "".join(parts)


def parse_label(group: Group, text: str, label_map: Mapping[str, tuple] | None = None) -> GroupElement:
    """Resolve a degree label: a label-map entry, ``1``, ``(a,b,...)``, or a generator word."""
    text = text.strip()
    if label_map and text in label_map:
        return group.element(tuple(label_map[text]))
    if text in ("1", "e"):
        return group.identity
    if text.startswith("("):
        inner = text.strip("()").strip()
        res = tuple(int(p) for p in inner.split(",")) if inner else ()
        return group.element(res)
    if not re.fullmatch(r"(?:[a-z]\d*)+", text):
        raise ValueError(f"unknown degree label {text!r}")
    residues = [0] * len(group.orders)
    for letter, exp in re.findall(r"([a-z])(\d*)", text):
        k = GENERATOR_LETTERS.find(letter)
        if k < 0 or k >= len(group.orders):
            raise ValueError(f"unknown degree label {text!r} for group {group}")
        residues[k] += int(exp) if exp else 1
    return group.element(residues)


def parse_extended_label(group: Group, text: str, label_map=None) -> ExtendedDegree:
    """``g^1``, ``1^0``, ``e`` (identity of G x Z2) or a plain label (parity 0)."""
    text = text.strip()
    if text == "e":
        return identity_degree(group)
    if "^" in text:
        base, par = text.rsplit("^", 1)
        return ExtendedDegree(parse_label(group, base, label_map), int(par))
    return ExtendedDegree(parse_label(group, text, label_map), 0)
