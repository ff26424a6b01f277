"""Permutations and fully enumerated permutation groups.

Points are 0-based internally; every string form uses 1-based cycle
notation.  Products compose right to left: ``(a * b)(i) == a[b[i]]``, so
``g * x * g.inverse()`` is the conjugate of ``x`` by ``g``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GroupTooLarge, InvalidPermutation

DEFAULT_BOUND = 100_000


class Permutation(tuple):
    """A bijection of ``{0, ..., degree - 1}`` stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def checked(cls, images: Sequence[int], degree: int | None = None) -> Permutation:
        images = tuple(images)
        if degree is not None and len(images) != degree:
            raise InvalidPermutation(
                f"invalid permutation: expected degree {degree}, got {len(images)}")
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"invalid permutation: {images} is not a bijection")
        return cls(images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int,
                    one_based: bool = True) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        shift = 1 if one_based else 0
        for cyc in cycles:
            pts = [c - shift for c in cyc]
            for q in pts:
                if not 0 <= q < degree:
                    raise InvalidPermutation(
                        f"point out of range: {q + shift} (degree {degree})")
                if q in seen:
                    raise InvalidPermutation(f"invalid permutation: point {q + shift} repeated")
                seen.add(q)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> Permutation:
        """Parse 1-based cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\)\s*)+", text):
            raise InvalidPermutation(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if pts:
                cycles.append(pts)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: Permutation) -> Permutation:  # type: ignore[override]
        return tuple.__new__(Permutation, [self[i] for i in other])

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return tuple.__new__(Permutation, inv)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(len(self))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """Return ``g * self * g^-1``."""
        out = [0] * len(self)
        for i, j in enumerate(self):
            out[g[i]] = g[j]
        return tuple.__new__(Permutation, out)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={len(self)})"


def closure(gens: Sequence[Permutation], identity: Permutation,
            bound: int = DEFAULT_BOUND) -> frozenset[Permutation]:
    """All products of ``gens``; raises :class:`GroupTooLarge` past ``bound``."""
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if len(elems) > bound:
                        raise GroupTooLarge(f"group too large: more than {bound} elements")
        frontier = nxt
    return frozenset(elems)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A permutation group together with its complete element set."""

    degree: int
    generators: tuple[Permutation, ...]
    elements: frozenset[Permutation] = field(repr=False)
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @cached_property
    def sorted_elements(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self.elements))

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.sorted_elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, self.elements, self.generators)

    def subgroup(self, gens: Iterable[Permutation]) -> Subgroup:
        gens = tuple(gens)
        for g in gens:
            if g not in self.elements:
                raise ValueError(f"{g} is not an element of the group")
        return Subgroup(self, closure(gens, self.identity, self.order), gens)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{label} degree={self.degree} order={self.order}>"


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of a :class:`FiniteGroup`, given by its element set."""

    parent: FiniteGroup = field(repr=False)
    elements: frozenset[Permutation] = field(repr=False)
    gens: tuple[Permutation, ...] = ()

    def __post_init__(self):
        if self.parent.order % len(self.elements):
            raise ValueError("subgroup order does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __le__(self, other: Subgroup) -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: Subgroup) -> bool:
        return self.elements < other.elements

    @cached_property
    def generators(self) -> tuple[Permutation, ...]:
        """A small generating set (the stored one, else a greedy choice)."""
        if self.gens or self.order == 1:
            return self.gens
        ident = self.parent.identity
        gens: list[Permutation] = []
        span = frozenset([ident])
        for x in sorted(self.elements, key=lambda e: (-e.order(), e)):
            if x not in span:
                gens.append(x)
                span = closure(gens, ident, self.order)
                if len(span) == self.order:
                    break
        return tuple(gens)

    def conjugate(self, g: Permutation) -> Subgroup:
        return Subgroup(self.parent, frozenset(x.conjugate(g) for x in self.elements),
                        tuple(x.conjugate(g) for x in self.generators))

    def conjugate_elements(self, g: Permutation) -> frozenset[Permutation]:
        return frozenset(x.conjugate(g) for x in self.elements)

    def is_normalized_by(self, g: Permutation) -> bool:
        return all(x.conjugate(g) in self.elements for x in self.generators)

    def is_cyclic(self) -> bool:
        n = self.order
        return any(x.order() == n for x in self.elements)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def as_group(self, name: str = "") -> FiniteGroup:
        """Promote to a standalone :class:`FiniteGroup` on the same points."""
        return FiniteGroup(self.parent.degree, self.generators, self.elements, name)

    def label(self) -> str:
        if self.order == 1:
            return "<>"
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, gens={self.label()})"


def group_from_generators(degree: int, gens: Iterable[Sequence[int]],
                          bound: int = DEFAULT_BOUND, name: str = "") -> FiniteGroup:
    """Enumerate the group generated by ``gens`` (0-based image lists)."""
    perms = tuple(Permutation.checked(g, degree) for g in gens)
    elems = closure(perms, Permutation.identity(degree), bound)
    return FiniteGroup(degree, perms, elems, name)


def group_from_cycles(degree: int, gens: Iterable[str], bound: int = DEFAULT_BOUND,
                      name: str = "") -> FiniteGroup:
    """Like :func:`group_from_generators` but with 1-based cycle strings."""
    perms = [Permutation.parse(g, degree) for g in gens]
    return group_from_generators(degree, perms, bound, name)


def prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == {n: 1}


def p_part_of(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_p_power(n: int, p: int) -> bool:
    return p_part_of(n, p) == n
