"""Structural subgroup computations by exhaustive enumeration.

Everything here iterates over explicit element sets: normalizers,
centralizers, Sylow subgroups, quotients, automizers, fusion control and
the table of G-classes of p-subgroups of a fixed Sylow subgroup.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import GroupTooLarge, NotNormal
from .perm import FiniteGroup, Permutation, Subgroup, closure, is_p_power, p_part_of

DEFAULT_SUBGROUP_BOUND = 20_000


# -- elements ---------------------------------------------------------------

@dataclass(frozen=True)
class ElementDecomposition:
    x: Permutation
    x_p: Permutation
    x_p_prime: Permutation


def p_part(x: Permutation, p: int) -> ElementDecomposition:
    """Split ``x`` into commuting p- and p'-parts."""
    n = x.order()
    pe = p_part_of(n, p)
    q = n // pe
    x_p = x ** (q * pow(q, -1, pe)) if pe > 1 else Permutation.identity(len(x))
    return ElementDecomposition(x, x_p, x * x_p.inverse())


def is_p_element(x: Permutation, p: int) -> bool:
    return is_p_power(x.order(), p)


# -- normalizers and conjugacy ---------------------------------------------

def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    elems = frozenset(g for g in G.elements if H.is_normalized_by(g))
    return Subgroup(G, elems)


def centralizer(G: FiniteGroup, H: Subgroup | Iterable[Permutation]) -> Subgroup:
    gens = H.generators if isinstance(H, Subgroup) else tuple(H)
    elems = frozenset(g for g in G.elements if all(g * h == h * g for h in gens))
    return Subgroup(G, elems)


def normalizer_in(N: Subgroup, H: Subgroup) -> Subgroup:
    """``N_N(H)`` for a subgroup ``N`` of the ambient group."""
    return Subgroup(N.parent, frozenset(g for g in N.elements if H.is_normalized_by(g)))


def centralizer_in(N: Subgroup, H: Subgroup) -> Subgroup:
    gens = H.generators
    return Subgroup(N.parent, frozenset(
        g for g in N.elements if all(g * h == h * g for h in gens)))


def are_conjugate_subgroups(G: FiniteGroup, A: Subgroup, B: Subgroup
                            ) -> tuple[bool, Permutation | None]:
    """Return ``(True, g)`` with ``g A g^-1 == B``, or ``(False, None)``."""
    if A.order != B.order:
        return False, None
    N = normalizer(G, A).elements
    covered: set[Permutation] = set()
    for g in G.sorted_elements:
        if g in covered:
            continue
        if A.conjugate_elements(g) == B.elements:
            return True, g
        covered.update(g * n for n in N)
    return False, None


def product_set(A: Subgroup, B: Subgroup) -> frozenset[Permutation]:
    return frozenset(a * b for a in A.elements for b in B.elements)


# -- Sylow subgroups ---------------------------------------------------------

def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """Grow a Sylow p-subgroup by adjoining normalizing p-elements."""
    target = p_part_of(G.order, p)
    ident = G.identity
    p_elements = [x for x in G.sorted_elements if not x.is_identity() and is_p_element(x, p)]
    gens: list[Permutation] = []
    elems = frozenset([ident])
    while len(elems) < target:
        P = Subgroup(G, elems, tuple(gens))
        for x in p_elements:
            if x not in elems and P.is_normalized_by(x):
                gens.append(x)
                elems = closure(gens, ident, G.order)
                break
        else:  # pragma: no cover - excluded by Sylow's theorem
            raise RuntimeError("no normalizing p-element found")
    return Subgroup(G, elems, tuple(gens))


# -- quotients ---------------------------------------------------------------

@dataclass(eq=False)
class QuotientGroup:
    """``N/K`` as a Cayley table on coset indices (coset 0 is ``K``)."""

    ambient: Subgroup
    kernel: Subgroup
    cosets: list[Permutation]
    table: list[list[int]] = field(repr=False)
    projection: dict[Permutation, int] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.cosets)

    def __len__(self) -> int:
        return len(self.cosets)

    def project(self, x: Permutation) -> int:
        return self.projection[x]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def element_order(self, i: int) -> int:
        k, j = 1, i
        while j != 0:
            j = self.table[j][i]
            k += 1
        return k

    def orders(self) -> list[int]:
        return [self.element_order(i) for i in range(self.order)]

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[i][j] == t[j][i] for i in range(n) for j in range(i))

    @cached_property
    def inverses(self) -> list[int]:
        inv = [0] * self.order
        for i, row in enumerate(self.table):
            inv[i] = row.index(0)
        return inv


def quotient(N: Subgroup, K: Subgroup | frozenset[Permutation]) -> QuotientGroup:
    kelems = K.elements if isinstance(K, Subgroup) else frozenset(K)
    if not kelems <= N.elements:
        raise NotNormal("kernel is not contained in the ambient subgroup")
    Ksub = K if isinstance(K, Subgroup) else Subgroup(N.parent, kelems)
    gens = N.generators or tuple(N.elements)
    if not all(Ksub.is_normalized_by(g) for g in gens):
        raise NotNormal("kernel is not normal")
    ident = N.parent.identity
    cosets = [ident]
    projection = {k: 0 for k in kelems}
    for x in sorted(N.elements):
        if x in projection:
            continue
        idx = len(cosets)
        cosets.append(x)
        for k in kelems:
            projection[x * k] = idx
    table = [[projection[a * b] for b in cosets] for a in cosets]
    return QuotientGroup(N, Ksub, cosets, table, projection)


def automizer(G: FiniteGroup, P: Subgroup, variant: str = "NC") -> QuotientGroup:
    """``N_G(P)/C_G(P)`` (``"NC"``) or ``N_G(P)/P C_G(P)`` (``"NPC"``)."""
    N = normalizer(G, P)
    C = centralizer(G, P)
    if variant == "NC":
        return quotient(N, C)
    if variant != "NPC":
        raise ValueError(f"unknown automizer variant {variant!r}")
    PC = product_set(P, C)
    if closure(tuple(PC), G.identity, G.order) != PC:  # pragma: no cover
        raise RuntimeError("P C_G(P) is not a subgroup")
    return quotient(N, PC)


def order_census(Q: Subgroup | QuotientGroup) -> Counter:
    if isinstance(Q, QuotientGroup):
        return Counter(Q.orders())
    return Counter(x.order() for x in Q.elements)


def small_group_shape(Q: Subgroup | QuotientGroup) -> str:
    """One of ``cyclic-n``, ``klein-four``, ``dihedral-8``, ``quaternion-8``, ``other``."""
    n = Q.order
    if n > 16:
        raise ValueError(f"small_group_shape supports order <= 16, got {n}")
    census = order_census(Q)
    if census.get(n):
        return f"cyclic-{n}"
    if n == 4:
        return "klein-four"
    if n == 8 and census.get(4) == 2 and census.get(2) == 5:
        return "dihedral-8"
    if n == 8 and census.get(4) == 6 and census.get(2) == 1:
        return "quaternion-8"
    return "other"


def is_dihedral(S: Subgroup) -> bool:
    """Dihedral of order ``2^n >= 4``: a cyclic index-2 subgroup inverted by an involution outside it."""
    n = S.order
    if n < 4:
        return False
    if n == 4:
        return not S.is_cyclic()
    rot = [x for x in S.elements if x.order() == n // 2]
    for r in rot:
        cyc = {r ** i for i in range(n // 2)}
        for t in S.elements:
            if t not in cyc:
                return t.order() == 2 and t * r * t.inverse() == r.inverse()
    return False


# -- fusion ------------------------------------------------------------------

def _conj_signatures(conjugators: Iterable[Permutation], P: Subgroup,
                     S_elems: frozenset[Permutation]) -> set[tuple[Permutation, ...]]:
    gens = P.generators
    sigs = set()
    for g in conjugators:
        if P.conjugate_elements(g) <= S_elems:
            sigs.add(tuple(x.conjugate(g) for x in gens))
    return sigs


def controls_fusion(G: FiniteGroup, H: Subgroup, S: Subgroup,
                    table: SubgroupClassTable | None = None) -> bool:
    """True iff every G-conjugation map between subgroups of S is induced by H."""
    if S.order != p_part_of(G.order, _prime_of(S, G)):
        raise ValueError("S is not a Sylow subgroup of G")
    if not S.elements <= H.elements:
        raise ValueError("S is not contained in H")
    if table is None or table.sylow != S:
        table = p_subgroup_classes(G, _prime_of(S, G), sylow=S)
    for idx in table.s_reps:
        P = table.subgroups[idx]
        if _conj_signatures(G.elements, P, S.elements) - _conj_signatures(H.elements, P, S.elements):
            return False
    return True


def weakly_controls_fusion(G: FiniteGroup, H: Subgroup, table: SubgroupClassTable) -> bool:
    """True iff any two G-conjugate subgroups of S are already H-conjugate."""
    S = table.sylow
    for cls in range(len(table.class_reps)):
        members = [table.subgroups[i] for i in table.members(cls)]
        base = members[0]
        reach = {base.conjugate_elements(h) for h in H.elements}
        if any(m.elements not in reach for m in members[1:]):
            return False
    return S.elements <= H.elements


def _prime_of(S: Subgroup, G: FiniteGroup) -> int:
    from .perm import prime_factors
    f = prime_factors(S.order) if S.order > 1 else {}
    if len(f) > 1:
        raise ValueError("not a p-group")
    if f:
        return next(iter(f))
    # trivial Sylow subgroup: any prime not dividing |G| behaves the same
    q = 2
    while G.order % q == 0:
        q += 1
    return q


# -- class table -------------------------------------------------------------

def enumerate_subgroups_of_p_group(S: Subgroup, p: int,
                                   bound: int = DEFAULT_SUBGROUP_BOUND) -> list[Subgroup]:
    """All subgroups of the p-group ``S``, built layer by layer by order."""
    G = S.parent
    ident = G.identity
    trivial = Subgroup(G, frozenset([ident]))
    layers = [[trivial]]
    seen = {trivial.elements}
    total = 1
    while layers[-1]:
        nxt: list[Subgroup] = []
        for H in layers[-1]:
            found_here: set[Permutation] = set()
            for x in sorted(S.elements):
                if x in H.elements or x in found_here or not H.is_normalized_by(x):
                    continue
                if (x ** p) not in H.elements:
                    continue
                elems = set(H.elements)
                xi = x
                for _ in range(p - 1):
                    elems.update(xi * h for h in H.elements)
                    xi = xi * x
                key = frozenset(elems)
                found_here.update(key)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(Subgroup(G, key, H.generators + (x,)))
                total += 1
                if total > bound:
                    raise GroupTooLarge(f"lattice too large: more than {bound} subgroups")
        layers.append(nxt)
    return [H for layer in layers for H in layer]


@dataclass(eq=False)
class SubgroupClassTable:
    """G-conjugacy classes (and S-conjugacy classes) of subgroups of a Sylow S.

    ``subgroups`` lists every subgroup of ``S`` ordered by size; class
    indices refer to G-classes unless a name says ``s_``.  Class 0 is the
    trivial subgroup in both numberings.
    """

    group: FiniteGroup
    p: int
    sylow: Subgroup
    subgroups: list[Subgroup]
    index: dict[frozenset, int] = field(repr=False)
    g_class_of: list[int] = field(repr=False)
    to_rep: list[Permutation] = field(repr=False)
    g_reps: list[int] = field(repr=False)
    s_class_of: list[int] = field(repr=False)
    s_to_rep: list[Permutation] = field(repr=False)
    s_reps: list[int] = field(repr=False)

    # -- G-classes
    @property
    def class_reps(self) -> list[Subgroup]:
        return [self.subgroups[i] for i in self.g_reps]

    def __len__(self) -> int:
        return len(self.g_reps)

    def class_of(self, H: Subgroup | frozenset) -> int:
        key = H.elements if isinstance(H, Subgroup) else H
        return self.g_class_of[self.index[key]]

    def members(self, cls: int) -> list[int]:
        return [i for i, c in enumerate(self.g_class_of) if c == cls]

    def class_sizes(self) -> list[int]:
        sizes = Counter(self.g_class_of)
        return [sizes[c] for c in range(len(self.g_reps))]

    @cached_property
    def cyclic_flags(self) -> list[bool]:
        return [H.is_cyclic() for H in self.class_reps]

    def is_cyclic(self, cls: int) -> bool:
        return self.cyclic_flags[cls]

    @property
    def c(self) -> int:
        """Number of G-classes of cyclic p-subgroups."""
        return sum(self.cyclic_flags)

    @cached_property
    def normalizers(self) -> list[Subgroup]:
        return [normalizer(self.group, H) for H in self.class_reps]

    @cached_property
    def centralizers(self) -> list[Subgroup]:
        return [centralizer(self.group, H) for H in self.class_reps]

    def automizer(self, cls: int, variant: str = "NC") -> QuotientGroup:
        P = self.class_reps[cls]
        N, C = self.normalizers[cls], self.centralizers[cls]
        if variant == "NC":
            return quotient(N, C)
        return quotient(N, product_set(P, C))

    # -- S-classes
    @property
    def s_class_reps(self) -> list[Subgroup]:
        return [self.subgroups[i] for i in self.s_reps]

    def s_class_sizes(self) -> list[int]:
        sizes = Counter(self.s_class_of)
        return [sizes[c] for c in range(len(self.s_reps))]

    @cached_property
    def s_cyclic_flags(self) -> list[bool]:
        return [H.is_cyclic() for H in self.s_class_reps]

    @cached_property
    def s_to_g(self) -> list[int]:
        return [self.g_class_of[i] for i in self.s_reps]

    # -- locating arbitrary p-subgroups
    def locate(self, Q: Subgroup | frozenset[Permutation]) -> tuple[int, Permutation]:
        """Return ``(cls, g)`` with ``g Q g^-1`` equal to the class representative."""
        key = Q.elements if isinstance(Q, Subgroup) else frozenset(Q)
        cached = self._locate_cache.get(key)
        if cached is not None:
            return cached
        if key in self.index:
            i = self.index[key]
            out = (self.g_class_of[i], self.to_rep[i])
        else:
            for g in self.group.sorted_elements:
                conj = frozenset(x.conjugate(g) for x in key)
                i = self.index.get(conj)
                if i is not None:
                    out = (self.g_class_of[i], self.to_rep[i] * g)
                    break
            else:
                raise ValueError("subgroup is not a p-subgroup of the group")
        self._locate_cache[key] = out
        return out

    @cached_property
    def _locate_cache(self) -> dict:
        return {}

    def describe(self) -> list[str]:
        return [H.label() for H in self.class_reps]


def _partition(subgroups: list[Subgroup], index: dict[frozenset, int],
               conjugators: Iterable[Permutation]
               ) -> tuple[list[int], list[Permutation], list[int]]:
    conj = list(conjugators)
    class_of = [-1] * len(subgroups)
    to_rep: list[Permutation] = [None] * len(subgroups)  # type: ignore[list-item]
    reps: list[int] = []
    for i, H in enumerate(subgroups):
        if class_of[i] >= 0:
            continue
        cls = len(reps)
        reps.append(i)
        for g in conj:
            j = index.get(H.conjugate_elements(g))
            if j is not None and class_of[j] < 0:
                class_of[j] = cls
                to_rep[j] = g.inverse()
    return class_of, to_rep, reps


def p_subgroup_classes(G: FiniteGroup, p: int, sylow: Subgroup | None = None,
                       bound: int = DEFAULT_SUBGROUP_BOUND) -> SubgroupClassTable:
    S = sylow if sylow is not None else sylow_subgroup(G, p)
    subs = enumerate_subgroups_of_p_group(S, p, bound)
    subs.sort(key=lambda H: H.order)
    index = {H.elements: i for i, H in enumerate(subs)}
    g_cls, to_rep, g_reps = _partition(subs, index, G.sorted_elements)
    s_cls, s_to_rep, s_reps = _partition(subs, index, sorted(S.elements))
    return SubgroupClassTable(G, p, S, subs, index, g_cls, to_rep, g_reps,
                              s_cls, s_to_rep, s_reps)


# -- criteria ----------------------------------------------------------------

def is_p_nilpotent(G: FiniteGroup, p: int, table: SubgroupClassTable | None = None) -> bool:
    """Frobenius criterion: every automizer of a p-subgroup is a p-group."""
    table = table or p_subgroup_classes(G, p)
    return all(is_p_power(table.automizer(c).order, p) for c in range(len(table)))


def _span(Q: QuotientGroup, gens: Iterable[int]) -> set[int]:
    t = Q.table
    gens = list(gens)
    span = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = t[a][b]
                if c not in span:
                    span.add(c)
                    nxt.append(c)
        frontier = nxt
    return span


def o_p_prime(Q: QuotientGroup, p: int) -> list[int]:
    """Largest normal p'-subgroup of ``Q`` as a sorted list of coset indices."""
    t, inv = Q.table, Q.inverses
    current = {0}
    changed = True
    while changed:
        changed = False
        for x in range(Q.order):
            if x in current or Q.element_order(x) % p == 0:
                continue
            conj = {t[t[g][y]][inv[g]] for y in current | {x} for g in range(Q.order)}
            cand = _span(Q, conj)
            if len(cand) % p:
                current = cand
                changed = True
    return sorted(current)
