"""Coherent character tuples for odd p.

Each p-subgroup class P contributes the group of homomorphisms from
``N_G(P)/P C_G(P)`` into the cyclic group of order ``m`` (the unit group
of the coefficient field).  Values in that cyclic group are written
additively as residues mod ``m``.  A tuple is a choice of one
homomorphism per class; coherence ties the class of P to the class of
``P<x_p>`` for every ``x`` in ``N_G(P)``.

Stability inside a class needs no equations: a homomorphism to an
abelian group kills commutators, and conjugation by an element of the
normalizer acts on the abelianization as an inner automorphism, so it
acts trivially.  Only the transport between different classes, through
the conjugating element returned by ``SubgroupClassTable.locate``,
produces rows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Sequence

from .intlinalg import (integer_inverse, matmul, rational_inverse, rref_mod, smith,
                        solve_mixed_system)
from .perm import FiniteGroup, Permutation, is_prime
from .structure import (QuotientGroup, SubgroupClassTable, _span, p_part,
                        p_subgroup_classes, product_set, quotient)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z/d_1 x ... x Z/d_t`` with ``d_1 | d_2 | ... | d_t`` and each ``d_i > 1``."""

    invariants: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        inv = self.invariants
        if any(d <= 1 for d in inv):
            raise ValueError("invariant factors must exceed 1")
        if any(b % a for a, b in zip(inv, inv[1:])):
            raise ValueError(f"invariant factors {inv} do not form a divisibility chain")

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> FiniteAbelianGroup:
        """Normalize any product of cyclic groups to invariant factors."""
        orders = [d for d in orders if d > 1]
        if not orders:
            return cls(())
        diag = [[d if i == j else 0 for j in range(len(orders))] for i, d in enumerate(orders)]
        return cls(tuple(d for d in smith(diag).diagonal if d > 1))

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariants:
            out *= d
        return out

    @property
    def exponent(self) -> int:
        return self.invariants[-1] if self.invariants else 1

    def elements(self):
        return product(*(range(d) for d in self.invariants))

    def __str__(self) -> str:
        if not self.invariants:
            return "1"
        return " x ".join(f"C{d}" for d in self.invariants)


def min_generators(A: FiniteAbelianGroup) -> int:
    return len(A.invariants)


# -- abelianization and homomorphisms ---------------------------------------

def commutator_subgroup(Q: QuotientGroup) -> list[int]:
    t, inv = Q.table, Q.inverses
    comms = {t[t[a][b]][t[inv[a]][inv[b]]] for a in range(Q.order) for b in range(Q.order)}
    return sorted(_span(Q, comms))


def _decompose_abelian(n: int, add, zero: int) -> list[tuple[int, int]]:
    """Greedy cyclic decomposition ``[(generator, order), ...]`` of an abelian group.

    At each step an element of maximal order modulo the span H of the
    previous generators is chosen, then moved inside its coset of H to an
    element of the same order, so the new cyclic factor meets H
    trivially.
    """
    gens: list[tuple[int, int]] = []
    H = {zero}

    def multiple(x: int, k: int) -> int:
        y = zero
        for _ in range(k):
            y = add(y, x)
        return y

    while len(H) < n:
        best, best_d = None, 0
        for x in range(n):
            if x in H:
                continue
            d, y = 1, x
            while y not in H:
                y = add(y, x)
                d += 1
            if d > best_d:
                best, best_d = x, d
        for h in sorted(H):
            y = add(best, h)
            if multiple(y, best_d) == zero:
                break
        else:  # pragma: no cover - excluded by the splitting argument
            raise RuntimeError("no complement-compatible lift")
        gens.append((y, best_d))
        newH = set()
        yk = zero
        for _ in range(best_d):
            newH.update(add(yk, h) for h in H)
            yk = add(yk, y)
        H = newH
    return gens


@dataclass(eq=False)
class HomComponent:
    """``Hom(Q, Z/m)`` for a finite group ``Q`` given by its Cayley table.

    The abelianization is decomposed as ``Z/d_1 x ... x Z/d_t`` on chosen
    generators; a homomorphism is the vector ``u`` of residues
    ``u_i mod gcd(d_i, m)`` for the factors with that gcd exceeding 1, and
    sends generator ``i`` to ``(m / gcd) * u_i``.
    """

    quotient: QuotientGroup
    m: int
    abel_orders: list[int]
    coords: list[tuple[int, ...]] = field(repr=False)
    kept: list[int]
    moduli: list[int]
    gen_elements: list[Permutation]

    @property
    def group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup.from_cyclic_orders(self.moduli)

    @property
    def nvars(self) -> int:
        return len(self.kept)

    def coefficients(self, q: int) -> list[int]:
        """Row with ``phi_u(q) = sum(row_i * u_i) mod m``."""
        c = self.coords[q]
        return [(self.m // g) * c[i] % self.m for i, g in zip(self.kept, self.moduli)]

    def coefficients_of(self, x: Permutation) -> list[int]:
        return self.coefficients(self.quotient.project(x))

    def evaluate(self, u: Sequence[int], x: Permutation) -> int:
        return sum(a * b for a, b in zip(self.coefficients_of(x), u)) % self.m


def hom_to_roots(Q: QuotientGroup, m: int) -> HomComponent:
    if m < 1:
        raise ValueError("m must be positive")
    D = set(commutator_subgroup(Q))
    t = Q.table
    coset_of = [-1] * Q.order
    reps: list[int] = []
    for a in range(Q.order):
        if coset_of[a] < 0:
            idx = len(reps)
            reps.append(a)
            for d in D:
                coset_of[t[a][d]] = idx
    n = len(reps)

    def add(i: int, j: int) -> int:
        return coset_of[t[reps[i]][reps[j]]]

    zero = coset_of[0]
    gens = _decompose_abelian(n, add, zero)
    orders = [d for _, d in gens]
    # coordinates of every abelianization element
    table_coords: dict[int, tuple[int, ...]] = {}
    for c in product(*(range(d) for d in orders)):
        y = zero
        for (g, _), k in zip(gens, c):
            for _ in range(k):
                y = add(y, g)
        table_coords[y] = c
    coords = [table_coords[coset_of[q]] for q in range(Q.order)]
    kept = [i for i, d in enumerate(orders) if gcd(d, m) > 1]
    moduli = [gcd(orders[i], m) for i in kept]
    gen_elements = [Q.cosets[reps[gens[i][0]]] for i in kept]
    return HomComponent(Q, m, orders, coords, kept, moduli, gen_elements)


# -- coherence ---------------------------------------------------------------

def tuple_components(table: SubgroupClassTable, m: int) -> list[HomComponent]:
    out = []
    for cls, P in enumerate(table.class_reps):
        N, C = table.normalizers[cls], table.centralizers[cls]
        out.append(hom_to_roots(quotient(N, product_set(P, C)), m))
    return out


def _offsets(components: Sequence[HomComponent]) -> list[int]:
    offs, total = [], 0
    for comp in components:
        offs.append(total)
        total += comp.nvars
    return offs + [total]


@dataclass(frozen=True)
class CoherenceConstraint:
    """``phi_P(x) == phi_Qhat(y)`` where ``Qhat`` represents ``P<x_p>`` and ``y = g x g^-1``."""

    p_class: int
    x: Permutation
    q_class: int
    y: Permutation
    row: tuple[int, ...]


def coherence_constraints(G: FiniteGroup, p: int, table: SubgroupClassTable | None = None,
                          m: int | None = None,
                          components: Sequence[HomComponent] | None = None
                          ) -> list[CoherenceConstraint]:
    if p == 2:
        raise ValueError("coherent tuples are implemented for odd p only")
    table = table if table is not None else p_subgroup_classes(G, p)
    m = m if m is not None else p - 1
    components = components if components is not None else tuple_components(table, m)
    offs = _offsets(components)
    width = offs[-1]
    out: list[CoherenceConstraint] = []
    seen: set = set()
    for cls, P in enumerate(table.class_reps):
        for x in sorted(table.normalizers[cls].elements):
            xp = p_part(x, p).x_p
            if xp in P.elements:
                continue
            Q = closure_with(P, xp)
            qcls, g = table.locate(Q)
            y = x.conjugate(g)
            row = [0] * width
            for i, c in enumerate(components[cls].coefficients_of(x)):
                row[offs[cls] + i] += c
            for i, c in enumerate(components[qcls].coefficients_of(y)):
                row[offs[qcls] + i] -= c
            row = tuple(v % m for v in row)
            if not any(row) or row in seen:
                continue
            seen.add(row)
            out.append(CoherenceConstraint(cls, x, qcls, y, row))
    return out


def closure_with(P, xp: Permutation) -> frozenset[Permutation]:
    """Elements of ``P<x_p>`` (``x_p`` normalizes ``P``)."""
    elems = set(P.elements)
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            b = xp * a
            if b not in elems:
                elems.add(b)
                nxt.append(b)
        frontier = nxt
    return frozenset(elems)


# -- the reduced tuple group -------------------------------------------------

@dataclass(eq=False)
class TupleGroup:
    table: SubgroupClassTable
    m: int
    components: list[HomComponent]
    constraints: list[CoherenceConstraint]
    group: FiniteAbelianGroup
    basis: list[tuple[int, ...]]
    basis_orders: list[int]

    @property
    def offsets(self) -> list[int]:
        return _offsets(self.components)

    @property
    def moduli(self) -> list[int]:
        return [g for comp in self.components for g in comp.moduli]

    def block(self, u: Sequence[int], cls: int) -> tuple[int, ...]:
        offs = self.offsets
        return tuple(u[offs[cls]:offs[cls + 1]])

    def contains(self, u: Sequence[int]) -> bool:
        return all(sum(a * b for a, b in zip(c.row, u)) % self.m == 0 for c in self.constraints)

    def character_value(self, u: Sequence[int], cls: int, x: Permutation) -> int:
        return self.components[cls].evaluate(self.block(u, cls), x)

    def describe(self) -> list[str]:
        lines = []
        for cls, comp in enumerate(self.components):
            lines.append(f"class {cls} {self.table.class_reps[cls].label()}: "
                         f"Hom = {comp.group} (automizer order {comp.quotient.order})")
        return lines


def reduced_tuple_group(G: FiniteGroup, p: int, m: int | None = None,
                        table: SubgroupClassTable | None = None) -> TupleGroup:
    table = table if table is not None else p_subgroup_classes(G, p)
    m = m if m is not None else p - 1
    comps = tuple_components(table, m)
    cons = coherence_constraints(G, p, table, m, comps)
    moduli = [g for comp in comps for g in comp.moduli]
    n = len(moduli)
    if n == 0:
        return TupleGroup(table, m, comps, cons, FiniteAbelianGroup(()), [], [])
    # K = solutions in Z^n, R = the trivial tuples g_i Z; the group is K/R
    B = solve_mixed_system(n, [], [(c.row, m) for c in cons])
    Binv = rational_inverse(B)
    X = [[g * v for v in row] for g, row in zip(moduli, Binv)]
    if any(v.denominator != 1 for row in X for v in row):  # pragma: no cover
        raise RuntimeError("trivial tuples do not lie in the solution lattice")
    X = [[int(v) for v in row] for row in X]
    sf = smith(X)
    Vinv = integer_inverse(sf.V)
    diag = sf.diagonal
    basis, orders = [], []
    for j, s in enumerate(diag):
        if s > 1:
            w = matmul([Vinv[j]], B)[0]
            basis.append(tuple(v % g for v, g in zip(w, moduli)))
            orders.append(s)
    group = FiniteAbelianGroup(tuple(s for s in diag if s > 1))
    ell = group.exponent
    if group.invariants and is_prime(ell) and all(g == ell for g in moduli):
        R, _ = rref_mod([list(b) for b in basis], ell)
        basis = [tuple(r) for r in R]
        orders = [ell] * len(basis)
    return TupleGroup(table, m, comps, cons, group, basis, orders)
