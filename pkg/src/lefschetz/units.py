"""Unit groups of Burnside rings of p-groups, seen through their marks.

For a 2-group the units are exactly the signs ``(-1)^f`` of Borel-Smith
functions, so the unit group is taken to be the image of the dimension
map on the Borel-Smith lattice; for odd p it is ``{+1, -1}``.  Signs are
handled as bit vectors over GF(2) (``-1`` is bit 1).

The G-stable units are the sign vectors constant on G-classes; at the
level of mark vectors this is the same thing as the units of the ring of
G-stable elements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .borel_smith import borel_smith_lattice, trace_to_stable
from .errors import NoLift
from .intlinalg import nullspace_mod, rref_mod, solve_mod
from .perm import FiniteGroup, is_p_power
from .structure import SubgroupClassTable, controls_fusion, normalizer, p_subgroup_classes
from .superclass import SignFunction, SuperclassFunction, SylowLevelFunction, dim_function


@dataclass(frozen=True, eq=False)
class SignSpace:
    """A GF(2)-subspace of sign functions, stored in reduced row echelon form."""

    table: SubgroupClassTable
    scope: str
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...] = field(default=())

    @classmethod
    def span(cls, table: SubgroupClassTable, scope: str,
             vectors: Sequence[Sequence[int]]) -> SignSpace:
        R, piv = rref_mod([list(v) for v in vectors], 2) if vectors else ([], [])
        return cls(table, scope, tuple(tuple(r) for r in R), tuple(piv))

    @property
    def ambient(self) -> int:
        return len(self.table.s_reps) if self.scope == "S" else len(self.table.g_reps)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return 2 ** self.dim

    def signs(self) -> list[SignFunction]:
        return [SignFunction.from_bits(self.table, row, self.scope) for row in self.basis]

    def __contains__(self, u: SignFunction | Sequence[int]) -> bool:
        bits = u.bits if isinstance(u, SignFunction) else tuple(u)
        return solve_mod(self.basis, bits, 2) is not None

    def __eq__(self, other) -> bool:
        return (isinstance(other, SignSpace) and other.scope == self.scope
                and other.basis == self.basis)

    def __hash__(self) -> int:
        return hash((self.scope, self.basis))

    def __le__(self, other: SignSpace) -> bool:
        return all(row in other for row in self.basis)


def unit_space(table: SubgroupClassTable) -> SignSpace:
    """Units of the Burnside ring of the Sylow subgroup, on S-classes."""
    n = len(table.s_reps)
    if table.p != 2:
        return SignSpace.span(table, "S", [[1] * n])
    lattice = borel_smith_lattice(table, "S")
    return SignSpace.span(table, "S", [[v % 2 for v in row] for row in lattice.rows])


def unit_group_of_p_group(S: FiniteGroup, p: int) -> SignSpace:
    if not is_p_power(S.order, p):
        raise ValueError(f"group of order {S.order} is not a {p}-group")
    return unit_space(p_subgroup_classes(S, p))


def stable_sign_subspace(space: SignSpace, G: FiniteGroup | None = None) -> SignSpace:
    """Elements of ``space`` that are constant on G-classes."""
    table = space.table
    if G is not None and G is not table.group:
        raise ValueError("space belongs to a different group")
    if space.scope == "G":
        return space
    B = space.basis
    pairs = []
    first: dict[int, int] = {}
    for s, g in enumerate(table.s_to_g):
        if g in first:
            pairs.append((first[g], s))
        else:
            first[g] = s
    if not B:
        return space
    # linear conditions on coordinates c: sum_i c_i (B_i[a] - B_i[b]) = 0
    rows = [[(b[a] - b[c]) % 2 for b in B] for a, c in pairs]
    coords = nullspace_mod(rows, len(B), 2) if rows else [[int(i == j) for j in range(len(B))]
                                                         for i in range(len(B))]
    vectors = [[sum(c * b[k] for c, b in zip(cv, B)) % 2 for k in range(len(B[0]))]
               for cv in coords]
    return SignSpace.span(table, "S", vectors)


def stable_unit_space(table: SubgroupClassTable) -> SignSpace:
    return stable_sign_subspace(unit_space(table))


def dimension_image(table: SubgroupClassTable) -> SignSpace:
    """Span of ``dim(f)`` over the G-stable Borel-Smith lattice, on S-classes."""
    lattice = borel_smith_lattice(table, "G")
    vectors = [[row[g] % 2 for g in table.s_to_g] for row in lattice.rows]
    return SignSpace.span(table, "S", vectors)


@dataclass(frozen=True, eq=False)
class P2Result:
    surjective: bool
    image: SignSpace
    stable_units: SignSpace
    preimages: tuple[SuperclassFunction, ...]
    missing: SignFunction | None


def p2_surjectivity(G: FiniteGroup, table: SubgroupClassTable | None = None) -> P2Result:
    """Compare ``dim(CF_b(G, 2))`` with the G-stable units of ``B(S)``."""
    table = table if table is not None else p_subgroup_classes(G, 2)
    if table.p != 2:
        raise ValueError("p2_surjectivity needs the class table at p = 2")
    D = dimension_image(table)
    U = stable_unit_space(table)
    if not D <= U:  # pragma: no cover - stable functions give stable signs
        raise RuntimeError("dimension image is not contained in the stable units")
    if D.dim == U.dim:
        pre = tuple(lift_unit(u, table=table) for u in U.signs())
        return P2Result(True, D, U, pre, None)
    missing = next(u for u in U.signs() if u not in D)
    return P2Result(False, D, U, (), missing)


def _as_g_bits(u: SignFunction, table: SubgroupClassTable) -> list[int]:
    if u.scope == "G":
        return list(u.bits)
    bits: dict[int, int] = {}
    for s, g in enumerate(table.s_to_g):
        if bits.setdefault(g, u.bits[s]) != u.bits[s]:
            raise NoLift("no lift: sign function is not G-stable")
    return [bits[g] for g in range(len(table.g_reps))]


def lift_unit(u: SignFunction, G: FiniteGroup | None = None,
              table: SubgroupClassTable | None = None) -> SuperclassFunction:
    """A G-stable Borel-Smith function ``f`` with ``dim(f) == u``."""
    table = table if table is not None else u.table
    if G is not None and G is not table.group:
        raise ValueError("sign function belongs to a different group")
    target = _as_g_bits(u, table)
    lattice = borel_smith_lattice(table, "G")
    B = lattice.rows
    coeffs = solve_mod([[v % 2 for v in row] for row in B], target, 2)
    if coeffs is not None:
        values = [sum(c * row[k] for c, row in zip(coeffs, B)) for k in range(lattice.dim)]
        return SuperclassFunction(table, tuple(values))
    # fall back on the Sylow level, made stable by the trace over N_G(S)/S
    N = normalizer(table.group, table.sylow)
    if controls_fusion(table.group, N, table.sylow, table):
        s_bits = [target[g] for g in table.s_to_g]
        BS = borel_smith_lattice(table, "S").rows
        cs = solve_mod([[v % 2 for v in row] for row in BS], s_bits, 2)
        if cs is not None:
            values = [sum(c * row[k] for c, row in zip(cs, BS)) for k in range(len(s_bits))]
            f = trace_to_stable(SylowLevelFunction(table, tuple(values)))
            g = f.descend()
            if list(dim_function(g).bits) == target:
                return g
    raise NoLift("no lift: sign function is not in the image of the dimension map")
