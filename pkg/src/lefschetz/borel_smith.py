"""Borel-Smith conditions and the lattice of Borel-Smith functions.

The conditions are enumerated over chains of subgroups of the fixed Sylow
subgroup S.  Variables are either S-classes (giving CF_b(S)) or G-classes
(giving the G-stable part, which is CF_b(G, p)).  The mixed system of
congruences and equalities is solved exactly with one Smith normal form.

Condition (b) for p = 2 is read with the quotient ``L/H`` being cyclic of
order 4 or quaternion of order 8 and ``K/H`` its unique subgroup of order
2.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import ExtensionError, NotBorelSmith
from .intlinalg import IntegerLattice, rational_inverse, solve_mixed_system
from .perm import FiniteGroup
from .structure import (SubgroupClassTable, normalizer, p_subgroup_classes, quotient,
                        small_group_shape)
from .superclass import SuperclassFunction, SylowLevelFunction

SCOPES = ("S", "G")


@dataclass(frozen=True)
class ConstraintRow:
    """One linear condition ``coeffs . f == 0`` (mod ``modulus`` when nonzero).

    ``chain`` holds indices into ``table.subgroups``: ``(R, Q)`` for
    conditions (a) and (c), ``(H, K, L)`` for condition (b).
    """

    kind: str
    coeffs: tuple[int, ...]
    modulus: int
    chain: tuple[int, ...]

    def evaluate(self, values: Sequence[int]) -> int:
        return sum(c * v for c, v in zip(self.coeffs, values))

    def holds(self, values: Sequence[int]) -> bool:
        s = self.evaluate(values)
        return s % self.modulus == 0 if self.modulus else s == 0

    def describe(self, table: SubgroupClassTable | None = None) -> str:
        if table is not None:
            names = " < ".join(table.subgroups[i].label() for i in self.chain)
        else:
            names = " < ".join(f"#{i}" for i in self.chain)
        terms = " ".join(f"{c:+d}*x{j}" for j, c in enumerate(self.coeffs) if c)
        rel = f"== 0 mod {self.modulus}" if self.modulus else "== 0"
        return f"({self.kind}) {names}: {terms} {rel}"


@dataclass(frozen=True, eq=False)
class BSConstraintSystem:
    table: SubgroupClassTable
    scope: str
    rows: tuple[ConstraintRow, ...]

    @property
    def nvars(self) -> int:
        return len(self.table.s_reps) if self.scope == "S" else len(self.table.g_reps)

    @property
    def equalities(self) -> list[ConstraintRow]:
        return [r for r in self.rows if not r.modulus]

    @property
    def congruences(self) -> list[ConstraintRow]:
        return [r for r in self.rows if r.modulus]

    def violations(self, values: Sequence[int]) -> list[ConstraintRow]:
        return [r for r in self.rows if not r.holds(values)]

    def solve(self) -> IntegerLattice:
        H = solve_mixed_system(self.nvars, [r.coeffs for r in self.equalities],
                               [(r.coeffs, r.modulus) for r in self.congruences])
        return IntegerLattice(self.nvars, H, None, column_labels(self.table, self.scope))


def column_labels(table: SubgroupClassTable, scope: str) -> list[str]:
    reps = table.s_class_reps if scope == "S" else table.class_reps
    return [H.label() for H in reps]


def _var_map(table: SubgroupClassTable, scope: str) -> list[int]:
    if scope not in SCOPES:
        raise ValueError(f"scope must be 'S' or 'G', got {scope!r}")
    return table.s_class_of if scope == "S" else table.g_class_of


_CACHE: "weakref.WeakKeyDictionary[SubgroupClassTable, dict]" = weakref.WeakKeyDictionary()


def build_constraints(table: SubgroupClassTable, scope: str = "S") -> BSConstraintSystem:
    cache = _CACHE.setdefault(table, {})
    if scope in cache:
        return cache[scope]
    vmap = _var_map(table, scope)
    nvars = len(set(vmap))
    p = table.p
    subs = table.subgroups
    by_order: dict[int, list[int]] = {}
    for i, H in enumerate(subs):
        by_order.setdefault(H.order, []).append(i)

    rows: list[ConstraintRow] = []
    seen: set = set()
    factors = (p, p * p, 8) if p == 2 else (p, p * p)

    def emit(kind: str, terms: list[tuple[int, int]], modulus: int, chain: tuple[int, ...]):
        coeffs = [0] * nvars
        for idx, c in terms:
            coeffs[vmap[idx]] += c
        if modulus:
            coeffs = [c % modulus for c in coeffs]
        if not any(coeffs):
            return
        key = (tuple(coeffs), modulus)
        if key in seen:
            return
        seen.add(key)
        rows.append(ConstraintRow(kind, tuple(coeffs), modulus, chain))

    for r, R in enumerate(subs):
        for factor in factors:
            for q in by_order.get(R.order * factor, []):
                Q = subs[q]
                if not R.elements < Q.elements or not all(R.is_normalized_by(x) for x in Q.generators):
                    continue
                if factor == p and p != 2:
                    emit("a", [(q, 1), (r, -1)], 2, (r, q))
                    continue
                if factor == p * p and all(x ** p in R.elements for x in Q.generators) \
                        and _quotient_is_elementary(Q, R, p):
                    mids = [x for x in by_order.get(R.order * p, [])
                            if R.elements < subs[x].elements < Q.elements]
                    if len(mids) != p + 1:  # pragma: no cover - structural
                        raise RuntimeError("rank-2 section without p + 1 intermediates")
                    emit("c", [(r, 1), (q, p)] + [(x, -1) for x in mids], 0, (r, q))
                if p == 2 and factor in (4, 8):
                    Qt = quotient(Q, R)
                    shape = small_group_shape(Qt)
                    if shape not in ("cyclic-4", "quaternion-8"):
                        continue
                    inv = next(i for i in range(Qt.order) if Qt.element_order(i) == 2)
                    y = Qt.cosets[inv]
                    kelems = R.elements | frozenset(y * h for h in R.elements)
                    k = table.index[kelems]
                    emit("b", [(k, 1), (r, -1)], 2 if shape == "cyclic-4" else 4, (r, k, q))
    system = BSConstraintSystem(table, scope, tuple(rows))
    cache[scope] = system
    return system


def _quotient_is_elementary(Q, R, p) -> bool:
    # Q/R has order p^2; it is elementary abelian iff every x^p lies in R
    return all(x ** p in R.elements for x in Q.elements)


def check_borel_smith(f: SuperclassFunction | SylowLevelFunction
                      ) -> tuple[bool, list[ConstraintRow]]:
    """Evaluate every Borel-Smith condition; return ``(ok, violated rows)``."""
    system = build_constraints(f.table, f.scope)
    bad = system.violations(f.values)
    return not bad, bad


def _expected_rank(table: SubgroupClassTable, scope: str) -> int:
    return sum(table.s_cyclic_flags) if scope == "S" else table.c


def borel_smith_lattice(table: SubgroupClassTable, scope: str = "G") -> IntegerLattice:
    """Z-basis (Hermite normal form) of the Borel-Smith lattice on ``table``."""
    lattice = build_constraints(table, scope).solve()
    expected = _expected_rank(table, scope)
    if lattice.rank != expected:
        raise RuntimeError(f"Borel-Smith lattice has rank {lattice.rank}, expected {expected}")
    return lattice


def borel_smith_basis(G: FiniteGroup, p: int, scope: str = "G",
                      table: SubgroupClassTable | None = None) -> IntegerLattice:
    table = table if table is not None else p_subgroup_classes(G, p)
    return borel_smith_lattice(table, scope)


def basis_functions(lattice: IntegerLattice, table: SubgroupClassTable, scope: str
                    ) -> list[SuperclassFunction] | list[SylowLevelFunction]:
    cls = SylowLevelFunction if scope == "S" else SuperclassFunction
    return [cls(table, tuple(row)) for row in lattice.rows]


def lattice_equal(a: IntegerLattice, b: IntegerLattice) -> bool:
    from .intlinalg import lattice_equal as _eq
    return _eq(a, b)


def trace_to_stable(f: SylowLevelFunction, G: FiniteGroup | None = None) -> SylowLevelFunction:
    """Sum of the conjugates of ``f`` over ``N_G(S)/S``."""
    table = f.table
    G = G if G is not None else table.group
    S = table.sylow
    N = normalizer(G, S)
    reps = []
    seen: set = set()
    for g in sorted(N.elements):
        if g in seen:
            continue
        reps.append(g)
        seen.update(g * s for s in S.elements)
    out = []
    for P in table.s_class_reps:
        total = 0
        for g in reps:
            idx = table.index[P.conjugate_elements(g.inverse())]
            total += f.values[table.s_class_of[idx]]
        out.append(total)
    return SylowLevelFunction(table, tuple(out))


def diagonal_basis(G: FiniteGroup, p: int, table: SubgroupClassTable | None = None
                   ) -> list[SuperclassFunction]:
    """G-stable Borel-Smith functions, one per cyclic G-class, diagonal on cyclic classes.

    Rational functions ``g_j`` with ``g_j(K_i) = delta_ij`` are formed on
    the cyclic S-classes, summed over the S-classes fusing into each
    cyclic G-class, and scaled by the least common denominator of their
    coordinates in the Sylow-level lattice basis.
    """
    table = table if table is not None else p_subgroup_classes(G, p)
    lattice = borel_smith_lattice(table, "S")
    B = lattice.rows
    cyc = [s for s, flag in enumerate(table.s_cyclic_flags) if flag]
    M = [[row[s] for s in cyc] for row in B]
    # coordinates of g_j: row j of M^-1 (so that coords @ M = e_j)
    Minv = rational_inverse(M)
    out = []
    for gcls in range(len(table.g_reps)):
        if not table.cyclic_flags[gcls]:
            continue
        coords = [Fraction(0)] * len(B)
        for j, s in enumerate(cyc):
            if table.s_to_g[s] == gcls:
                coords = [a + b for a, b in zip(coords, Minv[j])]
        d = lcm(*(c.denominator for c in coords))
        ints = [int(c * d) for c in coords]
        values = [sum(c * row[k] for c, row in zip(ints, B)) for k in range(lattice.dim)]
        out.append(SylowLevelFunction(table, tuple(values)).descend())
    return out


def extend_from_cyclics(table: SubgroupClassTable, partial: Sequence[int] | dict[int, int]
                        ) -> SylowLevelFunction:
    """Extend values on the cyclic S-classes to every S-class.

    ``partial`` is either a dict ``{s_class: value}`` or a list of values
    for the cyclic S-classes in index order.  Every rank-2 section
    ``R < Q`` is used, so both divisibility and agreement between
    different sections are checked; the congruence conditions are checked
    on the result.
    """
    cyc = [s for s, flag in enumerate(table.s_cyclic_flags) if flag]
    if isinstance(partial, dict):
        given = dict(partial)
    else:
        if len(partial) != len(cyc):
            raise ValueError(f"expected {len(cyc)} cyclic values, got {len(partial)}")
        given = dict(zip(cyc, partial))
    if set(given) != set(cyc):
        raise ValueError("values must be given on exactly the cyclic S-classes")
    p = table.p
    values: dict[int, int] = dict(given)
    system = build_constraints(table, "S")
    # every rank-2 section of every subgroup, not only the deduplicated rows
    sections = _rank_two_sections(table)
    order = sorted(range(len(table.s_reps)), key=lambda s: table.s_class_reps[s].order)
    for s in order:
        if s in values:
            continue
        q = table.s_reps[s]
        found = None
        for r, mids in sections.get(q, []):
            num = sum(values[table.s_class_of[x]] for x in mids) - values[table.s_class_of[r]]
            if num % p:
                raise ExtensionError(
                    f"non-integral extension at {table.subgroups[q].label()}: {num}/{p}")
            v = num // p
            if found is not None and v != found:
                raise ExtensionError(
                    f"inconsistent extension at {table.subgroups[q].label()}: {found} vs {v}")
            found = v
        if found is None:  # pragma: no cover - non-cyclic p-groups have such sections
            raise RuntimeError("non-cyclic subgroup without a rank-2 quotient")
        values[s] = found
    f = SylowLevelFunction(table, tuple(values[s] for s in range(len(table.s_reps))))
    bad = system.violations(f.values)
    if bad:
        raise ExtensionError(f"extension violates a congruence: {bad[0].describe(table)}")
    return f


def _rank_two_sections(table: SubgroupClassTable) -> dict[int, list[tuple[int, list[int]]]]:
    p = table.p
    subs = table.subgroups
    out: dict[int, list[tuple[int, list[int]]]] = {}
    for q, Q in enumerate(subs):
        if Q.order < p * p:
            continue
        for r, R in enumerate(subs):
            if R.order * p * p != Q.order or not R.elements < Q.elements:
                continue
            if not all(R.is_normalized_by(x) for x in Q.generators):
                continue
            if not _quotient_is_elementary(Q, R, p):
                continue
            mids = [x for x, X in enumerate(subs)
                    if X.order == R.order * p and R.elements < X.elements < Q.elements]
            out.setdefault(q, []).append((r, mids))
    return out


def require_borel_smith(f: SuperclassFunction | SylowLevelFunction) -> None:
    ok, bad = check_borel_smith(f)
    if not ok:
        raise NotBorelSmith(f"not a Borel-Smith function: {bad[0].describe(f.table)}")
