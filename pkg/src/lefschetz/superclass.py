"""Functions on classes of p-subgroups: superclass functions, signs, marks.

Two index sets are in play.  A :class:`SuperclassFunction` has one value
per G-class of p-subgroups (the classes of ``table.class_reps``), while a
:class:`SylowLevelFunction` has one value per S-class of subgroups of the
Sylow subgroup.  Passing between them is explicit: ``lift`` is always
possible, ``descend`` only for G-stable functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotBorelSmith
from .perm import FiniteGroup, Subgroup
from .structure import SubgroupClassTable


def _check_length(values: Sequence, expected: int, what: str) -> None:
    if len(values) != expected:
        raise ValueError(f"{what} needs {expected} values, got {len(values)}")


@dataclass(frozen=True, eq=False)
class SuperclassFunction:
    """Integer values on the G-classes of p-subgroups."""

    table: SubgroupClassTable
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        _check_length(self.values, len(self.table.g_reps), "superclass function")

    scope = "G"

    def __getitem__(self, cls: int) -> int:
        return self.values[cls]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SuperclassFunction) and other.table is self.table
                and other.values == self.values)

    def __hash__(self) -> int:
        return hash(self.values)

    def __add__(self, other: SuperclassFunction) -> SuperclassFunction:
        return SuperclassFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: SuperclassFunction) -> SuperclassFunction:
        return SuperclassFunction(self.table, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> SuperclassFunction:
        return SuperclassFunction(self.table, tuple(-a for a in self.values))

    def __mul__(self, k: int) -> SuperclassFunction:
        return SuperclassFunction(self.table, tuple(k * a for a in self.values))

    __rmul__ = __mul__

    def at(self, H: Subgroup) -> int:
        """Value at an arbitrary p-subgroup (located up to G-conjugacy)."""
        return self.values[self.table.locate(H)[0]]

    def lift(self) -> SylowLevelFunction:
        """The same function viewed on S-classes."""
        return SylowLevelFunction(self.table, tuple(self.values[g] for g in self.table.s_to_g))

    @classmethod
    def constant(cls, table: SubgroupClassTable, value: int) -> SuperclassFunction:
        return cls(table, (value,) * len(table.g_reps))


@dataclass(frozen=True, eq=False)
class SylowLevelFunction:
    """Integer values on the S-classes of subgroups of the Sylow subgroup."""

    table: SubgroupClassTable
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        _check_length(self.values, len(self.table.s_reps), "Sylow-level function")

    scope = "S"

    def __getitem__(self, cls: int) -> int:
        return self.values[cls]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SylowLevelFunction) and other.table is self.table
                and other.values == self.values)

    def __hash__(self) -> int:
        return hash(self.values)

    def __add__(self, other: SylowLevelFunction) -> SylowLevelFunction:
        return SylowLevelFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: SylowLevelFunction) -> SylowLevelFunction:
        return SylowLevelFunction(self.table, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, k: int) -> SylowLevelFunction:
        return SylowLevelFunction(self.table, tuple(k * a for a in self.values))

    __rmul__ = __mul__

    def at_index(self, i: int) -> int:
        """Value at ``table.subgroups[i]``."""
        return self.values[self.table.s_class_of[i]]

    def descend(self) -> SuperclassFunction:
        """View a G-stable function on G-classes; raises if it is not stable."""
        stable, pair = is_G_stable(self)
        if not stable:
            raise ValueError(f"function is not G-stable: S-classes {pair} fuse but differ")
        out = [0] * len(self.table.g_reps)
        for s, g in enumerate(self.table.s_to_g):
            out[g] = self.values[s]
        return SuperclassFunction(self.table, tuple(out))


@dataclass(frozen=True, eq=False)
class SignFunction:
    """A ``+1``/``-1`` value per class; ``scope`` is ``"G"`` or ``"S"``."""

    table: SubgroupClassTable
    signs: tuple[int, ...]
    scope: str = "G"

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError("sign functions take values +1 and -1 only")
        object.__setattr__(self, "signs", signs)
        n = len(self.table.g_reps) if self.scope == "G" else len(self.table.s_reps)
        _check_length(signs, n, "sign function")

    @classmethod
    def from_bits(cls, table: SubgroupClassTable, bits: Iterable[int], scope: str = "G") -> SignFunction:
        return cls(table, tuple(-1 if b % 2 else 1 for b in bits), scope)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(1 if s < 0 else 0 for s in self.signs)

    def __mul__(self, other: SignFunction) -> SignFunction:
        return SignFunction(self.table, tuple(a * b for a, b in zip(self.signs, other.signs)),
                            self.scope)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SignFunction) and other.scope == self.scope
                and other.signs == self.signs)

    def __hash__(self) -> int:
        return hash((self.scope, self.signs))

    def __len__(self) -> int:
        return len(self.signs)

    def lift(self) -> SignFunction:
        if self.scope == "S":
            return self
        return SignFunction(self.table, tuple(self.signs[g] for g in self.table.s_to_g), "S")


def mark_function(G: FiniteGroup, K: Subgroup, table: SubgroupClassTable) -> SuperclassFunction:
    """Fixed-point counts of each class representative on ``G/K``."""
    if not K.elements <= G.elements:
        raise ValueError("K is not a subgroup of G")
    reps = []
    seen: set = set()
    for g in G.sorted_elements:
        if g in seen:
            continue
        reps.append(g)
        seen.update(g * k for k in K.elements)
    values = []
    for P in table.class_reps:
        gens = P.generators
        # P fixes gK  iff  g^-1 P g <= K
        count = sum(1 for g in reps
                    if all(x.conjugate(g.inverse()) in K.elements for x in gens))
        values.append(count)
    return SuperclassFunction(table, tuple(values))


def dim_function(f: SuperclassFunction | SylowLevelFunction) -> SignFunction:
    """Pointwise ``(-1)^f``."""
    return SignFunction(f.table, tuple(-1 if v % 2 else 1 for v in f.values), f.scope)


def is_G_stable(f: SylowLevelFunction, G: FiniteGroup | None = None
                ) -> tuple[bool, tuple[int, int] | None]:
    """Whether ``f`` is constant on G-classes; otherwise a violating pair of S-classes."""
    table = f.table
    if G is not None and G is not table.group:
        raise ValueError("function belongs to a different group")
    first: dict[int, int] = {}
    for s, g in enumerate(table.s_to_g):
        if g in first:
            if f.values[first[g]] != f.values[s]:
                return False, (first[g], s)
        else:
            first[g] = s
    return True, None


def is_G_stable_on_cyclics(f: SylowLevelFunction) -> bool:
    table = f.table
    first: dict[int, int] = {}
    for s, g in enumerate(table.s_to_g):
        if not table.s_cyclic_flags[s]:
            continue
        if g in first and f.values[first[g]] != f.values[s]:
            return False
        first.setdefault(g, s)
    return True


def stable_from_cyclics_check(f: SylowLevelFunction, G: FiniteGroup | None = None) -> bool:
    """Check one instance of "stable on cyclic subgroups implies stable".

    Returns full G-stability.  Raises if ``f`` is not Borel-Smith, and
    raises ``AssertionError`` if the instance fails (which would point at
    an enumeration bug).
    """
    from .borel_smith import check_borel_smith

    ok, violations = check_borel_smith(f)
    if not ok:
        raise NotBorelSmith(f"not a Borel-Smith function: {violations[0].describe()}")
    stable, _ = is_G_stable(f, G)
    if is_G_stable_on_cyclics(f):
        assert stable, "stable on cyclic subgroups but not stable"
    return stable
