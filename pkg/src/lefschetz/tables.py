"""Reference data for dihedral 2-groups and the table renderings.

Columns follow the order ``1, K1, K2, Z, H1, H2, C4, D8`` for ``D_8``:
``Z`` is the centre, ``H1`` and ``H2`` are the two Klein four subgroups
and ``K_i`` is the class of non-central involutions inside ``H_i``.  When
the ambient group fuses one non-central class with the centre, that class
is called ``K1``.

The published unit table for ``D_8`` repeats the labels ``K1, K2`` over
the columns that hold ``H1, H2``; the fixture below uses the column order
of the integer table (the two Klein four subgroups), which is what the
values fit.
"""
from __future__ import annotations

from typing import Sequence

from .borel_smith import borel_smith_lattice
from .families import named_group
from .intlinalg import IntegerLattice, hnf, lattice_equal, rref_mod
from .perm import Subgroup
from .structure import SubgroupClassTable, is_dihedral, p_subgroup_classes
from .units import stable_unit_space, unit_space

D8_COLUMNS = ("1", "K1", "K2", "Z", "H1", "H2", "C4", "D8")
D2N_COLUMNS = ("1", "K1", "K2", "Z")

# integer basis of the Borel-Smith functions of D_8 (faithful constituents)
CFB_D8_REFERENCE: dict[str, tuple[int, ...]] = {
    "f_D8": (1, 1, 1, 1, 1, 1, 1, 1),
    "f_H1": (1, 1, 0, 1, 1, 0, 0, 0),
    "f_H2": (1, 0, 1, 1, 0, 1, 0, 0),
    "f_C4": (1, 0, 0, 1, 0, 0, 1, 0),
    "f_1": (2, 1, 1, 0, 0, 0, 0, 0),
}

# GF(2) basis of the Burnside units of D_8 as mark vectors; columns 5 and 6
# are H1 and H2 (see the module docstring)
UNITS_D8_REFERENCE: dict[str, tuple[int, ...]] = {
    "u_D8": (-1, -1, -1, -1, -1, -1, -1, -1),
    "u_H1": (-1, -1, 1, -1, -1, 1, 1, 1),
    "u_H2": (-1, 1, -1, -1, 1, -1, 1, 1),
    "u_C4": (-1, 1, 1, -1, 1, 1, -1, 1),
    "u_1": (1, -1, -1, 1, 1, 1, 1, 1),
}


def cfb_d2n_reference(n: int) -> dict[str, tuple[int, ...]]:
    """Rows at the subgroups of order at most 2, for ``D_{2^n}`` with ``n >= 4``."""
    if n < 4:
        raise ValueError("the truncated dihedral tables need n >= 4")
    rows = {"f_D": (1, 1, 1, 1), "f_H1": (1, 1, 0, 1), "f_H2": (1, 0, 1, 1),
            f"f_C{2 ** (n - 1)}": (1, 0, 0, 1)}
    for i in range(n - 3, 0, -1):
        rows[f"f_C{2 ** i}"] = (2, 1, 1, 2)
    rows["f_1"] = (2, 1, 1, 0)
    return rows


def units_d2n_reference(n: int) -> dict[str, tuple[int, ...]]:
    if n < 4:
        raise ValueError("the truncated dihedral tables need n >= 4")
    rows = {"u_D": (-1, -1, -1, -1), "u_H1": (-1, -1, 1, -1), "u_H2": (-1, 1, -1, -1),
            f"u_C{2 ** (n - 1)}": (-1, 1, 1, -1)}
    for i in range(n - 3, 0, -1):
        rows[f"u_C{2 ** i}"] = (1, -1, -1, 1)
    rows["u_1"] = (1, -1, -1, 1)
    return rows


# -- labelling a dihedral Sylow subgroup -------------------------------------

def _center(S: Subgroup) -> frozenset:
    return frozenset(z for z in S.elements if all(z * s == s * z for s in S.generators))


def dihedral_labels(table: SubgroupClassTable) -> dict[str, int]:
    """S-class indices of ``1, K1, K2, Z, H1, H2, C<2^(n-1)>, D`` (and ``C4`` for D_8)."""
    S = table.sylow
    if table.p != 2 or not is_dihedral(S) or S.order < 8:
        raise ValueError("dihedral labels need a dihedral Sylow 2-subgroup of order >= 8")
    reps = table.s_class_reps
    Z = _center(S)
    z_cls = next(s for s, H in enumerate(reps) if H.elements == Z)
    invol = [s for s, H in enumerate(reps) if H.order == 2 and s != z_cls]
    fused = [s for s in invol if table.s_to_g[s] == table.s_to_g[z_cls]]
    k1 = fused[0] if fused else invol[0]
    k2 = next(s for s in invol if s != k1)
    half = S.order // 2

    def containing(k: int) -> int:
        K = reps[k]
        return next(s for s, H in enumerate(reps) if H.order == half and not H.is_cyclic()
                    and any(K.conjugate_elements(g) <= H.elements for g in S.elements))

    labels = {"1": 0, "K1": k1, "K2": k2, "Z": z_cls, "H1": containing(k1), "H2": containing(k2)}
    labels[f"C{half}"] = next(s for s, H in enumerate(reps) if H.order == half and H.is_cyclic())
    labels["D"] = len(reps) - 1
    return labels


def d8_column_order(table: SubgroupClassTable) -> list[int]:
    lab = dihedral_labels(table)
    if table.sylow.order != 8:
        raise ValueError("the full column order is defined for D_8 only")
    return [lab[c] for c in ("1", "K1", "K2", "Z", "H1", "H2", "C4", "D")]


def reorder(rows: Sequence[Sequence[int]], columns: Sequence[int]) -> list[list[int]]:
    return [[row[c] for c in columns] for row in rows]


def from_d8_order(table: SubgroupClassTable, rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of :func:`reorder` for the D_8 column order."""
    cols = d8_column_order(table)
    out = []
    for row in rows:
        v = [0] * len(cols)
        for pos, c in enumerate(cols):
            v[c] = row[pos]
        out.append(v)
    return out


def faithful_constituent_basis(table: SubgroupClassTable) -> dict[str, tuple[int, ...]]:
    """The inflated faithful Borel-Smith functions of a dihedral 2-group, on S-classes.

    ``f_N`` for ``N`` in ``S, H1, H2, C_{2^(n-1)}`` is the indicator of
    the subgroups of ``N``; for ``N = C_{2^i}`` with ``S/N`` dihedral of
    order at least 8 it takes the value 2 below ``N``, 1 on subgroups
    whose image in ``S/N`` is a non-central subgroup of order 2, and 0
    elsewhere.
    """
    S = table.sylow
    lab = dihedral_labels(table)
    reps = table.s_class_reps
    half = S.order // 2
    out: dict[str, tuple[int, ...]] = {}
    for name in ("D", "H1", "H2", f"C{half}"):
        N = reps[lab[name]].elements
        out[f"f_{name}"] = tuple(int(Q.elements <= N) for Q in reps)
    rot = reps[lab[f"C{half}"]]
    r = next(x for x in rot.elements if x.order() == half)
    order = half // 4
    while order >= 1:
        N = frozenset(r ** (k * (half // order)) for k in range(order))
        vals = []
        for Q in reps:
            if Q.elements <= N:
                vals.append(2)
                continue
            QN = frozenset(q * n for q in Q.elements for n in N)
            if len(QN) == 2 * len(N):
                q = next(x for x in Q.elements if x not in N)
                central = all(s * q * s.inverse() * q.inverse() in N for s in S.generators)
                vals.append(0 if central else 1)
            else:
                vals.append(0)
        out[f"f_C{order}" if order > 1 else "f_1"] = tuple(vals)
        order //= 2
    return out


# -- renderings --------------------------------------------------------------

TABLE_NAMES = ("cfb-d8", "units-d8", "cfb-d2n:N", "units-d2n:N")


def _parse_name(name: str) -> tuple[str, int]:
    if name in ("cfb-d8", "units-d8"):
        return name.split("-")[0], 3
    base, _, n = name.partition(":")
    if base in ("cfb-d2n", "units-d2n") and n.isdigit():
        if int(n) < 4:
            raise ValueError("d2n tables need n >= 4")
        return base.split("-")[0], int(n)
    raise ValueError(f"unknown table {name!r}; expected one of {', '.join(TABLE_NAMES)}")


def table_data(name: str) -> dict:
    """Named constituent rows in reference column order, checked two ways.

    ``matches_reference`` holds when the constituents span exactly the
    computed lattice (or unit space) and the displayed rows span the same
    lattice (or space) as the reference rows.  Bases are not unique, so
    nothing is compared entrywise.
    """
    kind, n = _parse_name(name)
    G = named_group("dihedral", [2 ** n])
    table = p_subgroup_classes(G, 2)
    lab = dihedral_labels(table)
    if n == 3:
        cols, headers = d8_column_order(table), list(D8_COLUMNS)
    else:
        cols, headers = [lab[c] for c in D2N_COLUMNS], list(D2N_COLUMNS)
    basis = faithful_constituent_basis(table)
    if n == 3:
        basis = {("f_D8" if k == "f_D" else k): v for k, v in basis.items()}
    if kind == "cfb":
        lattice = borel_smith_lattice(table, "S")
        spans = hnf(list(basis.values()), lattice.dim) == lattice.hnf
        shown = {k: [v[c] for c in cols] for k, v in basis.items()}
        ref = CFB_D8_REFERENCE if n == 3 else cfb_d2n_reference(n)
        extra = {"rank": lattice.rank}
    else:
        space = unit_space(table)
        bits = [[v % 2 for v in row] for row in basis.values()]
        spans = rref_mod(bits, 2)[0] == [list(r) for r in space.basis]
        shown = {"u" + k[1:]: [-1 if v[c] % 2 else 1 for c in cols] for k, v in basis.items()}
        ref = UNITS_D8_REFERENCE if n == 3 else units_d2n_reference(n)
        extra = {"dimension": space.dim}
    if kind == "cfb":
        same = hnf(list(shown.values())) == hnf([list(v) for v in ref.values()])
    else:
        as_bits = lambda rows: rref_mod([[int(x < 0) for x in r] for r in rows], 2)[0]
        same = as_bits(shown.values()) == as_bits(ref.values())
    match = spans and same
    return {"table": name, "columns": headers, **extra, "rows": shown,
            "spans_computed": spans, "matches_reference": match}


def render_table(name: str) -> str:
    data = table_data(name)
    width = max(3, *(len(c) for c in data["columns"]))
    label = max(len(k) for k in data["rows"])
    head = " " * label + " " + " ".join(c.rjust(width) for c in data["columns"])
    lines = [f"# {name}: " + (f"rank {data['rank']}" if "rank" in data
                              else f"dimension {data['dimension']}"), head]
    lines += [k.ljust(label) + " " + " ".join(str(v).rjust(width) for v in row)
              for k, row in data["rows"].items()]
    lines.append(f"# span equals reference basis: {'yes' if data['matches_reference'] else 'no'}")
    return "\n".join(lines)


def stable_lattice_in_d8_order(G, table: SubgroupClassTable | None = None) -> IntegerLattice:
    """The G-stable Borel-Smith lattice of a group with Sylow D_8, lifted to S-classes."""
    table = table if table is not None else p_subgroup_classes(G, 2)
    L = borel_smith_lattice(table, "G")
    lifted = [[row[g] for g in table.s_to_g] for row in L.rows]
    return IntegerLattice.span(reorder(lifted, d8_column_order(table)), 8)


def stable_units_in_d8_order(G, table: SubgroupClassTable | None = None) -> list[list[int]]:
    table = table if table is not None else p_subgroup_classes(G, 2)
    U = stable_unit_space(table)
    return rref_mod(reorder(U.basis, d8_column_order(table)), 2)[0]


__all__ = ["CFB_D8_REFERENCE", "UNITS_D8_REFERENCE", "cfb_d2n_reference", "units_d2n_reference",
           "dihedral_labels", "d8_column_order", "faithful_constituent_basis", "table_data",
           "render_table", "stable_lattice_in_d8_order", "stable_units_in_d8_order",
           "lattice_equal", "TABLE_NAMES"]
