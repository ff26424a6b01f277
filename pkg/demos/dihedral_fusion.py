"""Two fusion patterns on a dihedral Sylow 2-subgroup.

S_4 and A_6 both have Sylow 2-subgroups isomorphic to D_8, but they fuse
different subgroups.  This script prints the Borel-Smith lattice of D_8,
then shows how each ambient group cuts it down and that the dimension
map still reaches every stable unit.

    python3 demos/dihedral_fusion.py
"""
from lefschetz import parse_family, p_subgroup_classes
from lefschetz.tables import (D8_COLUMNS, dihedral_labels, render_table,
                              stable_lattice_in_d8_order, stable_units_in_d8_order)
from lefschetz.units import p2_surjectivity


def show_rows(title, rows, signs=False):
    print(title)
    print("      " + " ".join(f"{c:>3}" for c in D8_COLUMNS))
    for r in rows:
        vals = [-1 if b else 1 for b in r] if signs else r
        print("      " + " ".join(f"{v:>3}" for v in vals))


print(render_table("cfb-d8"))
print()

for spec in ("symmetric:4", "alternating:6"):
    G = parse_family(spec)
    T = p_subgroup_classes(G, 2)
    lab = dihedral_labels(T)
    fused = sorted({name for name, s in lab.items()
                    if name != "Z" and T.s_to_g[s] == T.s_to_g[lab["Z"]]})
    print(f"{spec}: |G| = {G.order}, {len(T)} classes of 2-subgroups, c = {T.c}")
    print(f"  classes fused with the centre: {fused or 'none'}")
    show_rows("  stable Borel-Smith lattice (HNF):", stable_lattice_in_d8_order(G, T).rows)
    show_rows("  stable units (reduced basis):", stable_units_in_d8_order(G, T), signs=True)
    res = p2_surjectivity(G, T)
    print(f"  dim image {res.image.dim} of {res.stable_units.dim} stable units: "
          f"{'surjective' if res.surjective else 'not surjective'}")
    print()
