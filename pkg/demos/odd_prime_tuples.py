"""Character tuples for the normalizer of a rank-two 3-subgroup in S_6.

At odd p the unit group of the trivial source ring splits off a group of
coherent character tuples.  This walks through its construction for
N = N_{S_6}(<(1 2 3), (4 5 6)>): the Hom components, the coherence rows
that tie them together, and the resulting finite abelian group, which is
compared with the number c of cyclic 3-subgroup classes.

    python3 demos/odd_prime_tuples.py
"""
from lefschetz import parse_family, p_subgroup_classes
from lefschetz.tuples import min_generators, reduced_tuple_group
from lefschetz.verdict import lefschetz_verdict

G = parse_family("s2p_normalizer:3")
T = p_subgroup_classes(G, 3)
R = reduced_tuple_group(G, 3, 2, T)

print(f"|G| = {G.order}; classes of 3-subgroups: {len(T)}, cyclic: {T.c}")
for line in R.describe():
    print("  " + line)

print(f"\n{len(R.constraints)} coherence rows after deduplication:")
for c in R.constraints:
    print(f"  class {c.p_class} at x = {c.x}  ==  class {c.q_class} at y = {c.y}")

print(f"\nreduced tuple group: {R.group}, needs {min_generators(R.group)} generators")
for b, o in zip(R.basis, R.basis_orders):
    print(f"  generator of order {o}: " +
          ", ".join(f"class {k}: {R.block(b, k)}" for k in range(len(T)) if R.block(b, k)))

v = lefschetz_verdict(G, 3, table=T)
print(f"\nverdict: {v.outcome}")
for name, evidence in v.reasons:
    print(f"  {name}: {evidence}")
