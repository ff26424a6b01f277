"""Kernel membership for groups with a cyclic Sylow subgroup.

An h-mark function lies in the kernel exactly when it is even-valued and
all of its values agree modulo the period 2|Aut_G(S)|.  The script lists
a few Borel-Smith candidates for S_3 and S_5 and checks that the general
necessary test gives the same answers.

    python3 demos/cyclic_kernel.py
"""
from itertools import product

from lefschetz import parse_family, p_subgroup_classes
from lefschetz.superclass import SuperclassFunction
from lefschetz.verdict import (HMarkCandidate, kernel_membership_cyclic, kernel_necessary,
                               period_cyclic)

for spec, p in (("symmetric:3", 3), ("symmetric:5", 5)):
    G = parse_family(spec)
    T = p_subgroup_classes(G, p)
    period = period_cyclic(G, p, T)
    print(f"{spec} at p = {p}: period {period}")
    for a, b in product(range(0, 10, 2), repeat=2):
        cand = HMarkCandidate(SuperclassFunction(T, (a, b)))
        exact = kernel_membership_cyclic(G, p, cand, T)
        general = kernel_necessary(G, p, cand, T)
        assert exact.holds == general.holds
        if b == 0:
            print(f"  h = ({a}, {b}): {'in kernel' if exact.holds else 'not in kernel'}")
    print()
