import pytest
from hypothesis import given
from hypothesis import strategies as st

from lefschetz.borel_smith import borel_smith_lattice
from lefschetz.errors import NotBorelSmith
from lefschetz.perm import Subgroup
from lefschetz.structure import p_subgroup_classes
from lefschetz.superclass import (SignFunction, SuperclassFunction, SylowLevelFunction,
                                  dim_function, is_G_stable, is_G_stable_on_cyclics,
                                  mark_function, stable_from_cyclics_check)
from lefschetz.tables import CFB_D8_REFERENCE, UNITS_D8_REFERENCE, from_d8_order

from conftest import SMALL_CASES, group, table
from oracles import table_of_marks

P_GROUPS = ["cyclic:2", "cyclic:4", "elementary_abelian:2,2", "dihedral:8", "quaternion:8",
            "cyclic:9", "elementary_abelian:3,2", "dihedral:16"]


def prime_of(spec):
    return 3 if spec in ("cyclic:9", "elementary_abelian:3,2") else 2


@pytest.mark.parametrize("spec", P_GROUPS)
def test_marks_match_table_of_marks(spec):
    T = table(spec, prime_of(spec))
    reps = T.class_reps
    M = table_of_marks({tuple(x) for x in T.group.elements}, tuple(range(T.group.degree)),
                       [frozenset(tuple(x) for x in H.elements) for H in reps])
    for i, K in enumerate(reps):
        assert list(mark_function(T.group, K, T).values) == M[i]


@pytest.mark.parametrize("spec,p", SMALL_CASES)
def test_marks_are_monotone(spec, p):
    T = table(spec, p)
    G = T.group
    for K in T.class_reps:
        m = mark_function(G, K, T)
        for i, P in enumerate(T.class_reps):
            for j, Q in enumerate(T.class_reps):
                if any(P.elements <= Q.conjugate_elements(g) for g in G.elements):
                    assert m[j] <= m[i]


def test_mark_examples():
    T = table("cyclic:2", 2)
    G = T.group
    trivial = G.subgroup([])
    assert mark_function(G, trivial, T).values == (2, 0)
    assert mark_function(G, G.whole, T).values == (1, 1)
    T4 = table("symmetric:4", 2)
    m = mark_function(T4.group, T4.sylow, T4)
    assert m[len(T4) - 1] == 1
    with pytest.raises(ValueError):
        mark_function(G, group("cyclic:4").whole, T)


def test_dim_function_examples():
    T = table("dihedral:8", 2)
    assert dim_function(SuperclassFunction.constant(T, 1)).signs == (-1,) * 8
    assert dim_function(SuperclassFunction.constant(T, 0)).signs == (1,) * 8
    f1 = SylowLevelFunction(T, tuple(from_d8_order(T, [CFB_D8_REFERENCE["f_1"]])[0]))
    u1 = tuple(from_d8_order(T, [UNITS_D8_REFERENCE["u_1"]])[0])
    assert dim_function(f1).signs == u1


@pytest.mark.parametrize("spec,p", SMALL_CASES)
def test_dim_is_a_homomorphism(spec, p):
    T = table(spec, p)
    rows = borel_smith_lattice(T, "G").rows

    @given(st.lists(st.integers(-3, 3), min_size=len(rows), max_size=len(rows)),
           st.lists(st.integers(-3, 3), min_size=len(rows), max_size=len(rows)))
    def check(a, b):
        f = SuperclassFunction(T, tuple(sum(c * r[k] for c, r in zip(a, rows))
                                        for k in range(len(T))))
        g = SuperclassFunction(T, tuple(sum(c * r[k] for c, r in zip(b, rows))
                                        for k in range(len(T))))
        assert dim_function(f + g) == dim_function(f) * dim_function(g)
        assert dim_function(f).lift() == dim_function(f.lift())

    check()


def test_function_types_are_checked():
    T = table("dihedral:8", 2)
    with pytest.raises(ValueError):
        SuperclassFunction(T, (1, 2))
    with pytest.raises(ValueError):
        SignFunction(T, (1, 0, 1, 1, 1, 1, 1, 1))


def _d8_in_s4(name_or_vector):
    T = table("symmetric:4", 2)
    v = CFB_D8_REFERENCE[name_or_vector] if isinstance(name_or_vector, str) else name_or_vector
    return SylowLevelFunction(T, tuple(from_d8_order(T, [v])[0]))


def test_stability_examples_in_s4():
    T = table("symmetric:4", 2)
    assert is_G_stable(SylowLevelFunction(T, (3,) * len(T.s_reps)))[0]
    # S_4 fuses K1 with the centre, so f_H2 (0 at K1, 1 at Z) is not stable
    ok, pair = is_G_stable(_d8_in_s4("f_H2"))
    assert not ok and T.s_to_g[pair[0]] == T.s_to_g[pair[1]]
    assert is_G_stable(_d8_in_s4("f_H1"))[0]
    diff = [a - b for a, b in zip(CFB_D8_REFERENCE["f_H2"], CFB_D8_REFERENCE["f_C4"])]
    f = _d8_in_s4(diff)
    assert is_G_stable_on_cyclics(f) and is_G_stable(f)[0]
    assert stable_from_cyclics_check(f)


@pytest.mark.parametrize("name", sorted(CFB_D8_REFERENCE))
def test_lemma_instances_for_reference_rows(name):
    f = _d8_in_s4(name)
    assert stable_from_cyclics_check(f) == is_G_stable(f)[0]


def test_lemma_check_rejects_non_borel_smith():
    T = table("cyclic:3", 3)
    with pytest.raises(NotBorelSmith):
        stable_from_cyclics_check(SylowLevelFunction(T, (1, 0)))


@pytest.mark.parametrize("spec,p", SMALL_CASES)
def test_lemma_holds_on_random_borel_smith_functions(spec, p):
    T = table(spec, p)
    rows = borel_smith_lattice(T, "S").rows

    @given(st.lists(st.integers(-4, 4), min_size=len(rows), max_size=len(rows)))
    def check(coeffs):
        f = SylowLevelFunction(T, tuple(sum(c * r[k] for c, r in zip(coeffs, rows))
                                        for k in range(len(T.s_reps))))
        stable = stable_from_cyclics_check(f)
        assert stable == is_G_stable(f)[0]
        if stable:
            assert f.descend().lift() == f

    check()


def test_abelian_sylow_lemma_instance():
    # the Sylow 3-subgroup of s2p_normalizer 3 is abelian
    T = table("s2p_normalizer:3", 3)
    for row in borel_smith_lattice(T, "S").rows:
        f = SylowLevelFunction(T, tuple(row))
        assert stable_from_cyclics_check(f) == is_G_stable_on_cyclics(f)


def test_descend_rejects_unstable():
    with pytest.raises(ValueError):
        _d8_in_s4("f_H2").descend()


def test_subgroup_lookup():
    T = table("dihedral:8", 2)
    f = SuperclassFunction(T, tuple(range(8)))
    for H in T.subgroups:
        assert f.at(H) == T.g_class_of[T.index[H.elements]]
    assert isinstance(T.sylow, Subgroup)
    assert p_subgroup_classes(T.group, 2).c == 5
