import pytest
from hypothesis import given
from hypothesis import strategies as st

from lefschetz.borel_smith import (borel_smith_lattice, build_constraints, check_borel_smith,
                                   diagonal_basis, extend_from_cyclics, lattice_equal,
                                   require_borel_smith, trace_to_stable)
from lefschetz.errors import ExtensionError, NotBorelSmith
from lefschetz.intlinalg import IntegerLattice, hnf_contains
from lefschetz.perm import Permutation
from lefschetz.superclass import SuperclassFunction, SylowLevelFunction, is_G_stable
from lefschetz.tables import CFB_D8_REFERENCE, from_d8_order

from conftest import SMALL_CASES, table
from oracles import box_solutions, naive_constraints, satisfies

SMALL_SYLOW = [c for c in SMALL_CASES if table(*c).sylow.order <= 16]


def oracle_rows(T, scope):
    """Borel-Smith conditions rebuilt subgroup by subgroup from the definitions."""
    S = [tuple(x) for x in T.sylow.elements]
    ident = tuple(range(T.group.degree))
    vmap = T.s_class_of if scope == "S" else T.g_class_of

    def class_of(H):
        return vmap[T.index[frozenset(Permutation(x) for x in H)]]
    return naive_constraints(S, ident, T.p, class_of)


def combos(rows, coeffs):
    return tuple(sum(c * r[k] for c, r in zip(coeffs, rows)) for k in range(len(rows[0])))


@pytest.mark.parametrize("spec,p", SMALL_CASES)
@pytest.mark.parametrize("scope", ["S", "G"])
def test_lattice_rank_is_number_of_cyclic_classes(spec, p, scope):
    T = table(spec, p)
    L = borel_smith_lattice(T, scope)
    expected = T.c if scope == "G" else sum(T.s_cyclic_flags)
    assert L.rank == expected


@pytest.mark.parametrize("spec,p", SMALL_SYLOW)
@pytest.mark.parametrize("scope", ["S", "G"])
def test_lattice_against_box_oracle(spec, p, scope):
    T = table(spec, p)
    L = borel_smith_lattice(T, scope)
    rows = oracle_rows(T, scope)
    for b in L.rows:
        assert satisfies(b, rows)
    lo, hi = (-2, 2) if L.dim <= 8 else (-1, 1)
    sols = box_solutions(L.dim, rows, lo, hi)
    assert sols
    for v in sols:
        assert hnf_contains(L.rows, v)


@pytest.mark.parametrize("spec,p", SMALL_SYLOW)
def test_checker_agrees_with_naive_conditions(spec, p):
    T = table(spec, p)
    rows = oracle_rows(T, "S")
    n = len(T.s_reps)

    @given(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    def check(values):
        ok, bad = check_borel_smith(SylowLevelFunction(T, tuple(values)))
        assert ok == satisfies(values, rows)
        assert all(not r.holds(values) for r in bad)

    check()


def test_constraint_examples():
    C9 = build_constraints(table("cyclic:9", 3), "S")
    assert not C9.equalities and len(C9.congruences) == 2
    assert all(r.modulus == 2 and r.kind == "a" for r in C9.rows)
    V4 = build_constraints(table("elementary_abelian:2,2", 2), "S")
    assert [(r.coeffs, r.modulus) for r in V4.rows] == [((1, -1, -1, -1, 2), 0)]
    D8 = build_constraints(table("dihedral:8", 2), "S")
    assert len(D8.equalities) == 3
    assert [r.kind for r in D8.congruences] == ["b"]
    # the top equality: f(Z) + 2 f(D8) = f(H1) + f(H2) + f(C4)
    T = table("dihedral:8", 2)
    top = [r for r in D8.equalities if r.chain[1] == T.index[T.sylow.elements]]
    assert len(top) == 1 and sorted(top[0].coeffs) == [-1, -1, -1, 0, 0, 0, 1, 2]
    assert "mod 2" in D8.congruences[0].describe(T)


def test_check_examples():
    T = table("dihedral:8", 2)
    assert check_borel_smith(SuperclassFunction.constant(T, 7))[0]
    f_c4 = SylowLevelFunction(T, tuple(from_d8_order(T, [CFB_D8_REFERENCE["f_C4"]])[0]))
    assert check_borel_smith(f_c4)[0]
    T3 = table("cyclic:3", 3)
    ok, bad = check_borel_smith(SylowLevelFunction(T3, (1, 0)))
    assert not ok and bad[0].kind == "a"
    with pytest.raises(NotBorelSmith, match="not a Borel-Smith function"):
        require_borel_smith(SylowLevelFunction(T3, (1, 0)))
    # C4 over the trivial subgroup forces an even jump
    T4 = table("cyclic:4", 2)
    assert not check_borel_smith(SylowLevelFunction(T4, (1, 0, 0)))[0]
    assert check_borel_smith(SylowLevelFunction(T4, (2, 0, 0)))[0]


@pytest.mark.parametrize("spec,p", [c for c in SMALL_CASES if c[1] != 2])
def test_odd_primes_force_constant_parity(spec, p):
    T = table(spec, p)
    for row in borel_smith_lattice(T, "S").rows:
        assert len({v % 2 for v in row}) == 1


def test_diagonal_basis_examples():
    T = table("cyclic:3", 3)
    assert [f.values for f in diagonal_basis(T.group, 3, T)] == [(2, 0), (0, 2)]
    T = table("dihedral:8", 2)
    assert len(diagonal_basis(T.group, 2, T)) == 5


@pytest.mark.parametrize("spec,p", SMALL_CASES)
def test_diagonal_basis_properties(spec, p):
    T = table(spec, p)
    D = diagonal_basis(T.group, p, T)
    cyc = [g for g in range(len(T)) if T.cyclic_flags[g]]
    assert len(D) == len(cyc)
    for j, f in enumerate(D):
        assert check_borel_smith(f)[0]
        on_cyclics = [f.values[g] for g in cyc]
        assert on_cyclics[j] > 0
        assert all(v == 0 for i, v in enumerate(on_cyclics) if i != j)


def test_extension_examples():
    T = table("elementary_abelian:2,2", 2)
    with pytest.raises(ExtensionError, match="non-integral"):
        extend_from_cyclics(T, [1, 0, 0, 0])
    assert extend_from_cyclics(T, [1, 1, 1, 1]).values == (1, 1, 1, 1, 1)
    T = table("dihedral:8", 2)
    f1 = tuple(from_d8_order(T, [CFB_D8_REFERENCE["f_1"]])[0])
    cyc = {s: f1[s] for s, flag in enumerate(T.s_cyclic_flags) if flag}
    assert extend_from_cyclics(T, cyc).values == f1
    with pytest.raises(ValueError):
        extend_from_cyclics(T, [1, 2])
    with pytest.raises(ValueError):
        extend_from_cyclics(T, {0: 1})


def test_extension_detects_congruence_failure():
    # values that extend integrally but break the C4 condition
    T = table("cyclic:4", 2)
    with pytest.raises(ExtensionError, match="congruence"):
        extend_from_cyclics(T, [1, 0, 0])


@pytest.mark.parametrize("spec,p", SMALL_CASES)
def test_extension_round_trip(spec, p):
    T = table(spec, p)
    rows = borel_smith_lattice(T, "S").rows
    cyc = [s for s, flag in enumerate(T.s_cyclic_flags) if flag]

    @given(st.lists(st.integers(-3, 3), min_size=len(rows), max_size=len(rows)))
    def check(coeffs):
        f = combos(rows, coeffs)
        assert extend_from_cyclics(T, [f[s] for s in cyc]).values == f

    check()


def test_trace_examples():
    # N_G(S) = S: the trace is the identity
    T = table("dihedral:8", 2)
    f = SylowLevelFunction(T, tuple(range(8)))
    assert trace_to_stable(f) == f
    # A_4 at 2: the three involution classes are permuted, the trace sums them
    T = table("alternating:4", 2)
    f = SylowLevelFunction(T, (0, 1, 0, 0, 0))
    t = trace_to_stable(f)
    assert t.values[0] == 0 and t.values[-1] == 0
    assert sorted(t.values[1:4]) == [1, 1, 1]
    assert is_G_stable(t)[0]


@pytest.mark.parametrize("spec,p", SMALL_CASES)
def test_trace_preserves_borel_smith(spec, p):
    T = table(spec, p)
    for row in borel_smith_lattice(T, "S").rows:
        t = trace_to_stable(SylowLevelFunction(T, tuple(row)))
        assert check_borel_smith(t)[0]


def test_lattice_equal_examples():
    T = table("dihedral:8", 2)
    L = borel_smith_lattice(T, "S")
    shuffled = IntegerLattice.span(list(reversed([[a + b for a, b in zip(L.rows[0], r)]
                                                  for r in L.rows[1:]] + [L.rows[0]])), 8)
    assert lattice_equal(L, shuffled)
    assert not lattice_equal(L, IntegerLattice.span([[2 * x for x in r] for r in L.rows], 8))


def test_g_scope_embeds_in_s_scope():
    for spec, p in SMALL_CASES:
        T = table(spec, p)
        S_lat = borel_smith_lattice(T, "S")
        for row in borel_smith_lattice(T, "G").rows:
            lifted = SuperclassFunction(T, tuple(row)).lift()
            assert lifted.values in S_lat
