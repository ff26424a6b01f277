from itertools import product

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors as sympy_invariants

from lefschetz.intlinalg import (IntegerLattice, hnf, hnf_contains, hnf_coordinates,
                                 integer_inverse, integer_kernel, invariant_factors,
                                 lattice_equal, matmul, nullspace_mod, rational_inverse,
                                 rational_rank, rref_mod, smith, solve_mixed_system, solve_mod)

from oracles import sympy_hnf_span


def matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def unimodular(n):
    """Products of elementary integer row operations."""
    ops = st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1),
                             st.integers(-3, 3)), max_size=8)

    def build(steps):
        U = [[int(i == j) for j in range(n)] for i in range(n)]
        for a, b, k in steps:
            if a != b:
                U[a] = [x + k * y for x, y in zip(U[a], U[b])]
        return U
    return ops.map(build)


@given(matrices())
def test_smith_decomposition(M):
    sf = smith(M)
    assert matmul(matmul(sf.U, M), sf.V) == sf.D
    assert abs(sympy.Matrix(sf.U).det()) == 1 and abs(sympy.Matrix(sf.V).det()) == 1
    diag = [d for d in sf.diagonal if d]
    assert all(d > 0 for d in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    expected = [int(x) for x in sympy_invariants(sympy.Matrix(M), domain=sympy.ZZ) if x != 0]
    assert invariant_factors(M) == expected
    assert sf.rank == sympy.Matrix(M).rank()


@given(matrices(), st.data())
def test_hnf_is_canonical(M, data):
    n = len(M)
    U = data.draw(unimodular(n))
    H = hnf(M)
    assert hnf(matmul(U, M)) == H
    assert hnf(list(reversed(M))) == H
    assert sympy_hnf_span(H, len(M[0])) == sympy_hnf_span(M, len(M[0]))
    for row in M:
        assert hnf_contains(H, row)
        c = hnf_coordinates(H, row)
        assert [sum(ci * h[j] for ci, h in zip(c, H)) for j in range(len(row))] == list(row)


@given(matrices(max_rows=4, max_cols=5, lo=-4, hi=4))
def test_integer_kernel(M):
    ncols = len(M[0])
    K = integer_kernel(M, ncols)
    for v in K:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in M)
    assert len(K) == ncols - sympy.Matrix(M).rank()
    # saturated: any integer kernel vector in a small box is in the lattice
    for v in product(range(-2, 3), repeat=ncols) if ncols <= 4 else []:
        if all(sum(a * b for a, b in zip(r, v)) == 0 for r in M):
            assert hnf_contains(K, v)


@given(st.integers(1, 3), st.data())
def test_mixed_system_against_box(n, data):
    eq = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), max_size=1))
    cong = data.draw(st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                                        st.sampled_from([2, 3, 4])), max_size=2))
    B = solve_mixed_system(n, eq, cong)

    def ok(v):
        return (all(sum(a * b for a, b in zip(r, v)) == 0 for r in eq)
                and all(sum(a * b for a, b in zip(c, v)) % m == 0 for c, m in cong))
    for row in B:
        assert ok(row)
    for v in product(range(-4, 5), repeat=n):
        assert ok(v) == hnf_contains(B, v)


def test_mixed_system_parity_example():
    # a = b = c mod 2
    B = solve_mixed_system(3, [], [([1, -1, 0], 2), ([0, 1, -1], 2)])
    assert B == [[1, 1, 1], [0, 2, 0], [0, 0, 2]]


@given(matrices(max_rows=4, max_cols=4))
def test_rational_inverse(M):
    n = len(M)
    assume(len(M[0]) == n and sympy.Matrix(M).det() != 0)
    inv = rational_inverse(M)
    assert sympy.Matrix(inv) == sympy.Matrix(M).inv()
    assert rational_rank(M) == n


def test_integer_inverse():
    assert integer_inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
    with pytest.raises(ValueError, match="unimodular"):
        integer_inverse([[2, 0], [0, 1]])
    with pytest.raises(ValueError, match="singular"):
        rational_inverse([[1, 2], [2, 4]])


@given(st.sampled_from([2, 3, 5]), matrices(max_rows=4, max_cols=4, lo=0, hi=4))
def test_prime_field_solvers(q, M):
    ncols = len(M[0])
    R, piv = rref_mod(M, q)
    # row space is preserved: every original row is a combination of R
    for row in M:
        assert solve_mod(R, row, q) is not None
    N = nullspace_mod(M, ncols, q)
    assert len(N) + len(R) == ncols
    for v in N:
        assert all(sum(a * b for a, b in zip(r, v)) % q == 0 for r in M)
    # brute-force the solution set size
    count = sum(1 for v in product(range(q), repeat=ncols)
                if all(sum(a * b for a, b in zip(r, v)) % q == 0 for r in M))
    assert count == q ** len(N)


def test_solve_mod_reports_missing_targets():
    assert solve_mod([[1, 0, 1]], [0, 1, 0], 2) is None
    assert solve_mod([[1, 0, 1], [0, 1, 0]], [1, 1, 1], 2) == [1, 1]
    assert solve_mod([], [0, 0], 2) == [] and solve_mod([], [1, 0], 2) is None


def test_lattice_equality():
    L = IntegerLattice.span([[1, 1, 1], [0, 2, 0], [0, 0, 2]], 3)
    assert lattice_equal(L, IntegerLattice.span([[0, 0, 2], [1, 1, 1], [0, 2, 0]], 3))
    L2 = IntegerLattice.span([[2 * x for x in r] for r in L.rows], 3)
    assert not lattice_equal(L, L2)
    assert L2.is_sublattice_of(L) and not L.is_sublattice_of(L2)
    assert [1, 3, 5] in L and [1, 2, 1] not in L
    assert L.rank == 3
    with pytest.raises(ValueError):
        lattice_equal(L, IntegerLattice.span([[1, 0]], 2))
