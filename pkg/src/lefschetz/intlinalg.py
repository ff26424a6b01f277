"""Exact linear algebra over the integers, the rationals and prime fields.

Matrices are plain lists of lists of Python ints (rows).  Nothing here
uses floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    Bt = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(r) for r in zip(*A)]


# -- Hermite normal form -----------------------------------------------------

def hnf(rows: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Row Hermite normal form of the row span, zero rows dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``,
    which makes the result a canonical basis of the lattice spanned by
    ``rows``.
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    n = ncols if ncols is not None else len(A[0])
    r = 0
    for col in range(n):
        while True:
            nz = [i for i in range(r, len(A)) if A[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][col]))
            A[r], A[piv] = A[piv], A[r]
            clean = True
            for i in range(r + 1, len(A)):
                if A[i][col]:
                    q = A[i][col] // A[r][col]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][col]:
                        clean = False
            if clean:
                break
        if r < len(A) and A[r][col]:
            if A[r][col] < 0:
                A[r] = [-a for a in A[r]]
            for i in range(r):
                q = A[i][col] // A[r][col]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
            r += 1
            if r == len(A):
                break
    return [row for row in A[:r] if any(row)]


def pivot_columns(H: Matrix) -> list[int]:
    return [next(j for j, v in enumerate(row) if v) for row in H]


def hnf_contains(H: Matrix, v: Sequence[int]) -> bool:
    """Membership of ``v`` in the lattice with HNF basis ``H``."""
    v = list(v)
    for row, piv in zip(H, pivot_columns(H)):
        if v[piv] % row[piv]:
            return False
        q = v[piv] // row[piv]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def hnf_coordinates(H: Matrix, v: Sequence[int]) -> list[int] | None:
    """Integer coefficients ``c`` with ``c @ H == v``, or None."""
    v = list(v)
    coeffs = []
    for row, piv in zip(H, pivot_columns(H)):
        if v[piv] % row[piv]:
            return None
        q = v[piv] // row[piv]
        coeffs.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return coeffs if not any(v) else None


# -- Smith normal form -------------------------------------------------------

@dataclass
class SmithForm:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith(M: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    A = [list(r) for r in M]
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if t < m and t < n and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return SmithForm(A, U, V)


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero Smith diagonal (each dividing the next)."""
    return [d for d in smith(M).diagonal if d]


def integer_kernel(M: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Row basis (in HNF) of ``{x in Z^ncols : M x = 0}``."""
    if not M or not any(any(r) for r in M):
        return identity(ncols)
    sf = smith(M, ncols)
    k = sf.rank
    basis = [[sf.V[i][j] for i in range(ncols)] for j in range(k, ncols)]
    return hnf(basis, ncols)


def solve_mixed_system(ncols: int, equalities: Sequence[Sequence[int]],
                       congruences: Sequence[tuple[Sequence[int], int]]) -> Matrix:
    """Lattice of ``x in Z^ncols`` with ``E x = 0`` and ``c.x = 0 mod m`` per congruence.

    Each congruence gets an auxiliary variable with coefficient ``m``; the
    kernel of the stacked matrix is projected back onto the first
    ``ncols`` coordinates (the projection is injective).
    """
    aux = len(congruences)
    width = ncols + aux
    rows: Matrix = [list(r) + [0] * aux for r in equalities]
    for j, (c, mod) in enumerate(congruences):
        row = list(c) + [0] * aux
        row[ncols + j] = mod
        rows.append(row)
    kernel = integer_kernel(rows, width)
    return hnf([r[:ncols] for r in kernel], ncols)


# -- rationals ---------------------------------------------------------------

def rational_inverse(A: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [x / pv for x in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return [row[n:] for row in M]


def rational_rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    M = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][col] != 0:
                f = M[i][col] / M[rank][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def integer_inverse(A: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of a unimodular integer matrix."""
    inv = rational_inverse(A)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


# -- prime fields ------------------------------------------------------------

def rref_mod(rows: Sequence[Sequence[int]], q: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over ``Z/q`` (``q`` prime); zero rows dropped."""
    M = [[x % q for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][col], -1, q)
        M[r] = [(x * inv) % q for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [(a - f * b) % q for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
    return M[:r], pivots


def rank_mod(rows: Sequence[Sequence[int]], q: int) -> int:
    return len(rref_mod(rows, q)[0])


def solve_mod(basis: Sequence[Sequence[int]], target: Sequence[int], q: int) -> list[int] | None:
    """Coefficients ``c`` with ``sum c_i basis_i == target`` mod ``q``, or None."""
    k = len(basis)
    if k == 0:
        return [] if not any(x % q for x in target) else None
    # columns: basis vectors; augment with the target
    n = len(target)
    aug = [[basis[i][row] % q for i in range(k)] + [target[row] % q] for row in range(n)]
    R, piv = rref_mod(aug, q)
    if k in piv:
        return None
    coeffs = [0] * k
    for row, col in zip(R, piv):
        coeffs[col] = row[k]
    return coeffs


def nullspace_mod(rows: Sequence[Sequence[int]], ncols: int, q: int) -> Matrix:
    """Basis of ``{x : rows @ x == 0 mod q}``."""
    if not rows:
        return identity(ncols)
    R, piv = rref_mod(rows, q)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, col in zip(R, piv):
            v[col] = (-row[f]) % q
        basis.append(v)
    return basis


# -- lattices ----------------------------------------------------------------

@dataclass(eq=False)
class IntegerLattice:
    """A sublattice of ``Z^dim`` stored by its Hermite normal form basis."""

    dim: int
    rows: Matrix
    names: list[str] | None = None
    columns: list[str] | None = field(default=None, repr=False)

    @classmethod
    def span(cls, vectors: Sequence[Sequence[int]], dim: int | None = None,
             columns: list[str] | None = None) -> IntegerLattice:
        dim = dim if dim is not None else len(vectors[0])
        return cls(dim, hnf(vectors, dim), None, columns)

    @property
    def hnf(self) -> Matrix:
        return hnf(self.rows, self.dim)

    @property
    def rank(self) -> int:
        return len(self.hnf)

    def __contains__(self, v: Sequence[int]) -> bool:
        return hnf_contains(self.hnf, v)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerLattice) and lattice_equal(self, other)

    def is_sublattice_of(self, other: IntegerLattice) -> bool:
        H = other.hnf
        return all(hnf_contains(H, r) for r in self.rows)

    def index_in_saturation(self) -> int:
        """``[sat(L) : L]`` as the product of the nonzero invariant factors."""
        out = 1
        for d in invariant_factors(self.rows) if self.rows else []:
            out *= d
        return out


def lattice_equal(a: IntegerLattice, b: IntegerLattice) -> bool:
    if a.dim != b.dim:
        raise ValueError("lattices live in different ambient dimensions")
    return a.hnf == b.hnf


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
