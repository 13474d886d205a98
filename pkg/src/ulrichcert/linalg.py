"""Exact linear algebra: Gaussian elimination over a field domain and
Hermite normal form over the integers.

Conventions, fixed so that every routine is bit-for-bit deterministic:

* ``rref`` scans pivot columns left to right and scales pivots to 1.
* Kernel bases come from the reduced row echelon form, one vector per free
  column, free columns in ascending order, with the free coordinate set to 1.
* The Hermite normal form uses the leftmost available pivot column, positive
  pivots, and entries above a pivot reduced into ``[0, pivot)``.
"""
from __future__ import annotations

from fractions import Fraction


def rref(rows, ncols, domain):
    """Reduced row echelon form. Returns (new_rows, pivot_columns)."""
    mat = [[domain.coerce(x) for x in row] for row in rows]
    for row in mat:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if not domain.is_zero(mat[i][c])), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = domain.inv(mat[r][c])
        mat[r] = [domain.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not domain.is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [domain.sub(a, domain.mul(f, b)) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat, pivots


def rank(rows, ncols, domain) -> int:
    return len(rref(rows, ncols, domain)[1])


def kernel_basis(rows, ncols, domain):
    """Basis of the right null space {x : rows . x = 0}, RREF-normalized.

    The dimension is always ncols minus the rank; no tolerances are involved.
    """
    mat, pivots = rref(rows, ncols, domain)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [domain.zero] * ncols
        vec[fc] = domain.one
        for r, pc in enumerate(pivots):
            vec[pc] = domain.neg(mat[r][fc])
        basis.append(vec)
    return basis


def solve_in_row_span(rows, ncols, domain, target):
    """Coefficients c with c . rows = target, or None if target is outside."""
    mat, pivots = rref(rows, ncols, domain)
    t = [domain.coerce(x) for x in target]
    coeffs = []
    for r, pc in enumerate(pivots):
        f = t[pc]
        coeffs.append(f)
        if not domain.is_zero(f):
            t = [domain.sub(a, domain.mul(f, b)) for a, b in zip(t, mat[r])]
    if any(not domain.is_zero(x) for x in t):
        return None
    return coeffs


# ---------------------------------------------------------------------------
# Integer lattice routines
# ---------------------------------------------------------------------------

def hermite_normal_form(rows):
    """Row-style HNF of an integer matrix. Returns (hnf_rows, pivot_columns).

    Zero rows are dropped. Row operations are unimodular, so the integer row
    span is preserved exactly.
    """
    mat = [[int(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    for row in mat:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        while True:
            live = [i for i in range(r, len(mat)) if mat[i][c] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: (abs(mat[i][c]), i))
            mat[r], mat[i0] = mat[i0], mat[r]
            done = True
            for i in range(r + 1, len(mat)):
                if mat[i][c] != 0:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
                    if mat[i][c] != 0:
                        done = False
            if done:
                break
        if r < len(mat) and mat[r][c] != 0:
            if mat[r][c] < 0:
                mat[r] = [-x for x in mat[r]]
            for i in range(r):
                q = mat[i][c] // mat[r][c]
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
            pivots.append(c)
            r += 1
    return mat[:r], pivots


def hnf_contains(hnf_rows, pivots, target):
    """Membership of an integer vector in the row span of an HNF matrix."""
    t = [int(x) for x in target]
    for row, c in zip(hnf_rows, pivots):
        q, rem = divmod(t[c], row[c])
        if rem:
            return False
        if q:
            t = [a - q * b for a, b in zip(t, row)]
    return all(x == 0 for x in t)


def integer_span_contains(generators, target) -> bool:
    """True iff target lies in the integer span of the generator rows."""
    generators = list(generators)
    if not generators:
        raise ValueError("empty generator list")
    if any(len(g) != len(target) for g in generators):
        raise ValueError("dimension mismatch between generators and target")
    hnf, pivots = hermite_normal_form(generators)
    return hnf_contains(hnf, pivots, target)


def integer_kernel(rows, ncols):
    """Basis of the integer right kernel {x in Z^ncols : rows . x = 0}.

    Computed from the HNF of the transpose augmented with an identity block;
    the kernel of a map of free abelian groups is saturated, so the returned
    rows generate the full kernel lattice.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    aug = []
    for j in range(ncols):
        col = [rows[i][j] for i in range(nrows)]
        aug.append(col + [1 if k == j else 0 for k in range(ncols)])
    hnf, pivots = hermite_normal_form(aug)
    basis = []
    for row, c in zip(hnf, pivots):
        if c >= nrows:
            basis.append(row[nrows:])
    return basis


def determinant(rows):
    """Exact determinant of a square integer or rational matrix."""
    mat = [[Fraction(x) for x in row] for row in rows]
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if mat[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for r in range(c + 1, n):
            if mat[r][c] != 0:
                f = mat[r][c] * inv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[c])]
    return det


def signature(gram):
    """Signature (n_plus, n_minus) of a nondegenerate symmetric matrix.

    Uses exact symmetric congruence diagonalization over the rationals
    (simultaneous row and column operations), never numerics.
    """
    mat = [[Fraction(x) for x in row] for row in gram]
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i):
            if mat[i][j] != mat[j][i]:
                raise ValueError("matrix is not symmetric")

    def add_row_col(i, j, f):
        # row_i += f * row_j, then col_i += f * col_j
        mat[i] = [a + f * b for a, b in zip(mat[i], mat[j])]
        for r in range(n):
            mat[r][i] += f * mat[r][j]

    def swap_row_col(i, j):
        mat[i], mat[j] = mat[j], mat[i]
        for r in range(n):
            mat[r][i], mat[r][j] = mat[r][j], mat[r][i]

    pos = neg = 0
    for k in range(n):
        if mat[k][k] == 0:
            j = next((j for j in range(k + 1, n) if mat[j][j] != 0), None)
            if j is not None:
                swap_row_col(k, j)
            else:
                j = next((j for j in range(k + 1, n) if mat[k][j] != 0), None)
                if j is None:
                    raise ValueError("degenerate symmetric form")
                add_row_col(k, j, Fraction(1))
        d = mat[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if mat[i][k] != 0:
                add_row_col(i, k, -mat[i][k] / d)
    return pos, neg
