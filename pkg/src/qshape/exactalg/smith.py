"""Smith normal form, kernels, and linear solving over the supported rings.

The integer Smith normal form is the workhorse: computations over Z/p^k
lift entries to canonical integer representatives, run the integer
reduction, and push the transforms back down (scaling rows by units so
the diagonal consists of powers of p).  Over the two fields (Q and Z/p)
Gaussian elimination is used where a Smith form is not required.
"""

from __future__ import annotations

from math import gcd

from ..errors import UnsupportedRing
from .matrix import Matrix
from .rings import INTEGERS, INTEGERS_MOD, RATIONALS, BaseRing, ZZ


# ---------------------------------------------------------------------------
# integer Smith normal form
# ---------------------------------------------------------------------------

def _snf_int(entries, rows, cols):
    """Return (S, U, V) as dense integer lists with U*M*V = S.

    S is diagonal with d1 | d2 | ... >= 0; U, V are products of elementary
    (unimodular) row/column operations.  A zero matrix is left untouched so
    U and V come back as identities.
    """
    A = [list(entries[i * cols:(i + 1) * cols]) for i in range(rows)]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        if c:
            Ad, As = A[dst], A[src]
            for k in range(cols):
                Ad[k] += c * As[k]
            Ud, Us = U[dst], U[src]
            for k in range(rows):
                Ud[k] += c * Us[k]

    def add_col(src, dst, c):  # col_dst += c * col_src
        if c:
            for row in A:
                row[dst] += c * row[src]
            for row in V:
                row[dst] += c * row[src]

    t = 0
    n = min(rows, cols)
    while t < n:
        # locate a pivot of minimal absolute value in A[t:, t:]
        pivot = None
        best = None
        for i in range(t, rows):
            Ai = A[i]
            for j in range(t, cols):
                x = Ai[j]
                if x:
                    a = abs(x)
                    if best is None or a < best:
                        best, pivot = a, (i, j)
                        if a == 1:
                            break
            if best == 1:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t]:  # remainder strictly smaller: re-pivot
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide every remaining entry
            culprit = None
            d = A[t][t]
            for i in range(t + 1, rows):
                Ai = A[i]
                for j in range(t + 1, cols):
                    if Ai[j] % d:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(culprit, t, 1)  # fold the bad row in and restart
        if A[t][t] < 0:
            for k in range(cols):
                A[t][k] = -A[t][k]
            for k in range(rows):
                U[t][k] = -U[t][k]
        t += 1

    return A, U, V


def smith_normal_form(M: Matrix):
    """(S, U, V) with U*M*V = S over Z or Z/p^k.

    The diagonal satisfies d1 | d2 | ...; over Z the entries are >= 0,
    over Z/p^k they are canonical powers of p (or 0).  Raises
    UnsupportedRing over Q, where Gaussian elimination applies instead.
    """
    ring = M.ring
    if ring.kind == RATIONALS:
        raise UnsupportedRing("Smith normal form is for Z and Z/p^k")
    S, U, V = _snf_int([int(x) for x in M.entries], M.rows, M.cols)
    if ring.kind == INTEGERS:
        flat = [x for row in S for x in row]
        return (Matrix(ring, M.rows, M.cols, flat),
                Matrix(ring, M.rows, M.rows, [x for r in U for x in r]),
                Matrix(ring, M.cols, M.cols, [x for r in V for x in r]))
    # Z/p^k: normalize each diagonal entry to its p-power part.
    p, k, m = ring.prime, ring.exponent, ring.modulus
    for t in range(min(M.rows, M.cols)):
        d = S[t][t]
        if d == 0:
            continue
        v = 0
        while d % p == 0:
            d //= p
            v += 1
        if v >= k:
            S[t][t] = 0
            continue
        u_inv = pow(d % m, -1, m)  # d = p^v * unit
        S[t][t] = p ** v
        for j in range(M.rows):
            U[t][j] = (U[t][j] * u_inv) % m
    return (Matrix(ring, M.rows, M.cols, [x for row in S for x in row]),
            Matrix(ring, M.rows, M.rows, [x for r in U for x in r]),
            Matrix(ring, M.cols, M.cols, [x for r in V for x in r]))


# ---------------------------------------------------------------------------
# Gaussian elimination over the fields
# ---------------------------------------------------------------------------

def _rref(M: Matrix):
    """Reduced row echelon form over a field; returns (rows, pivot cols)."""
    ring = M.ring
    A = M.to_lists()
    pivots = []
    r = 0
    for j in range(M.cols):
        pivot_row = None
        for i in range(r, M.rows):
            if A[i][j] != ring.zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        A[r], A[pivot_row] = A[pivot_row], A[r]
        inv = ring.inv(A[r][j])
        A[r] = [ring.mul(inv, x) for x in A[r]]
        for i in range(M.rows):
            if i != r and A[i][j] != ring.zero:
                c = A[i][j]
                A[i] = [ring.sub(x, ring.mul(c, y)) for x, y in zip(A[i], A[r])]
        pivots.append(j)
        r += 1
        if r == M.rows:
            break
    return A, pivots


def field_rank(M: Matrix) -> int:
    _, pivots = _rref(M)
    return len(pivots)


def _field_kernel(M: Matrix) -> Matrix:
    ring = M.ring
    A, pivots = _rref(M)
    free = [j for j in range(M.cols) if j not in pivots]
    cols = []
    for f in free:
        v = [ring.zero] * M.cols
        v[f] = ring.one
        for r, pj in enumerate(pivots):
            v[pj] = ring.neg(A[r][f])
        cols.append(v)
    return Matrix(ring, M.cols, len(cols),
                  [cols[j][i] for i in range(M.cols) for j in range(len(cols))])


def _field_solve_matrix(M: Matrix, B: Matrix):
    """X with M*X = B over a field, or None; one elimination for all columns."""
    ring = M.ring
    aug = Matrix.hstack([M, B])
    A, pivots = _rref(aug)
    pivots_in_M = [j for j in pivots if j < M.cols]
    if len(pivots_in_M) != len(pivots):
        return None  # a pivot fell in the right-hand block
    out = [[ring.zero] * B.cols for _ in range(M.cols)]
    for r, pj in enumerate(pivots_in_M):
        for j in range(B.cols):
            out[pj][j] = A[r][M.cols + j]
    return Matrix(ring, M.cols, B.cols, [x for row in out for x in row])


def _field_solve(M: Matrix, b: Matrix):
    X = _field_solve_matrix(M, b)
    return None if X is None else X


# ---------------------------------------------------------------------------
# kernels and solving over every supported ring
# ---------------------------------------------------------------------------

def kernel_basis(M: Matrix) -> Matrix:
    """Columns generating {x : Mx = 0}.

    Over Z and the fields the columns are linearly independent (a basis);
    over Z/p^k they are a generating set.
    """
    ring = M.ring
    if ring.is_field:
        return _field_kernel(M)
    if ring.kind == INTEGERS:
        S, _, V = smith_normal_form(M)
        t = min(M.rows, M.cols)
        idx = [i for i in range(t) if S[i, i] == 0] + list(range(t, M.cols))
        return V.take_columns(idx)
    # Z/p^k (including the field case k = 1, for canonical generators)
    m = ring.modulus
    S, _, V = smith_normal_form(M)
    t = min(M.rows, M.cols)
    gens = []
    for i in range(t):
        d = int(S[i, i])
        if d == 0:
            gens.append((i, 1))
        else:
            g = gcd(d, m)
            if g != 1:
                gens.append((i, m // g))
    gens.extend((i, 1) for i in range(t, M.cols))
    cols = [V.column_matrix(i).scale(c) for i, c in gens]
    if not cols:
        return Matrix.zeros(ring, M.cols, 0)
    return Matrix.hstack(cols)


def solve(M: Matrix, b: Matrix):
    """A particular solution x of Mx = b (as a column), or None."""
    ring = M.ring
    if b.rows != M.rows or b.cols != 1:
        raise UnsupportedRing("solve expects a conformal column")
    if ring.is_field:
        return _field_solve(M, b)
    S, U, V = smith_normal_form(M)
    c = U * b
    t = min(M.rows, M.cols)
    y = [ring.zero] * M.cols
    if ring.kind == INTEGERS:
        for i in range(M.rows):
            ci = c[i, 0]
            d = S[i, i] if i < t else 0
            if d == 0:
                if ci != 0:
                    return None
            else:
                if ci % d:
                    return None
                y[i] = ci // d
    else:
        m = ring.modulus
        for i in range(M.rows):
            ci = int(c[i, 0])
            d = int(S[i, i]) if i < t else 0
            if d == 0:
                if ci % m:
                    return None
            else:
                g = gcd(d, m)
                if ci % g:
                    return None
                y[i] = ((ci // g) * pow(d // g, -1, m // g)) % m
    return V * Matrix.column(ring, y)


def solve_matrix(M: Matrix, B: Matrix):
    """X with M*X = B, or None; one decomposition shared by all columns."""
    ring = M.ring
    if B.cols == 0:
        return Matrix.zeros(ring, M.cols, 0)
    if ring.is_field:
        return _field_solve_matrix(M, B)
    # share one Smith decomposition across all columns
    S, U, V = smith_normal_form(M)
    t = min(M.rows, M.cols)
    C = U * B
    m = ring.modulus if ring.kind == INTEGERS_MOD else None
    Y = []
    for j in range(B.cols):
        y = [ring.zero] * M.cols
        for i in range(M.rows):
            ci = C[i, j]
            d = S[i, i] if i < t else ring.zero
            if ring.kind == INTEGERS:
                if d == 0:
                    if ci != 0:
                        return None
                else:
                    if ci % d:
                        return None
                    y[i] = ci // d
            else:
                ci, d = int(ci), int(d)
                if d == 0:
                    if ci % m:
                        return None
                else:
                    g = gcd(d, m)
                    if ci % g:
                        return None
                    y[i] = ((ci // g) * pow(d // g, -1, m // g)) % m
        Y.append(y)
    Ym = Matrix(ring, M.cols, B.cols,
                [Y[j][i] for i in range(M.cols) for j in range(B.cols)])
    return V * Ym


def in_column_span(M: Matrix, b: Matrix) -> bool:
    return solve(M, b) is not None


def matrix_is_invertible(M: Matrix) -> bool:
    """Square and invertible over the ring."""
    if M.rows != M.cols:
        return False
    ring = M.ring
    if ring.is_field:
        return field_rank(M) == M.rows
    S, _, _ = smith_normal_form(M)
    return all(ring.is_unit(S[i, i]) for i in range(M.rows))


def integer_rank(M: Matrix) -> int:
    if M.ring != ZZ:
        raise UnsupportedRing("integer_rank wants a matrix over Z")
    S, _, _ = smith_normal_form(M)
    return sum(1 for i in range(min(M.rows, M.cols)) if S[i, i] != 0)
