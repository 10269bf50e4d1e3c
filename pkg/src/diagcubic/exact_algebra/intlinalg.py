"""Integer and mod-3 linear algebra on plain list-of-lists matrices."""
from __future__ import annotations

from fractions import Fraction

import numpy as np


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> list[list[int]]:
    return [[0] * c for _ in range(r)]


def shape(m) -> tuple[int, int]:
    r = len(m)
    return r, (len(m[0]) if r else 0)


def as_int_matrix(m) -> list[list[int]]:
    if isinstance(m, np.ndarray):
        return [[int(x) for x in row] for row in m.tolist()]
    return [[int(x) for x in row] for row in m]


def transpose(m) -> list[list[int]]:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b) -> list[list[int]]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def det(m) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def inverse_unimodular(m) -> list[list[int]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def _smith(m, track: bool):
    a = [list(row) for row in as_int_matrix(m)]
    rows, cols = shape(a)
    U = identity(rows) if track else None
    V = identity(cols) if track else None

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            if track:
                U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            if track:
                for row in V:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q:
            rs, rd = a[src], a[dst]
            for k in range(cols):
                if rs[k]:
                    rd[k] += q * rs[k]
            if track:
                us, ud = U[src], U[dst]
                for k in range(rows):
                    if us[k]:
                        ud[k] += q * us[k]

    def add_col(dst, src, q):
        if q:
            for row in a:
                if row[src]:
                    row[dst] += q * row[src]
            if track:
                for row in V:
                    if row[src]:
                        row[dst] += q * row[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            row = a[i]
            for j in range(t, cols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t onto the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                U[t] = [-x for x in U[t]]
        t += 1
    return U, a, V


def smith_normal_form(m):
    """Return (U, S, V) with U*m*V == S, U and V unimodular, S diagonal with d1 | d2 | ..."""
    return _smith(m, track=True)


def invariant_factors(m) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    _, s, _ = _smith(m, track=False)
    r, c = shape(s)
    return [s[i][i] for i in range(min(r, c)) if s[i][i]]


def integer_kernel(m) -> list[list[int]]:
    """Basis (list of vectors) of the saturated integer kernel {x : m x = 0}."""
    m = as_int_matrix(m)
    rows, cols = shape(m)
    if rows == 0:
        return identity(cols)
    _, s, v = smith_normal_form(m)
    rank = sum(1 for i in range(min(rows, cols)) if s[i][i])
    return [[v[i][j] for i in range(cols)] for j in range(rank, cols)]


def hermite_normal_form(vectors) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors`` (zero rows dropped)."""
    a = [list(v) for v in as_int_matrix(vectors)]
    if not a:
        return []
    cols = len(a[0])
    r = 0
    for c in range(cols):
        piv_rows = [i for i in range(r, len(a)) if a[i][c]]
        if not piv_rows:
            continue
        while True:
            piv_rows = [i for i in range(r, len(a)) if a[i][c]]
            k = min(piv_rows, key=lambda i: abs(a[i][c]))
            a[r], a[k] = a[k], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return [row for row in a[:r] if any(row)]


def solve_linear(m, b, ring: str = "integers"):
    """Return some x with m x = b over ``ring`` ('integers' or 'mod3'), or None."""
    m = as_int_matrix(m)
    b = [int(x) for x in b]
    rows, cols = shape(m)
    if len(b) != rows:
        raise ValueError(f"dimension mismatch: matrix has {rows} rows, vector has {len(b)}")
    if ring == "mod3":
        return _solve_mod_p(m, b, 3, cols)
    if ring != "integers":
        raise ValueError(f"unknown ring {ring!r}")
    if rows == 0:
        return [0] * cols
    u, s, v = smith_normal_form(m)
    ub = matvec(u, b)
    y = [0] * cols
    for i in range(rows):
        d = s[i][i] if i < cols else 0
        if d == 0:
            if ub[i]:
                return None
        elif ub[i] % d:
            return None
        else:
            y[i] = ub[i] // d
    return matvec(v, y)


def _solve_mod_p(m, b, p, cols):
    a = [[x % p for x in row] + [bi % p] for row, bi in zip(m, b)]
    pivots = []
    r = 0
    for c in range(cols):
        k = next((i for i in range(r, len(a)) if a[i][c]), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in a[r:]):
        return None
    x = [0] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][-1]
    return x


def rank_mod_p(m, p: int = 2_147_483_629) -> int:
    """Rank of an integer matrix reduced mod a prime (lower bound for the rational rank)."""
    a = np.array(m, dtype=np.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - (col[nzr, None] * a[r][None, :]) % p) % p
        r += 1
        if r == rows:
            break
    return r


def rank_mod3(m) -> int:
    return rank_mod_p(m, 3)
