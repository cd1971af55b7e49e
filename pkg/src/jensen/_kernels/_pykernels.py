"""Pure-Python kernels. Exact (arbitrary-precision) and always available.

The compiled twin in ``_ckernels.pyx`` runs the same algorithms on int64
and raises ``OverflowError`` when an entry leaves its safe range.
"""

from __future__ import annotations

from itertools import product
from math import prod

import numpy as np


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def row_basis(rows, ncols: int) -> list[list[int]]:
    """Reduced echelon (Hermite) basis of the Z-row-space of ``rows``.

    Rows are inserted one at a time; a clash at a pivot column is resolved
    by a unimodular 2x2 combination (gcd step), so the lattice is preserved.
    Every new pivot row is reduced against later pivots and earlier pivot
    rows are reduced against it, which keeps entries small.
    """
    pivots: dict[int, list[int]] = {}

    def reduce_later(row: list[int], c: int) -> None:
        for j in sorted(pivots):
            if j > c and row[j]:
                p = pivots[j]
                q = row[j] // p[j]
                if q:
                    for k in range(j, ncols):
                        row[k] -= q * p[k]

    def reduce_earlier(c: int) -> None:
        p = pivots[c]
        for i in sorted(pivots):
            row = pivots[i]
            if i < c and row[c]:
                q = row[c] // p[c]
                if q:
                    for k in range(c, ncols):
                        row[k] -= q * p[k]

    for src in rows:
        r = [int(v) for v in src]
        c = 0
        while True:
            while c < ncols and r[c] == 0:
                c += 1
            if c == ncols:
                break
            p = pivots.get(c)
            if p is None:
                if r[c] < 0:
                    r = [-v for v in r]
                reduce_later(r, c)
                pivots[c] = r
                reduce_earlier(c)
                break
            a, b = p[c], r[c]
            if b % a == 0:
                q = b // a
                r = [ri - q * pi for ri, pi in zip(r, p)]
            else:
                g, s, t = _xgcd(a, b)
                ag, bg = a // g, b // g
                newp = [s * pi + t * ri for pi, ri in zip(p, r)]
                r = [bg * pi - ag * ri for pi, ri in zip(p, r)]
                reduce_later(newp, c)
                pivots[c] = newp
                reduce_earlier(c)
            c += 1
    return [pivots[c] for c in sorted(pivots)]


def _nearest_quotient(v: int, piv: int) -> int:
    q = v // piv
    if 2 * abs(v - q * piv) > abs(piv):
        q += 1
    return q


def smith(A):
    """Smith normal form ``A = U S V``.

    Pivot: the nonzero entry of least absolute value in the trailing
    submatrix, ties broken by lowest (row, col). Quotients are rounded to
    nearest to slow entry growth. Returns ``S, U, U_inv, V, V_inv``.
    """
    M = [[int(v) for v in row] for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    # UT holds U transposed, WT holds V_inv transposed, so that every
    # transform update is a row operation.
    UT = [[int(i == j) for j in range(m)] for i in range(m)]
    R = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    WT = [[int(i == j) for j in range(n)] for i in range(n)]

    def axpy(dst, src, q):
        # dst -= q * src
        for k, v in enumerate(src):
            if v:
                dst[k] -= q * v

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            M[t], M[i] = M[i], M[t]
            UT[t], UT[i] = UT[i], UT[t]
            R[t], R[i] = R[i], R[t]
        if j != t:
            for row in M:
                row[t], row[j] = row[j], row[t]
            V[t], V[j] = V[j], V[t]
            WT[t], WT[j] = WT[j], WT[t]
        piv = M[t][t]
        clean = True
        for i in range(t + 1, m):
            v = M[i][t]
            if v:
                q = _nearest_quotient(v, piv)
                axpy(M[i], M[t], q)
                axpy(R[i], R[t], q)
                # row_i -= q row_t on M  =>  col_t += q col_i on U
                axpy(UT[t], UT[i], -q)
                if M[i][t]:
                    clean = False
        for j in range(t + 1, n):
            v = M[t][j]
            if v:
                q = _nearest_quotient(v, piv)
                for row in M:
                    if row[t]:
                        row[j] -= q * row[t]
                # col_j -= q col_t on M  =>  row_t += q row_j on V
                axpy(V[t], V[j], -q)
                axpy(WT[j], WT[t], q)
                if M[t][j]:
                    clean = False
        if not clean:
            continue
        bad = None
        for i in range(t + 1, m):
            row = M[i]
            for j in range(t + 1, n):
                if row[j] % piv:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            # row_t += row_bad  =>  col_bad -= col_t on U
            axpy(M[t], M[bad], -1)
            axpy(R[t], R[bad], -1)
            axpy(UT[bad], UT[t], 1)
            continue
        if piv < 0:
            M[t] = [-v for v in M[t]]
            UT[t] = [-v for v in UT[t]]
            R[t] = [-v for v in R[t]]
        t += 1
    U = [list(col) for col in zip(*UT)] if m else []
    W = [list(col) for col in zip(*WT)] if n else []
    return M, U, R, V, W


def brute_force(a, b, c, moduli, nvars: int, identity_index: int) -> np.ndarray:
    """All ``f`` with ``f(e) = 0`` and ``f(a_i) + f(b_i) = 2 f(c_i)`` for every i.

    Values live in ``Z/m_1 + ... + Z/m_k``. Candidates are visited in
    lexicographic order of ``(f(g_1), f(g_2), ...)`` skipping the identity.
    Returns an array of shape ``(solutions, nvars, k)``.
    """
    moduli = [int(m) for m in moduli]
    k = len(moduli)
    eqs = list(zip((int(x) for x in a), (int(x) for x in b), (int(x) for x in c)))
    free = [g for g in range(nvars) if g != identity_index]
    hvals = list(product(*(range(m) for m in moduli)))
    zero = (0,) * k
    out = []
    for choice in product(range(len(hvals)), repeat=len(free)):
        vals = [zero] * nvars
        for g, h in zip(free, choice):
            vals[g] = hvals[h]
        ok = True
        for x, y, z in eqs:
            vx, vy, vz = vals[x], vals[y], vals[z]
            for j in range(k):
                if (vx[j] + vy[j] - 2 * vz[j]) % moduli[j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(vals)
    if not out:
        return np.zeros((0, nvars, k), dtype=np.int64)
    return np.array(out, dtype=np.int64).reshape(len(out), nvars, k)


def candidate_count(moduli, nvars: int) -> int:
    return prod(int(m) for m in moduli) ** max(nvars - 1, 0)
