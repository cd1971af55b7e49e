# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels on int64 with overflow guards.

Same algorithms and outputs as ``_pykernels``. Any entry whose magnitude
exceeds ``LIMIT`` raises ``OverflowError``; callers then rerun the
pure-Python (bigint) kernel.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

cdef enum:
    LIMIT = 1073741824  # 2**30: products of two entries stay inside int64


cdef inline int64_t _floordiv(int64_t a, int64_t b) nogil:
    # C truncating division, corrected to floor
    cdef int64_t q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline int64_t _mod(int64_t a, int64_t b) nogil:
    cdef int64_t r = a % b
    if r != 0 and ((r < 0) != (b < 0)):
        r += b
    return r


cdef inline int64_t _abs(int64_t a) nogil:
    return -a if a < 0 else a


cdef inline int64_t _nearest_quotient(int64_t v, int64_t piv) nogil:
    cdef int64_t q = _floordiv(v, piv)
    if 2 * _abs(v - q * piv) > _abs(piv):
        q += 1
    return q


cdef inline void _guard_row(int64_t[:] row, Py_ssize_t start) except *:
    cdef Py_ssize_t k
    for k in range(start, row.shape[0]):
        if row[k] > LIMIT or row[k] < -LIMIT:
            raise OverflowError("kernel entry exceeds int64 safe range")


cdef void _xgcd(int64_t a, int64_t b, int64_t* g, int64_t* s, int64_t* t):
    cdef int64_t x0 = 1, x1 = 0, y0 = 0, y1 = 1, q, tmp
    while b != 0:
        q = _floordiv(a, b)
        tmp = _mod(a, b)
        a = b
        b = tmp
        tmp = x0 - q * x1
        x0 = x1
        x1 = tmp
        tmp = y0 - q * y1
        y0 = y1
        y1 = tmp
    if a < 0:
        a = -a
        x0 = -x0
        y0 = -y0
    g[0] = a
    s[0] = x0
    t[0] = y0


cdef void _reduce_later(int64_t[:, :] P, char[:] have, int64_t[:] row, Py_ssize_t c) except *:
    cdef Py_ssize_t j, k, n = row.shape[0]
    cdef int64_t q
    for j in range(c + 1, n):
        if have[j] and row[j] != 0:
            q = _floordiv(row[j], P[j, j])
            if q != 0:
                for k in range(j, n):
                    row[k] -= q * P[j, k]
                _guard_row(row, j)


cdef void _reduce_earlier(int64_t[:, :] P, char[:] have, Py_ssize_t c) except *:
    cdef Py_ssize_t i, k, n = P.shape[1]
    cdef int64_t q
    for i in range(c):
        if have[i] and P[i, c] != 0:
            q = _floordiv(P[i, c], P[c, c])
            if q != 0:
                for k in range(c, n):
                    P[i, k] -= q * P[c, k]
                _guard_row(P[i], c)


def row_basis(rows, Py_ssize_t ncols):
    cdef int64_t[:, :] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef Py_ssize_t nrows = R.shape[0]
    cdef int64_t[:, :] P = np.zeros((ncols, ncols), dtype=np.int64)
    cdef char[:] have = np.zeros(ncols, dtype=np.int8)
    cdef int64_t[:] r = np.zeros(ncols, dtype=np.int64)
    cdef Py_ssize_t i, c, k
    cdef int64_t a, b, q, g, s, t, ag, bg, pk, rk
    for k in range(ncols):
        for i in range(nrows):
            if R[i, k] > LIMIT or R[i, k] < -LIMIT:
                raise OverflowError("kernel entry exceeds int64 safe range")
    for i in range(nrows):
        for k in range(ncols):
            r[k] = R[i, k]
        c = 0
        while True:
            while c < ncols and r[c] == 0:
                c += 1
            if c == ncols:
                break
            if not have[c]:
                if r[c] < 0:
                    for k in range(c, ncols):
                        r[k] = -r[k]
                _reduce_later(P, have, r, c)
                for k in range(ncols):
                    P[c, k] = r[k]
                have[c] = 1
                _reduce_earlier(P, have, c)
                break
            a = P[c, c]
            b = r[c]
            if _mod(b, a) == 0:
                q = _floordiv(b, a)
                for k in range(c, ncols):
                    r[k] = r[k] - q * P[c, k]
                _guard_row(r, c)
            else:
                _xgcd(a, b, &g, &s, &t)
                ag = _floordiv(a, g)
                bg = _floordiv(b, g)
                for k in range(c, ncols):
                    pk = P[c, k]
                    rk = r[k]
                    P[c, k] = s * pk + t * rk
                    r[k] = bg * pk - ag * rk
                _guard_row(P[c], c)
                _guard_row(r, c)
                _reduce_later(P, have, P[c], c)
                _reduce_earlier(P, have, c)
            c += 1
    return [[int(v) for v in P[c]] for c in range(ncols) if have[c]]


def smith(A):
    arr = np.array(A, dtype=np.int64)
    if arr.ndim != 2:
        arr = arr.reshape(len(A), -1)
    cdef Py_ssize_t m = arr.shape[0]
    cdef Py_ssize_t n = arr.shape[1]
    cdef int64_t[:, :] M = arr
    cdef int64_t[:, :] UT = np.eye(m, dtype=np.int64)
    cdef int64_t[:, :] R = np.eye(m, dtype=np.int64)
    cdef int64_t[:, :] V = np.eye(n, dtype=np.int64)
    cdef int64_t[:, :] WT = np.eye(n, dtype=np.int64)
    cdef Py_ssize_t t = 0, i, j, k, bi, bj, bad
    cdef int64_t best, v, q, piv, x
    cdef bint clean
    for i in range(m):
        _guard_row(M[i], 0)
    while t < (m if m < n else n):
        best = 0
        bi = -1
        bj = -1
        for i in range(t, m):
            for j in range(t, n):
                v = _abs(M[i, j])
                if v != 0 and (best == 0 or v < best):
                    best = v
                    bi = i
                    bj = j
                    if best == 1:
                        break
            if best == 1:
                break
        if best == 0:
            break
        if bi != t:
            for k in range(n):
                x = M[t, k]; M[t, k] = M[bi, k]; M[bi, k] = x
            for k in range(m):
                x = UT[t, k]; UT[t, k] = UT[bi, k]; UT[bi, k] = x
                x = R[t, k]; R[t, k] = R[bi, k]; R[bi, k] = x
        if bj != t:
            for k in range(m):
                x = M[k, t]; M[k, t] = M[k, bj]; M[k, bj] = x
            for k in range(n):
                x = V[t, k]; V[t, k] = V[bj, k]; V[bj, k] = x
                x = WT[t, k]; WT[t, k] = WT[bj, k]; WT[bj, k] = x
        piv = M[t, t]
        clean = True
        for i in range(t + 1, m):
            v = M[i, t]
            if v != 0:
                q = _nearest_quotient(v, piv)
                for k in range(n):
                    M[i, k] -= q * M[t, k]
                for k in range(m):
                    UT[t, k] += q * UT[i, k]
                    R[i, k] -= q * R[t, k]
                _guard_row(M[i], 0)
                _guard_row(UT[t], 0)
                _guard_row(R[i], 0)
                if M[i, t] != 0:
                    clean = False
        for j in range(t + 1, n):
            v = M[t, j]
            if v != 0:
                q = _nearest_quotient(v, piv)
                for k in range(m):
                    if M[k, t] != 0:
                        M[k, j] -= q * M[k, t]
                        if M[k, j] > LIMIT or M[k, j] < -LIMIT:
                            raise OverflowError("kernel entry exceeds int64 safe range")
                for k in range(n):
                    V[t, k] += q * V[j, k]
                    WT[j, k] -= q * WT[t, k]
                _guard_row(V[t], 0)
                _guard_row(WT[j], 0)
                if M[t, j] != 0:
                    clean = False
        if not clean:
            continue
        bad = -1
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if _mod(M[i, j], piv) != 0:
                    bad = i
                    break
            if bad >= 0:
                break
        if bad >= 0:
            for k in range(n):
                M[t, k] += M[bad, k]
            for k in range(m):
                UT[bad, k] -= UT[t, k]
                R[t, k] += R[bad, k]
            _guard_row(M[t], 0)
            _guard_row(UT[bad], 0)
            _guard_row(R[t], 0)
            continue
        if piv < 0:
            for k in range(n):
                M[t, k] = -M[t, k]
            for k in range(m):
                UT[t, k] = -UT[t, k]
                R[t, k] = -R[t, k]
        t += 1
    S = np.asarray(M).tolist()
    U = np.asarray(UT).T.tolist()
    W = np.asarray(WT).T.tolist()
    return S, U, np.asarray(R).tolist(), np.asarray(V).tolist(), W


def brute_force(a, b, c, moduli, Py_ssize_t nvars, Py_ssize_t identity_index):
    cdef int64_t[:] ea = np.ascontiguousarray(a, dtype=np.int64)
    cdef int64_t[:] eb = np.ascontiguousarray(b, dtype=np.int64)
    cdef int64_t[:] ec = np.ascontiguousarray(c, dtype=np.int64)
    cdef int64_t[:] mods = np.ascontiguousarray(moduli, dtype=np.int64)
    cdef Py_ssize_t k = mods.shape[0]
    cdef Py_ssize_t neq = ea.shape[0]
    cdef int64_t[:, :] vals = np.zeros((nvars, k), dtype=np.int64)
    cdef Py_ssize_t nfree = nvars - 1 if nvars > 0 else 0
    cdef Py_ssize_t ndig = nfree * k
    cdef int64_t[:] slot = np.zeros(ndig, dtype=np.int64)
    cdef int64_t[:] radix = np.zeros(ndig, dtype=np.int64)
    cdef Py_ssize_t pos, g, j, e, d
    cdef bint ok
    cdef int64_t r
    out = []
    pos = 0
    for g in range(nvars):
        if g == identity_index:
            continue
        for j in range(k):
            slot[pos] = g * k + j
            radix[pos] = mods[j]
            pos += 1
    while True:
        ok = True
        for e in range(neq):
            for j in range(k):
                r = vals[ea[e], j] + vals[eb[e], j] - 2 * vals[ec[e], j]
                if _mod(r, mods[j]) != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(np.array(vals, copy=True))
        # odometer: last digit fastest, matching itertools.product order
        d = ndig - 1
        while d >= 0:
            g = slot[d] // k
            j = slot[d] % k
            vals[g, j] += 1
            if vals[g, j] < radix[d]:
                break
            vals[g, j] = 0
            d -= 1
        if d < 0:
            break
    if not out:
        return np.zeros((0, nvars, k), dtype=np.int64)
    return np.stack(out)
