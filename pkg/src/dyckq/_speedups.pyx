# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the classical reference pass, imbalance-substring jump
tables and scans, and the randomized mismatch-probe attempt loop.

Mirrors ``_speedups_py`` exactly; both backends are cross-tested.
"""

from libc.math cimport ceil, log2, pow, sqrt
from libc.stdlib cimport free, malloc

import numpy as np

BACKEND_NAME = "c"


def classical_check_codes(codes, long long k, long long t, long long T):
    cdef const long long[::1] cv = np.ascontiguousarray(codes, dtype=np.int64)
    cdef Py_ssize_t n = cv.shape[0]
    if n == 0:
        return 1
    cdef long long *stack = <long long *> malloc((n + 1) * sizeof(long long))
    cdef unsigned char *seen = <unsigned char *> malloc((T + 2) * sizeof(unsigned char))
    if stack == NULL or seen == NULL:
        free(stack)
        free(seen)
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(T + 2):
        seen[i] = 0
    cdef long long c, ty, depth = 0, distinct = 0
    cdef int ok = 1
    for i in range(n):
        c = cv[i]
        ty = (c + 1) // 2
        if ty < 1 or ty > T:
            ok = 0
            break
        if not seen[ty]:
            seen[ty] = 1
            distinct += 1
        if c & 1:
            if depth >= k:
                ok = 0
                break
            stack[depth] = ty
            depth += 1
        else:
            if depth == 0 or stack[depth - 1] != ty:
                ok = 0
                break
            depth -= 1
    if ok and (depth != 0 or distinct > t):
        ok = 0
    free(stack)
    free(seen)
    return ok


def pm_tables(P, long long v):
    """Jump tables for imbalance-v substring scans (see _speedups_py)."""
    cdef const long long[::1] pv = np.ascontiguousarray(P, dtype=np.int64)
    cdef Py_ssize_t n = pv.shape[0] - 1
    cdef long long miss = n + 1
    cdef long long off = n + v + 1
    cdef Py_ssize_t size = 2 * off + 1

    nxt_pos_a = np.empty(n + 1, dtype=np.int64)
    nxt_neg_a = np.empty(n + 1, dtype=np.int64)
    prv_pos_a = np.empty(n + 1, dtype=np.int64)
    prv_neg_a = np.empty(n + 1, dtype=np.int64)
    cdef long long[::1] nxt_pos = nxt_pos_a
    cdef long long[::1] nxt_neg = nxt_neg_a
    cdef long long[::1] prv_pos = prv_pos_a
    cdef long long[::1] prv_neg = prv_neg_a

    cdef long long *mark = <long long *> malloc(size * sizeof(long long))
    if mark == NULL:
        raise MemoryError()
    cdef Py_ssize_t m, j
    cdef long long p
    for m in range(size):
        mark[m] = miss
    for m in range(n, -1, -1):
        p = pv[m]
        nxt_pos[m] = mark[p + v + off]
        nxt_neg[m] = mark[p - v + off]
        mark[p + off] = m
    for m in range(size):
        mark[m] = -1
    for j in range(n + 1):
        p = pv[j]
        prv_pos[j] = mark[p - v + off]
        prv_neg[j] = mark[p + v + off]
        mark[p + off] = j
    free(mark)
    return nxt_pos_a, nxt_neg_a, prv_pos_a, prv_neg_a


cdef inline int _scan_left(const long long[::1] nxt_pos, const long long[::1] nxt_neg,
                           long long l, long long r, long long d,
                           long long *oi, long long *oj, long long *osigma) noexcept:
    cdef long long i, m, jp, jn, j, sigma, bound
    for i in range(l, r + 1):
        m = i - 1
        jp = nxt_pos[m]
        jn = nxt_neg[m]
        if jp < jn:
            j = jp
            sigma = 1
        else:
            j = jn
            sigma = -1
        bound = r if r < m + d else m + d
        if j <= bound:
            oi[0] = i
            oj[0] = j
            osigma[0] = sigma
            return 1
    return 0


cdef inline int _scan_right(const long long[::1] prv_pos, const long long[::1] prv_neg,
                            long long l, long long r, long long d,
                            long long *oi, long long *oj, long long *osigma) noexcept:
    cdef long long j, mp, mn, m, sigma, low
    for j in range(r, l - 1, -1):
        mp = prv_pos[j]
        mn = prv_neg[j]
        if mp > mn:
            m = mp
            sigma = 1
        else:
            m = mn
            sigma = -1
        low = l - 1 if l - 1 > j - d else j - d
        if m >= low:
            oi[0] = m + 1
            oj[0] = j
            osigma[0] = sigma
            return 1
    return 0


def scan_leftmost(nxt_pos, nxt_neg, long long l, long long r, long long d):
    cdef const long long[::1] np_v = np.ascontiguousarray(nxt_pos, dtype=np.int64)
    cdef const long long[::1] nn_v = np.ascontiguousarray(nxt_neg, dtype=np.int64)
    cdef long long i = 0, j = 0, sigma = 0
    if _scan_left(np_v, nn_v, l, r, d, &i, &j, &sigma):
        return (i, j, sigma)
    return None


def scan_rightmost(prv_pos, prv_neg, long long l, long long r, long long d):
    cdef const long long[::1] pp_v = np.ascontiguousarray(prv_pos, dtype=np.int64)
    cdef const long long[::1] pn_v = np.ascontiguousarray(prv_neg, dtype=np.int64)
    cdef long long i = 0, j = 0, sigma = 0
    if _scan_right(pp_v, pn_v, l, r, d, &i, &j, &sigma):
        return (i, j, sigma)
    return None


cdef inline long long _scan_cost(long long width, long long v, double c_grover) noexcept:
    cdef double e = 0.5 * (v - 2)
    if e < 0.0:
        e = 0.0
    cdef double lg = log2(<double> width)
    if lg < 2.0:
        lg = 2.0
    return <long long> ceil(c_grover * sqrt(<double> width) * pow(lg, e))


def scan_cost(long long width, long long v, double c_grover):
    return _scan_cost(width, v, c_grover)


def run_attempts(types, P, nxt_pos, nxt_neg, prv_pos, prv_neg,
                 long long n, long long v, long long d, b_arr, eps_arr,
                 double eps, double c_grover):
    """Attempt loop of the randomized mismatch probe (see _speedups_py)."""
    cdef const long long[::1] ty = np.ascontiguousarray(types, dtype=np.int64)
    cdef const long long[::1] pv = np.ascontiguousarray(P, dtype=np.int64)
    cdef const long long[::1] npos = np.ascontiguousarray(nxt_pos, dtype=np.int64)
    cdef const long long[::1] nneg = np.ascontiguousarray(nxt_neg, dtype=np.int64)
    cdef const long long[::1] ppos = np.ascontiguousarray(prv_pos, dtype=np.int64)
    cdef const long long[::1] pneg = np.ascontiguousarray(prv_neg, dtype=np.int64)
    cdef const long long[::1] bs = np.ascontiguousarray(b_arr, dtype=np.int64)
    cdef const double[::1] us
    cdef int have_eps = eps > 0.0
    if have_eps:
        us = np.ascontiguousarray(eps_arr, dtype=np.float64)
    cdef Py_ssize_t m = bs.shape[0]
    cdef long long scratch = 0
    cdef Py_ssize_t ei = 0, a
    cdef long long b, hi, lo2, hi2, lo3, hi3
    cdef int got_r, got_l
    cdef long long ri = 0, rj = 0, rs = 0   # right-search result
    cdef long long li = 0, lj = 0, ls = 0   # left-search result
    for a in range(m):
        b = bs[a]
        hi = n if n < b + d - 1 else b + d - 1
        scratch += _scan_cost(hi - b + 1, v, c_grover)
        got_r = _scan_left(npos, nneg, b, hi, d, &ri, &rj, &rs)
        if got_r and have_eps:
            if us[ei] < eps:
                got_r = 0
            ei += 1
        got_l = 0
        if got_r:
            lo2 = ri - d if ri - d > 1 else 1
            hi2 = ri - 1
            if lo2 <= hi2:
                scratch += _scan_cost(hi2 - lo2 + 1, v, c_grover)
                got_l = _scan_right(ppos, pneg, lo2, hi2, d, &li, &lj, &ls)
                if got_l and have_eps:
                    if us[ei] < eps:
                        got_l = 0
                    ei += 1
        else:
            lo2 = b - d + 1 if b - d + 1 > 1 else 1
            scratch += _scan_cost(b - lo2 + 1, v, c_grover)
            got_l = _scan_right(ppos, pneg, lo2, b, d, &li, &lj, &ls)
            if got_l and have_eps:
                if us[ei] < eps:
                    got_l = 0
                ei += 1
            if got_l:
                lo3 = lj + 1
                hi3 = n if n < lj + d else lj + d
                if lo3 <= hi3:
                    scratch += _scan_cost(hi3 - lo3 + 1, v, c_grover)
                    got_r = _scan_left(npos, nneg, lo3, hi3, d, &ri, &rj, &rs)
                    if got_r and have_eps:
                        if us[ei] < eps:
                            got_r = 0
                        ei += 1
        if (got_l and got_r and ls == 1 and rs == -1
                and pv[rj] == pv[li - 1] and ty[li - 1] != ty[rj - 1]):
            return (<object> a, li, rj, scratch)
    return (-1, 0, 0, scratch)
