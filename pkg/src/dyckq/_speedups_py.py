"""Pure-Python fallback for the compiled kernels in ``_speedups``.

Same entry points and semantics as the Cython module; this version keeps the
package importable without a compiler and pins the reference behaviour the
extension is tested against.  All index arguments are 1-based positions into
the word; prefix-balance arrays carry ``n + 1`` entries with ``P[0] = 0``.
"""

from __future__ import annotations

import math

BACKEND_NAME = "python"


def classical_check_codes(codes, k, t, T) -> int:
    """Stack pass: well-balanced with matching types, height <= k, at most
    t distinct types.  Returns 1/0, never raises on word content."""
    stack = []
    seen = set()
    for x in codes:
        c = int(x)
        ty = (c + 1) // 2
        if ty < 1 or ty > T:
            return 0
        seen.add(ty)
        if c & 1:
            if len(stack) >= k:
                return 0
            stack.append(ty)
        else:
            if not stack or stack[-1] != ty:
                return 0
            stack.pop()
    if stack:
        return 0
    return 1 if len(seen) <= t else 0


def pm_tables(P, v: int):
    """Jump tables for imbalance-v substring scans.

    nxt_pos[m] = smallest j > m with P[j] == P[m] + v (n + 1 when none), and
    symmetrically nxt_neg / prv_pos / prv_neg.  A +v-substring S[i, j] is
    exactly a pair with P[j] - P[i - 1] == v, so these tables answer "nearest
    imbalance-v substring from this endpoint" in O(1).
    """
    P = [int(x) for x in P]
    n = len(P) - 1
    miss = n + 1
    off = n + v + 1
    size = 2 * off + 1
    nearest = [miss] * size
    nxt_pos = [miss] * (n + 1)
    nxt_neg = [miss] * (n + 1)
    for m in range(n, -1, -1):
        p = P[m]
        nxt_pos[m] = nearest[p + v + off]
        nxt_neg[m] = nearest[p - v + off]
        nearest[p + off] = m
    latest = [-1] * size
    prv_pos = [-1] * (n + 1)
    prv_neg = [-1] * (n + 1)
    for j in range(n + 1):
        p = P[j]
        prv_pos[j] = latest[p - v + off]
        prv_neg[j] = latest[p + v + off]
        latest[p + off] = j
    return nxt_pos, nxt_neg, prv_pos, prv_neg


def scan_leftmost(nxt_pos, nxt_neg, l: int, r: int, d: int):
    """Leftmost imbalance substring in [l, r] with length <= d: smallest
    start, ties broken by smallest end.  Returns (i, j, sigma) or None."""
    for i in range(l, r + 1):
        m = i - 1
        jp = nxt_pos[m]
        jn = nxt_neg[m]
        if jp < jn:
            j, sigma = jp, 1
        else:
            j, sigma = jn, -1
        bound = r if r < m + d else m + d
        if j <= bound:
            return (i, j, sigma)
    return None


def scan_rightmost(prv_pos, prv_neg, l: int, r: int, d: int):
    """Mirror of scan_leftmost: largest end, ties broken by largest start."""
    for j in range(r, l - 1, -1):
        mp = prv_pos[j]
        mn = prv_neg[j]
        if mp > mn:
            m, sigma = mp, 1
        else:
            m, sigma = mn, -1
        low = l - 1 if l - 1 > j - d else j - d
        if m >= low:
            return (m + 1, j, sigma)
    return None


def scan_cost(width: int, v: int, c_grover: float) -> int:
    """Ledger charge of one idealized imbalance-substring search over a
    window of ``width`` symbols."""
    e = 0.5 * (v - 2)
    if e < 0.0:
        e = 0.0
    return math.ceil(c_grover * math.sqrt(width) * max(math.log2(width), 2.0) ** e)


def run_attempts(types, P, nxt_pos, nxt_neg, prv_pos, prv_neg,
                 n: int, v: int, d: int, b_arr, eps_arr, eps: float,
                 c_grover: float):
    """Run the randomized mismatch probe once per start index in ``b_arr``
    until it yields a witness.

    Each attempt searches the leftmost imbalance-v substring right of b and
    the rightmost one to its left (or the symmetric pair when the right
    search misses), then tests the flank conditions: positive left sign,
    negative right sign, a shared base level (P[j_r] == P[i_l - 1], which the
    flanks of a mismatched 0-substring satisfy by construction), and
    differing endpoint types.  Idealized search charges accumulate into
    ``scratch``; ``eps_arr`` supplies the uniforms for injected one-sided
    errors (consumed only when a search actually found something).

    Returns (attempt_index or -1, i_l, j_r, scratch_total).
    """
    scratch = 0
    ei = 0
    for a in range(len(b_arr)):
        b = int(b_arr[a])
        hi = n if n < b + d - 1 else b + d - 1
        scratch += scan_cost(hi - b + 1, v, c_grover)
        u_r = scan_leftmost(nxt_pos, nxt_neg, b, hi, d)
        if u_r is not None and eps > 0.0:
            if eps_arr[ei] < eps:
                u_r = None
            ei += 1
        if u_r is not None:
            i_r = u_r[0]
            lo2 = i_r - d if i_r - d > 1 else 1
            hi2 = i_r - 1
            u_l = None
            if lo2 <= hi2:
                scratch += scan_cost(hi2 - lo2 + 1, v, c_grover)
                u_l = scan_rightmost(prv_pos, prv_neg, lo2, hi2, d)
                if u_l is not None and eps > 0.0:
                    if eps_arr[ei] < eps:
                        u_l = None
                    ei += 1
        else:
            lo2 = b - d + 1 if b - d + 1 > 1 else 1
            scratch += scan_cost(b - lo2 + 1, v, c_grover)
            u_l = scan_rightmost(prv_pos, prv_neg, lo2, b, d)
            if u_l is not None and eps > 0.0:
                if eps_arr[ei] < eps:
                    u_l = None
                ei += 1
            if u_l is not None:
                j_l = u_l[1]
                lo3 = j_l + 1
                hi3 = n if n < j_l + d else j_l + d
                if lo3 <= hi3:
                    scratch += scan_cost(hi3 - lo3 + 1, v, c_grover)
                    u_r = scan_leftmost(nxt_pos, nxt_neg, lo3, hi3, d)
                    if u_r is not None and eps > 0.0:
                        if eps_arr[ei] < eps:
                            u_r = None
                        ei += 1
        if (u_l is not None and u_r is not None
                and u_l[2] == 1 and u_r[2] == -1
                and P[u_r[1]] == P[u_l[0] - 1]
                and types[u_l[0] - 1] != types[u_r[1] - 1]):
            return (a, u_l[0], u_r[1], scratch)
    return (-1, 0, 0, scratch)
