"""Exhaustive classical oracles.

These provide exact semantics for the idealized search subroutines and
ground truth for the structural facts the height-by-height checker relies
on.  They are deliberately naive (quadratic and worse): they exist for
correctness, not speed.
"""

from __future__ import annotations

from typing import NamedTuple

from .model import BracketString, type_of, well_balanced

__all__ = [
    "SubstringWitness",
    "bf_leftmost_imbalance",
    "bf_rightmost_imbalance",
    "bf_prefix_minimal_zeros",
    "bf_find_mismatched_zero",
    "flank_structure_holds",
    "interior_lemma_holds",
    "zero_substrings",
]


class SubstringWitness(NamedTuple):
    """Location (1-based, inclusive) and balance sign of an imbalance-v
    substring."""

    i: int
    j: int
    sigma: int


def _validate_window(S: BracketString, l: int, r: int, v: int, d: int) -> None:
    if not 1 <= l <= r <= S.n:
        raise ValueError(f"window [{l}, {r}] invalid for n={S.n}")
    if v < 1 or d < 1:
        raise ValueError(f"need v >= 1 and d >= 1, got v={v} d={d}")


def bf_leftmost_imbalance(S: BracketString, l: int, r: int, v: int, d: int):
    """Leftmost substring of S[l, r] with |balance| = v and length <= d:
    smallest start, ties broken by smallest end.  None when absent."""
    _validate_window(S, l, r, v, d)
    P = S.prefix
    for i in range(l, r + 1):
        top = min(r, i + d - 1)
        for j in range(i, top + 1):
            f = int(P[j] - P[i - 1])
            if f == v:
                return SubstringWitness(i, j, 1)
            if f == -v:
                return SubstringWitness(i, j, -1)
    return None


def bf_rightmost_imbalance(S: BracketString, l: int, r: int, v: int, d: int):
    """Mirror of :func:`bf_leftmost_imbalance`: largest end, ties broken by
    largest start."""
    _validate_window(S, l, r, v, d)
    P = S.prefix
    for j in range(r, l - 1, -1):
        low = max(l, j - d + 1)
        for i in range(j, low - 1, -1):
            f = int(P[j] - P[i - 1])
            if f == v:
                return SubstringWitness(i, j, 1)
            if f == -v:
                return SubstringWitness(i, j, -1)
    return None


def bf_prefix_minimal_zeros(S: BracketString, v: int) -> list[tuple[int, int]]:
    """All (l, r) with balance 0 and height exactly v such that no proper
    prefix S[l, r'] already has balance 0.  For each start there is at most
    one such end: the first return to balance 0."""
    P = S.prefix
    out = []
    for l in range(1, S.n + 1):
        base = int(P[l - 1])
        high = -1
        for r in range(l, S.n + 1):
            cur = int(P[r]) - base
            if cur > high:
                high = cur
            if cur == 0:
                if high == v:
                    out.append((l, r))
                break
    return out


def bf_find_mismatched_zero(S: BracketString, v: int):
    """Leftmost prefix-minimal 0-substring of height v whose first and last
    brackets have different types; None when every one type-matches."""
    for l, r in bf_prefix_minimal_zeros(S, v):
        if type_of(S.sym(l)) != type_of(S.sym(r)):
            return (l, r)
    return None


def zero_substrings(S: BracketString, height_exact: int) -> list[tuple[int, int]]:
    """All (l, r) with balance 0 and height exactly ``height_exact``."""
    P = S.prefix
    out = []
    for l in range(1, S.n + 1):
        base = int(P[l - 1])
        high = -1
        for r in range(l, S.n + 1):
            cur = int(P[r]) - base
            if cur > high:
                high = cur
            if cur == 0 and high == height_exact:
                out.append((l, r))
    return out


def _has_imbalance(S: BracketString, l: int, r: int, v: int) -> bool:
    """Exhaustively: does S[l, r] contain any substring with |balance| = v?"""
    if l > r:
        return False
    P = S.prefix
    for i in range(l, r + 1):
        for j in range(i, r + 1):
            if abs(int(P[j] - P[i - 1])) == v:
                return True
    return False


def flank_structure_holds(S: BracketString, v: int) -> bool:
    """Every prefix-minimal 0-substring S[l, r] of height v must split as a
    +v prefix S[l, r'], a -v suffix S[l', r], and a middle S[r'+1, l'-1]
    free of imbalance-v substrings, for some l <= r' < l' <= r.  Checked by
    exhaustive search over (r', l')."""
    P = S.prefix
    for l, r in bf_prefix_minimal_zeros(S, v):
        found = False
        for rp in range(l, r):
            if int(P[rp] - P[l - 1]) != v:
                continue
            for lp in range(rp + 1, r + 1):
                if int(P[r] - P[lp - 1]) != -v:
                    continue
                if not _has_imbalance(S, rp + 1, lp - 1, v):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def interior_lemma_holds(S: BracketString, v: int) -> bool:
    """If every 0-substring of height v-1 is well-balanced, then the interior
    of every prefix-minimal 0-substring of height v must be empty or
    well-balanced.  True when the implication holds (vacuously when the
    precondition fails)."""
    if v < 2:
        raise ValueError("lemma applies for v >= 2")
    for l, r in zero_substrings(S, v - 1):
        if not well_balanced(S, l, r):
            return True
    for l, r in bf_prefix_minimal_zeros(S, v):
        if r - l + 1 > 2 and not well_balanced(S, l + 1, r - 1):
            return False
    return True
