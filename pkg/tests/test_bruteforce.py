"""Naive-oracle semantics and the structural facts behind the height checks."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyckq.bruteforce import (
    SubstringWitness,
    bf_find_mismatched_zero,
    bf_leftmost_imbalance,
    bf_prefix_minimal_zeros,
    bf_rightmost_imbalance,
    flank_structure_holds,
    interior_lemma_holds,
)
from dyckq.model import BracketString, height


def triple_loop_extremes(S, l, r, v, d):
    """Second, independent enumerator: list all candidates, take extremes."""
    cands = []
    P = S.prefix
    for i in range(l, r + 1):
        for j in range(i, min(r, i + d - 1) + 1):
            f = int(P[j] - P[i - 1])
            if abs(f) == v:
                cands.append(SubstringWitness(i, j, 1 if f > 0 else -1))
    if not cands:
        return None, None
    return (min(cands, key=lambda w: (w.i, w.j)),
            max(cands, key=lambda w: (w.j, w.i)))


def test_leftmost_examples():
    S = BracketString([1, 3, 4, 4])
    assert bf_leftmost_imbalance(S, 1, 4, 2, 2) == (1, 2, 1)
    assert bf_leftmost_imbalance(S, 3, 4, 2, 2) == (3, 4, -1)
    assert bf_leftmost_imbalance(BracketString([3, 4]), 1, 2, 2, 2) is None


def test_rightmost_examples():
    assert bf_rightmost_imbalance(BracketString([1, 3, 4, 4]), 1, 2, 2, 2) == (1, 2, 1)
    assert bf_rightmost_imbalance(BracketString([1, 1, 2, 2]), 1, 4, 2, 4) == (3, 4, -1)
    assert bf_rightmost_imbalance(BracketString([1, 2]), 1, 2, 3, 2) is None


def test_window_validation():
    S = BracketString([1, 2])
    with pytest.raises(ValueError):
        bf_leftmost_imbalance(S, 2, 1, 1, 1)
    with pytest.raises(ValueError):
        bf_rightmost_imbalance(S, 1, 3, 1, 1)
    with pytest.raises(ValueError):
        bf_leftmost_imbalance(S, 1, 2, 0, 1)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=128), st.data())
@settings(max_examples=200, deadline=None)
def test_scans_match_triple_loop(codes, data):
    S = BracketString(codes, T=2)
    l = data.draw(st.integers(1, S.n))
    r = data.draw(st.integers(l, S.n))
    v = data.draw(st.integers(1, 5))
    d = data.draw(st.integers(1, S.n))
    exp_left, exp_right = triple_loop_extremes(S, l, r, v, d)
    assert bf_leftmost_imbalance(S, l, r, v, d) == exp_left
    assert bf_rightmost_imbalance(S, l, r, v, d) == exp_right


def test_prefix_minimal_zero_examples():
    S = BracketString([1, 3, 4, 2])
    assert bf_prefix_minimal_zeros(S, 2) == [(1, 4)]
    assert bf_prefix_minimal_zeros(S, 1) == [(2, 3)]
    assert bf_prefix_minimal_zeros(BracketString([1, 2]), 2) == []


def test_prefix_minimal_zero_is_first_return():
    # "[][]": (1,2) and (3,4) are prefix-minimal at height 1; (1,4) is not
    # prefix-minimal; "][" at (2,3) is a 0-substring of height 0.
    S = BracketString([1, 2, 1, 2])
    assert bf_prefix_minimal_zeros(S, 1) == [(1, 2), (3, 4)]
    assert bf_prefix_minimal_zeros(S, 0) == [(2, 3)]


def test_find_mismatched_zero_examples():
    assert bf_find_mismatched_zero(BracketString([1, 3, 4, 4]), 2) == (1, 4)
    assert bf_find_mismatched_zero(BracketString([1, 3, 2, 4]), 1) == (2, 3)
    for v in (1, 2, 3):
        assert bf_find_mismatched_zero(BracketString([1, 3, 4, 2]), v) is None


def test_flank_structure_examples():
    assert flank_structure_holds(BracketString([1, 3, 4, 2]), 2)
    assert flank_structure_holds(BracketString([1, 1, 2, 2]), 2)
    assert flank_structure_holds(BracketString([3, 4]), 1)


def all_words(max_len, types=2):
    for length in range(max_len + 1):
        yield from itertools.product(range(1, 2 * types + 1), repeat=length)


def test_lemmas_exhaustive_short():
    for combo in all_words(6):
        S = BracketString(combo, T=2)
        h = height(S, 1, S.n) if S.n else 0
        for v in range(1, h + 1):
            assert flank_structure_holds(S, v), combo
            if v >= 2:
                assert interior_lemma_holds(S, v), combo


def test_lemmas_random_sample():
    rng = np.random.Generator(np.random.PCG64(3))
    for _ in range(1500):
        n = int(rng.integers(1, 65))
        codes = rng.integers(1, 5, size=n)
        S = BracketString(codes, T=2)
        h = height(S, 1, n)
        for v in range(1, h + 1):
            assert flank_structure_holds(S, v)
            if v >= 2:
                assert interior_lemma_holds(S, v)


def test_interior_lemma_rejects_v_below_two():
    with pytest.raises(ValueError):
        interior_lemma_holds(BracketString([1, 2]), 1)
