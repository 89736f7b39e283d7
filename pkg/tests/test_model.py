"""Encoding arithmetic, the reference recognizer, and the generators."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dyckq.model import (
    BracketString,
    DyckParams,
    ParseError,
    balance,
    classical_check,
    corrupt,
    gen_balanced,
    height,
    open_of,
    parse_text,
    to_text,
    type_of,
    well_balanced,
)

# ---------------------------------------------------------------------------
# code arithmetic


@pytest.mark.parametrize("code,expected", [(1, 1), (2, 1), (3, 2), (4, 2)])
def test_type_of(code, expected):
    assert type_of(code) == expected


@pytest.mark.parametrize("code,expected", [(1, 1), (4, 0), (2, 0), (3, 1)])
def test_open_of(code, expected):
    assert open_of(code) == expected


@given(st.integers(min_value=1, max_value=512))
def test_code_round_trip(code):
    assert 2 * type_of(code) - open_of(code) == code


# ---------------------------------------------------------------------------
# balance and height


def test_balance_examples():
    S = BracketString([1, 2, 3, 4])  # "[ ] ( )"
    assert balance(S, 2, 2) == -1
    assert balance(S, 2, 4) == -1
    assert balance(BracketString([1, 3, 4, 2]), 1, 4) == 0
    assert balance(BracketString([1, 3, 4, 4]), 1, 2) == 2


def test_balance_empty_range_is_zero():
    S = BracketString([1, 2])
    assert balance(S, 2, 1) == 0


def test_balance_bounds_checked():
    S = BracketString([1, 2])
    with pytest.raises(IndexError):
        balance(S, 0, 2)
    with pytest.raises(IndexError):
        balance(S, 1, 3)


def test_height_examples():
    assert height(BracketString([1, 3, 4, 2]), 1, 4) == 2
    assert height(BracketString([3, 4]), 1, 2) == 1
    assert height(BracketString([2, 1]), 1, 2) == 0


@given(st.lists(st.integers(1, 4), min_size=1, max_size=256),
       st.data())
def test_balance_additivity(codes, data):
    S = BracketString(codes, T=2)
    l = data.draw(st.integers(1, S.n))
    r = data.draw(st.integers(l, S.n))
    if l < r:
        m = data.draw(st.integers(l, r - 1))
        assert balance(S, l, r) == balance(S, l, m) + balance(S, m + 1, r)


# ---------------------------------------------------------------------------
# the reference recognizer


def naive_verdict(codes, k, t):
    """Independent oracle: direct transcription of the recursive definition
    (empty / two well-balanced parts / type-matched embrace), combined with
    explicit height and distinct-type conditions."""
    memo = {}

    def wb(l, r):  # half-open
        if l >= r:
            return True
        key = (l, r)
        if key in memo:
            return memo[key]
        ok = False
        bal = 0
        for i in range(l, r - 1):
            bal += 1 if codes[i] % 2 else -1
            if bal == 0 and wb(l, i + 1) and wb(i + 1, r):
                ok = True
                break
        if not ok:
            first, last = codes[l], codes[r - 1]
            if (first % 2 == 1 and last % 2 == 0
                    and (first + 1) // 2 == (last + 1) // 2):
                ok = wb(l + 1, r - 1)
        memo[key] = ok
        return ok

    heights, cur = [0], 0
    for c in codes:
        cur += 1 if c % 2 else -1
        heights.append(cur)
    distinct = len({(c + 1) // 2 for c in codes})
    return int(wb(0, len(codes)) and max(heights) <= k and distinct <= t)


def test_classical_check_examples():
    assert classical_check(BracketString([1, 3, 4, 2]), DyckParams(2, 2, 4)) == 1
    assert classical_check(BracketString([1, 3, 2, 4]), DyckParams(2, 2, 4)) == 0
    assert classical_check(BracketString([]), DyckParams(1, 1, 0)) == 1


def test_classical_check_enforces_each_condition():
    S = BracketString([1, 1, 2, 2])
    assert classical_check(S, DyckParams(2, 1, 4)) == 1
    assert classical_check(S, DyckParams(1, 1, 4)) == 0  # height 2
    two_types = BracketString([1, 3, 4, 2])
    assert classical_check(two_types, DyckParams(2, 1, 4)) == 0  # 2 types
    assert classical_check(BracketString([2, 1]), DyckParams(2, 2, 2)) == 0


def test_classical_check_matches_naive_exhaustively():
    import itertools

    for length in range(0, 9):
        for combo in itertools.product((1, 2, 3, 4), repeat=length):
            got = classical_check(BracketString(combo, T=2), DyckParams(4, 2, length))
            assert got == naive_verdict(combo, 4, 2), combo


def test_classical_check_matches_naive_random():
    rng = np.random.Generator(np.random.PCG64(7))
    for _ in range(100_000):
        n = int(rng.integers(1, 257))
        t = int(rng.integers(1, 5))
        k = int(rng.integers(1, 9))
        codes = rng.integers(1, 2 * t + 1, size=n)
        got = classical_check(BracketString(codes, T=t), DyckParams(k, t, n))
        assert got == naive_verdict(codes.tolist(), k, t)


def test_well_balanced_substring():
    S = BracketString([2, 1, 3, 4, 1])  # "] [ ( ) ["
    assert well_balanced(S, 2, 4) is False
    assert well_balanced(S, 3, 4) is True
    assert well_balanced(S, 3, 2) is True  # empty


# ---------------------------------------------------------------------------
# generators


def test_gen_balanced_forced_cases():
    assert gen_balanced(2, 1, 1, seed=0).codes.tolist() == [1, 2]
    for seed in range(10):
        assert gen_balanced(4, 2, 1, seed=seed).codes.tolist() == [1, 1, 2, 2]


def test_gen_balanced_postconditions():
    rng = np.random.Generator(np.random.PCG64(1))
    for _ in range(200):
        k = int(rng.integers(1, 6))
        t = int(rng.integers(1, 5))
        n = 2 * int(rng.integers(max(1, k), 4 * k + 4))
        seed = int(rng.integers(2 ** 32))
        S = gen_balanced(n, k, t, seed)
        assert classical_check(S, DyckParams(k, t, n)) == 1
        if n >= 2 * k:
            assert height(S, 1, n) == k
        assert S == gen_balanced(n, k, t, seed)  # deterministic


def test_gen_balanced_rejects_bad_arguments():
    with pytest.raises(ValueError):
        gen_balanced(3, 1, 1, seed=0)
    with pytest.raises(ValueError):
        gen_balanced(0, 1, 1, seed=0)


@pytest.mark.parametrize("mode", ["type-swap", "balance-break",
                                  "height-exceed", "code-overflow"])
def test_corrupt_postconditions(mode):
    rng = np.random.Generator(np.random.PCG64(2))
    for _ in range(100):
        k = int(rng.integers(1, 5))
        t = 2 if mode == "type-swap" else int(rng.integers(1, 5))
        n = 2 * int(rng.integers(max(1, k), 3 * k + 3))
        params = DyckParams(k, t, n)
        S = gen_balanced(n, k, t, int(rng.integers(2 ** 32)))
        damaged = corrupt(S, mode, int(rng.integers(2 ** 32)), params)
        assert classical_check(damaged, DyckParams(k, t, damaged.n)) == 0
        if mode != "height-exceed":
            assert damaged.n == S.n
            assert (damaged.codes != S.codes).sum() >= 1
        if mode == "type-swap":
            assert np.array_equal(damaged.opens, S.opens)
            assert balance(damaged, 1, n) == balance(S, 1, n)
        if mode == "code-overflow":
            assert damaged.codes.max() > 2 * t


def test_corrupt_type_swap_needs_two_types():
    S = gen_balanced(4, 1, 1, seed=0)
    with pytest.raises(ValueError):
        corrupt(S, "type-swap", 0, DyckParams(1, 1, 4))


def test_corrupt_rejects_unknown_mode_and_empty():
    with pytest.raises(ValueError):
        corrupt(BracketString([1, 2]), "nope", 0, DyckParams(1, 1, 2))
    with pytest.raises(ValueError):
        corrupt(BracketString([]), "balance-break", 0, DyckParams(1, 1, 0))


# ---------------------------------------------------------------------------
# text I/O


def test_parse_chars_fixed_mapping():
    assert parse_text("[()]").codes.tolist() == [1, 3, 4, 2]
    assert parse_text("{}<>").codes.tolist() == [5, 6, 7, 8]


def test_parse_codes_both_separators():
    assert parse_text("1 3 4 2").codes.tolist() == [1, 3, 4, 2]
    assert parse_text("1,3,4,2").codes.tolist() == [1, 3, 4, 2]
    assert parse_text("").n == 0


def test_parse_errors_name_position():
    with pytest.raises(ParseError) as exc:
        parse_text("[(x)]")
    assert exc.value.position == 3
    with pytest.raises(ParseError) as exc:
        parse_text("1 eh 2")
    assert exc.value.position == 2
    with pytest.raises(ParseError):
        parse_text("0 1")


@given(st.lists(st.integers(1, 8), max_size=64))
def test_text_round_trip(codes):
    S = BracketString(codes)
    assert parse_text(to_text(S)).codes.tolist() == codes
    if codes:
        assert parse_text(to_text(S, chars=True)).codes.tolist() == codes


def test_bracket_string_validation():
    with pytest.raises(ValueError):
        BracketString([0, 1])
    with pytest.raises(ValueError):
        BracketString([5], T=2)
    S = BracketString([1, 2], T=3)
    assert S.T == 3
    with pytest.raises(IndexError):
        S.sym(3)
    with pytest.raises(AttributeError):
        S.n = 7
