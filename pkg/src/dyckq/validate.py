"""Self-check suites behind the ``validate`` CLI subcommand.

Each suite returns a list of (name, passed, detail) rows.  These are sized
for interactive use; the pytest suite runs the full-size versions.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .bruteforce import (
    bf_leftmost_imbalance,
    bf_rightmost_imbalance,
    flank_structure_holds,
    interior_lemma_holds,
)
from .ledger import QueryLedger, SubroutineModel
from .model import BracketString, DyckParams, classical_check, corrupt, gen_balanced, height
from .querysim import grover_search_marked, statevector_grover
from .solver import solve_boosted

SUITES = ("lemmas", "grover", "e2e", "all")


def _naive_well_balanced(codes: tuple[int, ...]) -> bool:
    """Recursive definition, transcribed directly: empty, or a split into
    two well-balanced parts, or a type-matched pair embracing a well-balanced
    interior.  Test-oracle quality, memoized on substrings."""
    memo: dict[tuple[int, int], bool] = {}

    def wb(l: int, r: int) -> bool:  # half-open [l, r)
        if l >= r:
            return True
        key = (l, r)
        hit = memo.get(key)
        if hit is not None:
            return hit
        bal = 0
        ok = False
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

    return wb(0, len(codes))


def _all_words(max_len: int, types: int):
    alphabet = range(1, 2 * types + 1)
    for length in range(max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            yield combo


def _random_word(rng, max_len: int, types: int) -> BracketString:
    n = int(rng.integers(1, max_len + 1))
    return BracketString(rng.integers(1, 2 * types + 1, size=n), T=types)


def suite_lemmas(max_len: int = 6, random_trials: int = 2000, seed: int = 0):
    rng = np.random.Generator(np.random.PCG64(seed))
    results = []

    interior_bad = flank_bad = 0
    words = 0
    for combo in _all_words(max_len, 2):
        S = BracketString(combo, T=2)
        h = height(S, 1, S.n) if S.n else 0
        for v in range(1, h + 1):
            if v >= 2 and not interior_lemma_holds(S, v):
                interior_bad += 1
            if not flank_structure_holds(S, v):
                flank_bad += 1
        words += 1
    for _ in range(random_trials):
        S = _random_word(rng, 48, 2)
        h = height(S, 1, S.n)
        for v in range(1, h + 1):
            if v >= 2 and not interior_lemma_holds(S, v):
                interior_bad += 1
            if not flank_structure_holds(S, v):
                flank_bad += 1
        words += 1
    results.append(("interior-well-balanced", interior_bad == 0,
                    f"{words} words, {interior_bad} counterexamples"))
    results.append(("flank-structure", flank_bad == 0,
                    f"{words} words, {flank_bad} counterexamples"))

    mism = 0
    checks = 0
    for _ in range(400):
        S = _random_word(rng, 32, 2)
        for _ in range(4):
            l = int(rng.integers(1, S.n + 1))
            r = int(rng.integers(l, S.n + 1))
            v = int(rng.integers(1, 4))
            d = int(rng.integers(1, r - l + 2))
            left = bf_leftmost_imbalance(S, l, r, v, d)
            right = bf_rightmost_imbalance(S, l, r, v, d)
            exp_left, exp_right = _triple_loop_extremes(S, l, r, v, d)
            checks += 1
            if left != exp_left or right != exp_right:
                mism += 1
    results.append(("scan-vs-triple-loop", mism == 0,
                    f"{checks} windows, {mism} mismatches"))
    return results


def _triple_loop_extremes(S, l, r, v, d):
    """Independent enumerator: lists every candidate, then picks extremes."""
    from .bruteforce import SubstringWitness

    cands = []
    P = S.prefix
    for i in range(l, r + 1):
        for j in range(i, r + 1):
            if j - i + 1 > d:
                continue
            f = int(P[j] - P[i - 1])
            if abs(f) == v:
                cands.append(SubstringWitness(i, j, 1 if f > 0 else -1))
    if not cands:
        return None, None
    left = min(cands, key=lambda w: (w.i, w.j))
    right = max(cands, key=lambda w: (w.j, w.i))
    return left, right


def suite_grover(seed: int = 0):
    results = []
    worst = 0.0
    for expo in range(1, 9):
        N = 2 ** expo
        rng = np.random.Generator(np.random.PCG64(seed + expo))
        for m_count in (1, 2, 3):
            if m_count > N:
                continue
            marked = (rng.permutation(N)[:m_count] + 1).tolist()
            theta = math.asin(math.sqrt(m_count / N))
            for j in range(0, int(2 * math.sqrt(N)) + 1):
                got = statevector_grover(N, marked, j)
                want = math.sin((2 * j + 1) * theta) ** 2
                worst = max(worst, abs(got - want))
    results.append(("statevector-vs-closed-form", worst <= 1e-9,
                    f"max abs deviation {worst:.3e}"))

    model = SubroutineModel(rng_seed=seed)
    rng = np.random.Generator(np.random.PCG64(seed))
    trials = 2000
    ok = True
    detail = []
    for N, M in ((64, 1), (1024, 1), (1024, 16)):
        marked = np.arange(1, M + 1)
        hits = 0
        for _ in range(trials):
            out = grover_search_marked(marked, N, 1.0, model, QueryLedger(), rng)
            if out.found is not None:
                if not 1 <= out.found <= M:
                    ok = False
                hits += 1
        rate = hits / trials
        detail.append(f"N={N},M={M}:{rate:.3f}")
        if rate < 0.5:
            ok = False
    results.append(("search-success-and-soundness", ok, " ".join(detail)))
    return results


def suite_e2e(seed: int = 0, random_trials: int = 150):
    rng = np.random.Generator(np.random.PCG64(seed))
    results = []
    disagreements = 0
    cases = 0
    for combo in _all_words(5, 2):
        S = BracketString(combo, T=2)
        params = DyckParams(4, 2, S.n)
        expected = classical_check(S, params)
        got = solve_boosted(S, params, SubroutineModel(rng_seed=cases + 1),
                            reps=15, early_stop=True).verdict
        cases += 1
        if got != expected:
            disagreements += 1
    results.append(("exhaustive-short-words", disagreements == 0,
                    f"{cases} words, {disagreements} disagreements"))

    disagreements = 0
    for i in range(random_trials):
        n = int(2 ** rng.integers(2, 9))
        k = int(rng.integers(1, 5))
        t = int(rng.integers(1, 5))
        S = gen_balanced(n, k, t, seed=int(rng.integers(2 ** 32)))
        if i % 2:
            modes = ["balance-break", "height-exceed", "code-overflow"]
            if t >= 2:
                modes.append("type-swap")
            mode = modes[int(rng.integers(len(modes)))]
            S = corrupt(S, mode, int(rng.integers(2 ** 32)), DyckParams(k, t, n))
        params = DyckParams(k, t, S.n)
        expected = classical_check(S, params)
        got = solve_boosted(S, params, SubroutineModel(rng_seed=int(rng.integers(2 ** 32))),
                            reps=15, early_stop=True).verdict
        if got != expected:
            disagreements += 1
    frac = 1 - disagreements / random_trials
    results.append(("random-instances", frac >= 0.99,
                    f"{random_trials} instances, agreement {frac:.3f}"))
    return results


def run_suite(name: str, seed: int = 0):
    if name == "lemmas":
        return suite_lemmas(seed=seed)
    if name == "grover":
        return suite_grover(seed=seed)
    if name == "e2e":
        return suite_e2e(seed=seed)
    if name == "all":
        return suite_lemmas(seed=seed) + suite_grover(seed=seed) + suite_e2e(seed=seed)
    raise ValueError(f"unknown suite {name!r}")
