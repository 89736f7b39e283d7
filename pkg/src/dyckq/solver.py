"""The three-stage recognizer.

Stage 1 verifies the number of bracket types (either against the bounded
encoding, or by iterated maximum search when codes are arbitrary).  Stage 2
checks the untyped shape: balanced, never negative, height within bound,
treating every bracket as one type.  Stage 3 hunts, height by height, for a
balanced fragment whose flanking brackets have mismatched types.

Semantics are exact; costs are charged to the run's query ledger.  The two
cited black-box subroutines (the one-type recognizer and the nearest
imbalance-substring search) are idealized contract subroutines: classical
exact behaviour, ledger charge per their published complexity, optional
injected error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .bruteforce import SubstringWitness
from .ledger import LedgeredOracle, QueryLedger, SubroutineModel
from .model import BracketString, DyckParams
from .querysim import amplify_charge, grover_search, grover_search_marked, qmax

__all__ = [
    "CheckOutcome",
    "BoostResult",
    "check_alphabet_bounded",
    "type_below",
    "check_type_count",
    "check_shape",
    "leftmost_imbalance",
    "rightmost_imbalance",
    "probe_mismatch",
    "check_adjacent_pairs",
    "check_height",
    "check_all_heights",
    "solve",
    "solve_boosted",
    "length_grid",
]

STEP1_MODES = ("bounded", "general")


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one height check: the offending pair of positions (opening
    index, closing index) when a mismatch was found, and the queries this
    check charged."""

    wrong: tuple[int, int] | None
    queries: int


@dataclass(frozen=True)
class BoostResult:
    """Majority vote over independent solver runs."""

    verdict: int
    queries_total: int
    breakdown: dict
    votes_accept: int
    votes_reject: int
    runs: int


def _default_rng(model: SubroutineModel):
    return np.random.Generator(np.random.PCG64(model.rng_seed))


def length_grid(n: int) -> list[int]:
    """Candidate length bounds for the mismatch search: powers of two up to
    the first one covering n."""
    if n < 1:
        return [1]
    return [2 ** e for e in range(math.ceil(math.log2(n)) + 1)]


class _Run:
    """Per-run working state: the word's arrays, the jump-table cache, and
    the run's ledger/rng.  Owned by exactly one solver run."""

    __slots__ = ("S", "model", "ledger", "rng", "types", "opens", "_tables")

    def __init__(self, S: BracketString, model: SubroutineModel,
                 ledger: QueryLedger, rng):
        self.S = S
        self.model = model
        self.ledger = ledger
        self.rng = rng
        self.types = S.types
        self.opens = S.opens
        self._tables = {}

    def tables(self, v: int):
        tabs = self._tables.get(v)
        if tabs is None:
            tabs = backend.pm_tables(self.S.prefix, v)
            self._tables[v] = tabs
        return tabs


# ---------------------------------------------------------------------------
# Stage 1

def check_alphabet_bounded(S: BracketString, t: int, model: SubroutineModel,
                           ledger: QueryLedger, rng=None) -> int:
    """Search for any bracket code above 2t; verdict 0 when one is found.
    Sound only under the consecutive-code encoding."""
    rng = rng if rng is not None else _default_rng(model)
    marked = np.flatnonzero(S.types > t) + 1
    out = grover_search_marked(marked, S.n, 1.0, model, ledger, rng)
    return 0 if out.found is not None else 1


def type_below(S: BracketString, i: int, limit: int, ledger: QueryLedger) -> int:
    """Thresholded type read: the type at position i when it is strictly
    below ``limit``, else 0.  One charged query."""
    if not 1 <= i <= S.n:
        raise ValueError(f"position {i} out of range 1..{S.n}")
    ty, _ = LedgeredOracle(S, ledger).read(i)
    return ty if ty < limit else 0


def check_type_count(S: BracketString, t: int, model: SubroutineModel,
                     ledger: QueryLedger, rng=None, T: int | None = None,
                     on_round=None) -> int:
    """Count distinct bracket types by descending maximum search; verdict 0
    once more than t distinct types have surfaced.

    Works for arbitrary (sparse) codes.  Each maximum is boosted by
    ceil(2 * log2(max(t, 2))) repetitions, keeping the largest find.
    ``on_round(limit, queries)`` reports each boosted call's ledger charge.
    """
    rng = rng if rng is not None else _default_rng(model)
    n = S.n
    if n == 0:
        return 1
    bound = T if T is not None else S.T
    reps = math.ceil(2 * math.log2(max(t, 2)))
    types = S.types

    def boosted_max_below(limit: int) -> int:
        masked = np.where(types < limit, types, 0)
        best = 0
        before = ledger.total
        for _ in range(reps):
            _, value = qmax(masked, model, ledger, rng)
            if value > best:
                best = value
        if on_round is not None:
            on_round(limit, ledger.total - before)
        return best

    y = boosted_max_below(2 * bound + 1)
    j = 1
    while y != 0:
        if j > t:
            return 0
        j += 1
        y = boosted_max_below(y)
    return 1


# ---------------------------------------------------------------------------
# Stage 2

def check_shape(S: BracketString, k: int, model: SubroutineModel,
                ledger: QueryLedger, rng=None) -> int:
    """Idealized one-type recognizer on the open/close pattern: balanced,
    no negative prefix, height at most k.  Exact counter pass; charged at
    ceil(c_grover * sqrt(n) * max(log2 n, 2)^(k/2)); verdict flipped with
    probability epsilon_inject."""
    rng = rng if rng is not None else _default_rng(model)
    n = S.n
    P = S.prefix
    ok = int(P[n] == 0 and P.min() >= 0 and P.max() <= k)
    charge = math.ceil(model.c_grover * math.sqrt(n)
                       * max(math.log2(n) if n else 0.0, 2.0) ** (0.5 * k)) if n else 0
    ledger.charge(charge)
    if model.epsilon_inject > 0.0 and rng.random() < model.epsilon_inject:
        ok = 1 - ok
    return ok


# ---------------------------------------------------------------------------
# Stage 3

def _scan_window_cost(width: int, v: int, model: SubroutineModel) -> int:
    return backend.scan_cost(width, v, model.c_grover)


def leftmost_imbalance(S: BracketString, l: int, r: int, v: int, d: int,
                       model: SubroutineModel, ledger: QueryLedger, rng=None):
    """Idealized nearest-imbalance search: exact leftmost |balance| = v
    substring of length <= d in S[l, r], charged at its published cost of
    ceil(c_grover * sqrt(w) * max(log2 w, 2)^max((v-2)/2, 0)) for window
    width w.  With probability epsilon_inject an existing witness is
    suppressed (one-sided error)."""
    rng = rng if rng is not None else _default_rng(model)
    if not 1 <= l <= r <= S.n or v < 1 or d < 1:
        raise ValueError(f"invalid search window l={l} r={r} v={v} d={d}")
    tabs = backend.pm_tables(S.prefix, v)
    ledger.charge(_scan_window_cost(r - l + 1, v, model))
    hit = backend.scan_leftmost(tabs[0], tabs[1], l, r, d)
    if hit is not None and model.epsilon_inject > 0.0 \
            and rng.random() < model.epsilon_inject:
        hit = None
    return SubstringWitness(*hit) if hit is not None else None


def rightmost_imbalance(S: BracketString, l: int, r: int, v: int, d: int,
                        model: SubroutineModel, ledger: QueryLedger, rng=None):
    """Mirror of :func:`leftmost_imbalance`."""
    rng = rng if rng is not None else _default_rng(model)
    if not 1 <= l <= r <= S.n or v < 1 or d < 1:
        raise ValueError(f"invalid search window l={l} r={r} v={v} d={d}")
    tabs = backend.pm_tables(S.prefix, v)
    ledger.charge(_scan_window_cost(r - l + 1, v, model))
    hit = backend.scan_rightmost(tabs[2], tabs[3], l, r, d)
    if hit is not None and model.epsilon_inject > 0.0 \
            and rng.random() < model.epsilon_inject:
        hit = None
    return SubstringWitness(*hit) if hit is not None else None


def probe_mismatch(S: BracketString, v: int, d: int, b: int,
                   model: SubroutineModel, ledger: QueryLedger, rng=None):
    """One randomized probe for a mismatched pair at height v, length <= d,
    anchored at start index b.

    Finds the leftmost imbalance-v substring right of b and the rightmost
    one before it (or the symmetric pair when the right side misses); a
    positive left flank and a negative right flank at the same base level
    with differently typed endpoints witness a mismatch.  The base-level
    condition holds by construction for the flanks of a mismatched
    0-substring and rejects flank pairs from unrelated nesting contexts.
    Returns (i_l, j_r) or None; empty search windows are misses, not errors.
    """
    rng = rng if rng is not None else _default_rng(model)
    n = S.n
    if v < 2 or d < 1:
        raise ValueError(f"need v >= 2 and d >= 1, got v={v} d={d}")
    if not 1 <= b <= n:
        raise ValueError(f"start index {b} out of range 1..{n}")
    run = _Run(S, model, ledger, rng)
    witness, _, cost = _probe_with_tables(run, v, d,
                                          np.asarray([b], dtype=np.int64))
    ledger.charge(cost)
    return witness


def _probe_with_tables(run: _Run, v: int, d: int, b_arr):
    """Kernel-backed attempt loop; returns (witness_or_None, attempts_run,
    scratch_cost) and charges nothing itself."""
    model = run.model
    eps = model.epsilon_inject
    eps_arr = run.rng.random(3 * len(b_arr)) if eps > 0.0 else None
    a_idx, i_l, j_r, scratch = backend.run_attempts(
        run.types, run.S.prefix, *run.tables(v), run.S.n, v, d, b_arr,
        eps_arr, eps, model.c_grover)
    if a_idx < 0:
        return None, len(b_arr), scratch
    return (int(i_l), int(j_r)), a_idx + 1, scratch


def check_adjacent_pairs(S: BracketString, model: SubroutineModel,
                         ledger: QueryLedger, rng=None) -> CheckOutcome:
    """Height-1 check: search for an opening bracket immediately followed by
    a closing bracket of a different type.  Each candidate costs two reads."""
    rng = rng if rng is not None else _default_rng(model)
    if S.n < 2:
        return CheckOutcome(None, 0)
    before = ledger.total
    opens = S.opens
    types = S.types
    marked = np.flatnonzero((opens[:-1] == 1) & (opens[1:] == 0)
                            & (types[:-1] != types[1:])) + 1
    out = grover_search_marked(marked, S.n - 1, 2.0, model, ledger, rng)
    wrong = (out.found, out.found + 1) if out.found is not None else None
    return CheckOutcome(wrong, ledger.total - before)


def check_height(S: BracketString, v: int, model: SubroutineModel,
                 ledger: QueryLedger, rng=None) -> CheckOutcome:
    """Search for a mismatched pair at height v (assumes lower heights are
    already clean).  For v >= 2 this searches the length grid, where each
    candidate length bound d runs the amplitude-amplified mismatch probe
    with ceil(4n/d) attempts."""
    rng = rng if rng is not None else _default_rng(model)
    run = _Run(S, model, ledger, rng)
    return _check_height(run, v)


def _check_height(run: _Run, v: int) -> CheckOutcome:
    if v == 1:
        return check_adjacent_pairs(run.S, run.model, run.ledger, run.rng)
    S, model, ledger, rng = run.S, run.model, run.ledger, run.rng
    n = S.n
    if n < 2:
        return CheckOutcome(None, 0)
    before = ledger.total
    grid = length_grid(n)
    cache: dict[int, tuple] = {}

    def probe_at(idx: int, scratch: QueryLedger) -> bool:
        hit = cache.get(idx)
        if hit is None:
            d = grid[idx]
            max_attempts = math.ceil(4 * n / d)
            b_arr = rng.integers(1, n + 1, size=max_attempts, dtype=np.int64)
            witness, attempts_run, cost = _probe_with_tables(run, v, d, b_arr)
            hit = (witness, amplify_charge(attempts_run, cost, model.c_aa))
            cache[idx] = hit
        scratch.charge(hit[1])
        return hit[0] is not None

    out = grover_search(probe_at, 0, len(grid) - 1, model, ledger, rng)
    wrong = cache[out.found][0] if out.found is not None else None
    return CheckOutcome(wrong, ledger.total - before)


def check_all_heights(S: BracketString, k: int, model: SubroutineModel,
                      ledger: QueryLedger, rng=None) -> bool:
    """True as soon as any height v in 1..k reports a mismatched pair."""
    rng = rng if rng is not None else _default_rng(model)
    run = _Run(S, model, ledger, rng)
    return _check_all_heights(run, k)


def _check_all_heights(run: _Run, k: int) -> bool:
    for v in range(1, k + 1):
        if _check_height(run, v).wrong is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# Full pipeline

def solve(S: BracketString, params: DyckParams, model: SubroutineModel,
          ledger: QueryLedger | None = None, rng=None,
          step1_mode: str = "bounded") -> int:
    """One recognition run: stage 1, stage 2, stage 3, short-circuiting at
    the first rejection.  Charges are attributed to the ledger stages
    step1/step2/step3."""
    if step1_mode not in STEP1_MODES:
        raise ValueError(f"unknown step1 mode {step1_mode!r}")
    if params.n != S.n:
        raise ValueError(f"params.n={params.n} does not match word length {S.n}")
    if ledger is None:
        ledger = QueryLedger()
    if rng is None:
        rng = _default_rng(model)
    run = _Run(S, model, ledger, rng)
    with ledger.stage("step1"):
        if step1_mode == "bounded":
            ok = check_alphabet_bounded(S, params.t, model, ledger, rng)
        else:
            ok = check_type_count(S, params.t, model, ledger, rng)
    if not ok:
        return 0
    with ledger.stage("step2"):
        if not check_shape(S, params.k, model, ledger, rng):
            return 0
    with ledger.stage("step3"):
        wrong = _check_all_heights(run, params.k)
    return 0 if wrong else 1


def solve_boosted(S: BracketString, params: DyckParams, model: SubroutineModel,
                  reps: int = 15, step1_mode: str = "bounded",
                  early_stop: bool = False) -> BoostResult:
    """Majority vote over ``reps`` independent runs with per-run seeds
    derived from the model seed; reported queries are summed over the runs
    executed.  ``early_stop`` halts once the majority is decided (the
    verdict is unchanged; only the query sum shrinks)."""
    if reps < 1 or reps % 2 == 0:
        raise ValueError(f"reps must be odd and >= 1, got {reps}")
    seeds = np.random.SeedSequence(model.rng_seed).spawn(reps)
    total = QueryLedger()
    accept = reject = runs = 0
    for child in seeds:
        rng = np.random.Generator(np.random.PCG64(child))
        led = QueryLedger()
        verdict = solve(S, params, model, led, rng, step1_mode)
        total.merge(led)
        runs += 1
        if verdict:
            accept += 1
        else:
            reject += 1
        if early_stop and max(accept, reject) > reps // 2:
            break
    return BoostResult(
        verdict=1 if accept > reject else 0,
        queries_total=total.total,
        breakdown=dict(total.breakdown),
        votes_accept=accept,
        votes_reject=reject,
        runs=runs,
    )
