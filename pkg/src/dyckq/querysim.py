"""Simulated quantum search primitives under ledger accounting.

Execution is exact classical computation; the ledger is charged what the
corresponding quantum routine would cost in oracle queries.  Measurement
statistics are faithful: a search round over a domain with M marked points
out of N succeeds with probability sin^2((2j+1) * asin(sqrt(M/N))), which the
statevector simulator below validates against an explicit oracle+diffusion
iteration.
"""

from __future__ import annotations

import math
from contextlib import nullcontext
from dataclasses import dataclass

import numpy as np

from .ledger import QueryLedger, SubroutineModel

__all__ = [
    "GroverOutcome",
    "grover_search",
    "grover_search_marked",
    "statevector_grover",
    "qmax",
    "amplitude_amplify",
    "amplify_charge",
]

_GROWTH = 6 / 5  # schedule growth factor for searches with unknown M


@dataclass(frozen=True)
class GroverOutcome:
    """Result of one simulated search: the found index (or None) and the
    number of queries charged to the ledger."""

    found: int | None
    queries_charged: int


def _bbht(n_domain, marked, mean_cost, model, ledger, rng, budget=None):
    """Shared search core: exponential iteration schedule over a domain of
    ``n_domain`` points with the given marked index array.

    Every accounted oracle application charges ``mean_cost`` queries.  A
    round that draws j iterations accounts j+1 applications; a successful
    measurement accounts one extra verification.  The search gives up once
    the next round would exceed the cap (the cap models the timeout after
    which an unknown-M search declares "nothing there").
    """
    N = int(n_domain)
    if N <= 0:
        return GroverOutcome(None, 0)
    M = len(marked)
    cap = math.ceil(model.grover_cap_factor * math.sqrt(N))
    if budget is not None and budget < cap:
        cap = budget
    charged = 0

    def charge(evals: int) -> None:
        nonlocal charged
        q = math.ceil(evals * mean_cost)
        ledger.charge(q)
        charged += q

    if M == 0:
        if cap > 0:
            charge(cap)
        return GroverOutcome(None, charged)

    theta = math.asin(math.sqrt(M / N))
    sqrt_n = math.sqrt(N)
    m = 1.0
    evals = 0
    while True:
        j = int(rng.integers(0, math.ceil(m)))
        if evals + j + 1 > cap:
            return GroverOutcome(None, charged)
        evals += j + 1
        charge(j + 1)
        if rng.random() < math.sin((2 * j + 1) * theta) ** 2:
            found = int(marked[int(rng.integers(0, M))])
            evals += 1
            charge(1)
            return GroverOutcome(found, charged)
        m = min(m * _GROWTH, sqrt_n)


def grover_search(pred, lo: int, hi: int, model: SubroutineModel,
                  ledger: QueryLedger, rng, budget: int | None = None) -> GroverOutcome:
    """Search the index range [lo, hi] for a point where ``pred`` holds.

    ``pred(i, scratch_ledger) -> bool`` must be deterministic per index
    within one call (memoize internal randomness).  The marked set is
    computed by one exact classical pass whose own cost is simulation
    bookkeeping, not charged; the per-evaluation cost it measures on the
    scratch ledger sets the price of each accounted oracle application.
    A found index is re-verified at the cost of one extra application.
    """
    N = hi - lo + 1
    if N <= 0:
        return GroverOutcome(None, 0)
    scratch = QueryLedger()
    marked = []
    for i in range(lo, hi + 1):
        if pred(i, scratch):
            marked.append(i)
    mean_cost = scratch.total / N
    out = _bbht(N, marked, mean_cost, model, ledger, rng, budget)
    if out.found is not None and not pred(out.found, QueryLedger()):
        raise RuntimeError("predicate changed its mind on re-verification")
    return out


def grover_search_marked(marked, n_domain: int, unit_cost: float,
                         model: SubroutineModel, ledger: QueryLedger, rng,
                         budget: int | None = None) -> GroverOutcome:
    """Search variant for predicates whose marked set was precomputed in one
    vectorized classical pass and whose evaluations cost a fixed number of
    reads each.  Accounting is identical to :func:`grover_search`."""
    return _bbht(n_domain, np.asarray(marked), unit_cost, model, ledger, rng, budget)


def statevector_grover(n_domain: int, marked, iterations: int) -> float:
    """Probability of measuring a marked state after exactly ``iterations``
    rounds of phase oracle + diffusion about the uniform state, simulated on
    a full amplitude vector.  ``marked`` holds 1-based indices."""
    N = int(n_domain)
    if not 1 <= N <= 2 ** 20:
        raise ValueError(f"domain size {N} out of supported range")
    idx = np.asarray(sorted(set(int(i) for i in marked)), dtype=np.int64)
    if idx.size == 0:
        return 0.0
    if idx.min() < 1 or idx.max() > N:
        raise ValueError("marked indices out of range")
    idx = idx - 1
    state = np.full(N, 1.0 / math.sqrt(N))
    for _ in range(int(iterations)):
        state[idx] *= -1.0
        state = 2.0 * state.mean() - state
    return float(np.square(state[idx]).sum())


def qmax(values, model: SubroutineModel, ledger: QueryLedger, rng) -> tuple[int, int]:
    """Threshold-climbing maximum search over a table of non-negative
    integer values (each accounted evaluation charges one query).

    Starts the threshold at a uniformly random index, then repeatedly
    searches for a strictly greater value, stopping on a miss or once the
    soft budget ceil(c_grover * sqrt(n)) is spent.  Inner searches are
    truncated so one run never charges more than three times the soft
    budget.  Per-run error is a constant; callers boost by repetition.
    Returns (1-based index, value).
    """
    vals = np.asarray(values, dtype=np.int64)
    n = int(vals.size)
    if n < 1:
        raise ValueError("qmax needs at least one value")
    ctx = ledger.stage("vmax-search") if ledger.current_stage == "other" else nullcontext()
    with ctx:
        best_i = int(rng.integers(1, n + 1))
        best_v = int(vals[best_i - 1])
        ledger.charge(1)
        spent = 1
        if n == 1:
            return best_i, best_v
        soft = math.ceil(model.c_grover * math.sqrt(n))
        hard = 3 * soft
        while spent < soft:
            room = hard - spent - 1
            if room <= 0:
                break
            marked = np.flatnonzero(vals > best_v) + 1
            out = grover_search_marked(marked, n, 1.0, model, ledger, rng, budget=room)
            spent += out.queries_charged
            if out.found is None:
                break
            best_i = out.found
            best_v = int(vals[best_i - 1])
            ledger.charge(1)
            spent += 1
    return best_i, best_v


def amplify_charge(attempts_run: int, scratch_total: int, c_aa: float) -> int:
    """Ledger charge for amplitude amplification over a classically executed
    attempt sequence: ceil(c_aa * sqrt(A)) times the mean per-attempt cost,
    replacing the raw sum of attempt costs."""
    if attempts_run <= 0:
        return 0
    mean = scratch_total / attempts_run
    return math.ceil(math.ceil(c_aa * math.sqrt(attempts_run)) * mean)


def amplitude_amplify(attempt, max_attempts: int, model: SubroutineModel,
                      ledger: QueryLedger, rng):
    """Quadratically rescaled repetition of a randomized subroutine.

    ``attempt(scratch_ledger, rng)`` returns a witness or None and charges
    its own cost to the scratch ledger.  Attempts execute classically with
    fresh randomness; if the first success is attempt A, the real ledger is
    charged as if sqrt(A) amplification rounds had run.  Returns
    (witness_or_None, queries_charged).
    """
    if max_attempts < 1:
        raise ValueError("max_attempts must be >= 1")
    scratch = QueryLedger()
    for a in range(1, max_attempts + 1):
        witness = attempt(scratch, rng)
        if witness is not None:
            q = amplify_charge(a, scratch.total, model.c_aa)
            ledger.charge(q)
            return witness, q
    q = amplify_charge(max_attempts, scratch.total, model.c_aa)
    ledger.charge(q)
    return None, q
