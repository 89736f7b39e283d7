"""Quantum query accounting.

Semantics run classically; every simulated quantum primitive charges its
theoretical oracle-query cost to a :class:`QueryLedger`.  A ledger belongs to
exactly one solver run and splits its total across pipeline stages.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass

__all__ = ["STAGES", "QueryLedger", "LedgeredOracle", "SubroutineModel"]

STAGES = ("step1", "step2", "step3", "vmax-search", "other")


class QueryLedger:
    """Monotone accumulator of charged queries with a per-stage breakdown.

    Charges land on the currently active stage (default ``other``); stages
    nest via the :meth:`stage` context manager, innermost wins.
    """

    __slots__ = ("total", "breakdown", "_stage")

    def __init__(self):
        self.total = 0
        self.breakdown = {s: 0 for s in STAGES}
        self._stage = "other"

    def charge(self, queries: int) -> None:
        q = int(queries)
        if q < 0:
            raise ValueError("ledger charges are non-negative")
        self.total += q
        self.breakdown[self._stage] += q

    @property
    def current_stage(self) -> str:
        return self._stage

    @contextmanager
    def stage(self, label: str):
        if label not in STAGES:
            raise ValueError(f"unknown stage {label!r}")
        previous = self._stage
        self._stage = label
        try:
            yield self
        finally:
            self._stage = previous

    def merge(self, other: "QueryLedger") -> None:
        """Fold another ledger's counts into this one, stage by stage."""
        for s, q in other.breakdown.items():
            self.breakdown[s] += q
        self.total += other.total

    def __repr__(self):
        parts = ", ".join(f"{s}={q}" for s, q in self.breakdown.items() if q)
        return f"QueryLedger(total={self.total}{', ' + parts if parts else ''})"


class LedgeredOracle:
    """Indexed read access to a word, one charged query per read.

    A read exposes both the type and the open/close bit of the position; the
    computational model answers both in constant time, so they cost a single
    query together.
    """

    __slots__ = ("string", "ledger")

    def __init__(self, string, ledger: QueryLedger):
        self.string = string
        self.ledger = ledger

    def read(self, i: int) -> tuple[int, int]:
        """(type, open) of the 1-based position ``i``; charges 1 query."""
        code = self.string.sym(i)
        self.ledger.charge(1)
        return ((code + 1) // 2, code % 2)

    def rebind(self, ledger: QueryLedger) -> "LedgeredOracle":
        return LedgeredOracle(self.string, ledger)


@dataclass(frozen=True)
class SubroutineModel:
    """Cost constants and error injection for the simulated primitives.

    c_grover          search-cost constant (expected-query constant of the
                      exponential Grover schedule)
    c_aa              amplitude-amplification rescaling constant
    grover_cap_factor timeout for one search, in units of sqrt(domain)
    epsilon_inject    probability of forcing an idealized contract subroutine
                      to err (never applied to the search primitives, whose
                      error emerges from the measurement model)
    rng_seed          seed for the run's random stream
    """

    epsilon_inject: float = 0.0
    c_grover: float = 2.25
    c_aa: float = math.pi / 4
    grover_cap_factor: float = 9.0
    rng_seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.epsilon_inject < 0.5:
            raise ValueError("epsilon_inject must lie in [0, 0.5)")
        if self.c_grover <= 0 or self.c_aa <= 0 or self.grover_cap_factor <= 0:
            raise ValueError("cost constants must be positive")
