"""Bracket encoding, balance arithmetic, the classical reference recognizer,
and test-input generators.

Brackets of type ``i`` are encoded as the integers ``2i-1`` (opening) and
``2i`` (closing), so a string over ``T`` possible types uses codes in
``1..2T``.  All public indices are 1-based: ``S[l, r]`` means the symbols at
positions ``l`` through ``r`` inclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .backend import classical_check_codes

__all__ = [
    "BracketString",
    "DyckParams",
    "ParseError",
    "type_of",
    "open_of",
    "code_for",
    "balance",
    "height",
    "classical_check",
    "well_balanced",
    "gen_balanced",
    "corrupt",
    "parse_text",
    "to_text",
    "CHAR_TO_CODE",
    "CODE_TO_CHAR",
]

# Fixed character mapping for text input: square brackets are type 1, round
# type 2, curly type 3, angle type 4.
CHAR_TO_CODE = {"[": 1, "]": 2, "(": 3, ")": 4, "{": 5, "}": 6, "<": 7, ">": 8}
CODE_TO_CHAR = {v: k for k, v in CHAR_TO_CODE.items()}

CORRUPT_MODES = ("type-swap", "balance-break", "height-exceed", "code-overflow")


def type_of(code: int) -> int:
    """Type id of a bracket code: ceil(code / 2)."""
    return (code + 1) // 2


def open_of(code: int) -> int:
    """1 if the code is an opening bracket, 0 if closing."""
    return code % 2


def code_for(type_id: int, is_open: int) -> int:
    """Inverse of (type_of, open_of): code = 2*type - open."""
    return 2 * type_id - is_open


class ParseError(ValueError):
    """Raised on malformed text input; ``position`` is the 1-based offending
    column (character format) or token index (code format)."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class DyckParams:
    """Problem parameters: maximum nesting height `k`, maximum number of
    bracket types `t`, input length `n`."""

    k: int
    t: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.t < 1 or self.n < 0:
            raise ValueError(f"invalid parameters k={self.k} t={self.t} n={self.n}")


class BracketString:
    """An immutable word over integer bracket codes.

    ``T`` is the alphabet bound: every code lies in ``1..2T``.  By default it
    is the smallest bound covering the given codes (at least 1).
    """

    __slots__ = ("codes", "n", "T", "_prefix")

    def __init__(self, codes: Iterable[int], T: int | None = None):
        if isinstance(codes, np.ndarray):
            arr = np.array(codes, dtype=np.int64, copy=True)
        else:
            arr = np.array(list(codes), dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("codes must be one-dimensional")
        if arr.size and arr.min() < 1:
            raise ValueError("bracket codes must be >= 1")
        max_type = int((arr.max() + 1) // 2) if arr.size else 1
        if T is None:
            T = max_type
        elif max_type > T:
            raise ValueError(f"code {int(arr.max())} exceeds alphabet bound 2T={2 * T}")
        arr.flags.writeable = False
        object.__setattr__(self, "codes", arr)
        object.__setattr__(self, "n", int(arr.size))
        object.__setattr__(self, "T", int(T))
        object.__setattr__(self, "_prefix", None)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("BracketString is immutable")

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return (isinstance(other, BracketString)
                and self.T == other.T
                and np.array_equal(self.codes, other.codes))

    def __repr__(self):
        return f"BracketString({self.codes.tolist()}, T={self.T})"

    def sym(self, i: int) -> int:
        """Code at 1-based position ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return int(self.codes[i - 1])

    @property
    def types(self) -> np.ndarray:
        return (self.codes + 1) // 2

    @property
    def opens(self) -> np.ndarray:
        return self.codes % 2

    @property
    def prefix(self) -> np.ndarray:
        """Prefix balances ``P`` with ``P[0] = 0`` and ``P[i] = f(S[1, i])``."""
        cached = self._prefix
        if cached is None:
            steps = np.where(self.opens == 1, 1, -1).astype(np.int64)
            cached = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum(steps, out=cached[1:])
            cached.flags.writeable = False
            object.__setattr__(self, "_prefix", cached)
        return cached


def balance(S: BracketString, l: int, r: int) -> int:
    """f(S[l, r]): number of opening minus closing brackets; 0 when l > r."""
    if l < 1 or r > S.n:
        raise IndexError(f"range [{l}, {r}] out of bounds for n={S.n}")
    if l > r:
        return 0
    P = S.prefix
    return int(P[r] - P[l - 1])


def height(S: BracketString, l: int, r: int) -> int:
    """h(S[l, r]): the maximum of f(S[l, i]) over i in l..r."""
    if not 1 <= l <= r <= S.n:
        raise IndexError(f"range [{l}, {r}] invalid for n={S.n}")
    P = S.prefix
    return int(P[l:r + 1].max() - P[l - 1])


def classical_check(S: BracketString, params: DyckParams) -> int:
    """Reference recognizer: 1 iff S is well-balanced with type-matched
    nesting, uses at most ``params.t`` distinct types, and has height at most
    ``params.k``.  Single stack-based pass; never raises on word content.
    """
    return classical_check_codes(S.codes, params.k, params.t, S.T)


def well_balanced(S: BracketString, l: int = 1, r: int | None = None) -> bool:
    """True iff the substring S[l, r] is a well-balanced typed sequence
    (no height or type-count restriction)."""
    if r is None:
        r = S.n
    if l > r:
        return True
    width = r - l + 1
    sub = S.codes[l - 1:r]
    return classical_check_codes(sub, max(width // 2, 1), S.T, S.T) == 1


def gen_balanced(n: int, k: int, t: int, seed: int) -> BracketString:
    """Random word accepted by ``classical_check`` with the given (k, t).

    Deterministic in ``seed``.  For n >= 2k the nesting height is exactly k:
    the walk is capped at k and forced to touch it before slack runs out.
    """
    if n % 2 != 0 or n < 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    if k < 1 or t < 1:
        raise ValueError(f"k and t must be >= 1, got k={k} t={t}")
    rng = np.random.Generator(np.random.PCG64(seed))
    target = min(k, n // 2)
    codes = np.empty(n, dtype=np.int64)
    stack: list[int] = []
    touched = False
    for i in range(n):
        rem = n - i
        cur = len(stack)
        # opening is legal if we stay under the cap and can still close up
        can_open = cur < k and rem >= cur + 2
        # closing is legal if it does not strand the forced ascent to target
        can_close = cur > 0 and (touched or rem >= 2 * target - cur + 2)
        if can_open and can_close:
            go_open = rng.random() < 0.55
        elif can_open:
            go_open = True
        else:
            go_open = False
        if go_open:
            ty = int(rng.integers(1, t + 1))
            stack.append(ty)
            codes[i] = 2 * ty - 1
            if len(stack) >= target:
                touched = True
        else:
            codes[i] = 2 * stack.pop()
    return BracketString(codes, T=t)


def corrupt(S: BracketString, mode: str, seed: int, params: DyckParams) -> BracketString:
    """Damaged copy of S rejected by ``classical_check`` under ``params``.

    type-swap      retypes one bracket (open bit and balance preserved)
    balance-break  flips one bracket's open bit
    height-exceed  wraps S in enough nesting to exceed params.k
    code-overflow  replaces one bracket with a code above 2*params.t
    """
    if S.n == 0:
        raise ValueError("cannot corrupt an empty string")
    if mode not in CORRUPT_MODES:
        raise ValueError(f"unknown corrupt mode {mode!r}")
    rng = np.random.Generator(np.random.PCG64(seed))
    t = params.t
    if mode == "type-swap":
        if t < 2:
            raise ValueError("type-swap needs at least 2 types")
        pos = int(rng.integers(0, S.n))
        codes = S.codes.copy()
        old_type = type_of(int(codes[pos]))
        choices = [ty for ty in range(1, t + 1) if ty != old_type]
        new_type = choices[int(rng.integers(0, len(choices)))]
        codes[pos] = code_for(new_type, open_of(int(codes[pos])))
        return BracketString(codes, T=S.T)
    if mode == "balance-break":
        pos = int(rng.integers(0, S.n))
        codes = S.codes.copy()
        ty = type_of(int(codes[pos]))
        codes[pos] = code_for(ty, 1 - open_of(int(codes[pos])))
        return BracketString(codes, T=S.T)
    if mode == "height-exceed":
        h = height(S, 1, S.n) if S.n else 0
        wraps = params.k - h + 1
        if wraps < 1:
            wraps = 1
        ty = int(rng.integers(1, t + 1))
        codes = np.concatenate([
            np.full(wraps, 2 * ty - 1, dtype=np.int64),
            S.codes,
            np.full(wraps, 2 * ty, dtype=np.int64),
        ])
        return BracketString(codes, T=S.T)
    # code-overflow: bump one bracket into type t+1, keeping its open bit
    pos = int(rng.integers(0, S.n))
    codes = S.codes.copy()
    codes[pos] = code_for(t + 1, open_of(int(codes[pos])))
    return BracketString(codes, T=max(S.T, t + 1))


def parse_text(text: str) -> BracketString:
    """Parse one instance line: either space/comma-separated integer codes or
    a run of bracket characters over ``()[]{}<>``."""
    stripped = text.strip()
    if not stripped:
        return BracketString([])
    if any(ch in CHAR_TO_CODE for ch in stripped):
        codes = []
        for col, ch in enumerate(stripped, start=1):
            if ch.isspace():
                continue
            if ch not in CHAR_TO_CODE:
                raise ParseError(f"invalid character {ch!r} at column {col}", col)
            codes.append(CHAR_TO_CODE[ch])
        return BracketString(codes)
    tokens = stripped.replace(",", " ").split()
    codes = []
    for idx, tok in enumerate(tokens, start=1):
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"invalid token {tok!r} at position {idx}", idx) from None
        if value < 1:
            raise ParseError(f"code {value} at position {idx} must be >= 1", idx)
        codes.append(value)
    return BracketString(codes)


def to_text(S: BracketString, chars: bool = False) -> str:
    """Render as a code line ("1 3 4 2") or, when possible, as characters."""
    if chars:
        if any(int(c) not in CODE_TO_CHAR for c in S.codes):
            raise ValueError("string uses codes outside the 4-type character set")
        return "".join(CODE_TO_CHAR[int(c)] for c in S.codes)
    return " ".join(str(int(c)) for c in S.codes)
