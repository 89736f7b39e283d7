"""dyckq: recognizer for the multi-bracket Dyck language with bounded
nesting height, run as a classical simulation of a quantum query algorithm
under a query ledger."""

from .backend import BACKEND
from .bruteforce import (
    SubstringWitness,
    bf_find_mismatched_zero,
    bf_leftmost_imbalance,
    bf_prefix_minimal_zeros,
    bf_rightmost_imbalance,
    flank_structure_holds,
    interior_lemma_holds,
)
from .ledger import LedgeredOracle, QueryLedger, SubroutineModel
from .model import (
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
from .querysim import (
    GroverOutcome,
    amplitude_amplify,
    grover_search,
    grover_search_marked,
    qmax,
    statevector_grover,
)
from .solver import (
    BoostResult,
    CheckOutcome,
    check_adjacent_pairs,
    check_all_heights,
    check_alphabet_bounded,
    check_height,
    check_shape,
    check_type_count,
    leftmost_imbalance,
    probe_mismatch,
    rightmost_imbalance,
    solve,
    solve_boosted,
    type_below,
)

__version__ = "0.1.0"
