"""Enumeration of CNF signatures.

The signature of an assignment is the vector of clause truth values it
induces. This package lists all signatures of a formula with several
algorithms (SAT-guided backtracking, union closure for monotone formulas,
recursive decomposition for bounded clause size, an induced-matching split
for bounded co-occurrence) together with minimal and maximal signatures
and an exhaustive reference oracle.
"""

__version__ = "0.1.0"

from .errors import (
    DimacsError,
    EngineMismatchError,
    InvariantViolation,
    ResourceLimitError,
    SigenumError,
    TautologyError,
    UndeterminedClauseError,
)
from .formula import (
    Cnf,
    Restriction,
    evaluate_clause,
    format_bits,
    normalize,
    parse_dimacs,
    restrict,
    signature_of,
    stats,
    to_dimacs,
)
from .graphs import (
    ClauseGraph,
    conflict_graph,
    dual_graph,
    enumerate_maximal_independent_sets,
    greedy_maximal_independent_set,
    greedy_maximal_induced_matching,
)
from .sat import SatOracle, classify
from .flashlight import enumerate_flashlight, prefix_feasible
from .unions import SetFamily, UnionTrie, enumerate_unions, monotone_signatures
from .extremal import (
    enumerate_minimal_signatures,
    is_all_ones_signature,
    maximal_signatures_bruteforce,
    mis_signature,
)
from .bounded_dim import enumerate_bounded_dim, seed_signatures
from .bounded_cooc import decompose, enumerate_bounded_cooc
from .oracle import brute_force_extremal, brute_force_signatures, brute_force_unions
from .instrument import WorkMeter
