"""Write even permutations as products of k cycles of length l, with checkable certificates."""

from .bounds import (
    BoundReport,
    Source,
    UndefinedParameters,
    exact_n,
    feasible,
    upper_bound,
)
from .calculus import (
    ConstructionError,
    FactorList,
    InfeasibleError,
    chain_factor,
    lengthen,
    merge_even_pair,
    pad,
    parity_bridge,
    two_cycle_factor,
    two_cycle_feasible,
)
from .engine import (
    Certificate,
    OutOfRangeError,
    SplitPair,
    factor,
    factor3,
    factor6,
    factor_aux,
    split_support,
    split_tau,
)
from .oracle import ReachReport, class_power_reach, exact_n_oracle, rank, unrank, verify
from .perm import (
    Cycle,
    CycleDecomposition,
    Permutation,
    PermutationError,
    dcd_star,
    format_perm,
    parse_perm,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "Certificate", "ConstructionError", "Cycle", "CycleDecomposition", "FactorList",
    "InfeasibleError", "OutOfRangeError", "Permutation", "PermutationError", "ReachReport", "Source",
    "SplitPair", "UndefinedParameters", "chain_factor", "class_power_reach", "dcd_star", "exact_n",
    "exact_n_oracle", "factor", "factor3", "factor6", "factor_aux", "feasible", "format_perm",
    "lengthen", "merge_even_pair", "pad", "parity_bridge", "parse_perm", "rank", "split_support",
    "split_tau", "two_cycle_factor", "two_cycle_feasible", "unrank", "upper_bound", "verify",
]
