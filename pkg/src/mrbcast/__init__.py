"""Minmax-regret broadcast centers on trees with interval edge weights
under the postal communication model."""

from .broadcast import (BucketArray, Scenario, Schedule, broadcast_centers,
                        btime, btime_all, bucket_build, btime_from_buckets,
                        neighbor_keys, optimal_schedule, prime_broadcast_center)
from .errors import (BadInterval, BadRange, CycleDetected, Disconnected,
                     DuplicateEdge, IndexOutOfRange, InvariantViolation,
                     MrbcastError, NotNeighbor, OutOfUniverse, SameVertex,
                     StaleTables, TooLarge, UnknownVertex, ZeroRho)
from .generate import random_instance
from .oracle import (ExtremalEnumerator, btime_bruteforce,
                     max_regret_bruteforce, minmax_center_bruteforce)
from .ordered_index import OrderedIndex
from .scenario_regret import (CandidateScenario, ExtremeTables, RegretReport,
                              alpha_scenario, beta_scenario,
                              candidate_objective, max_regret_fast,
                              max_regret_naive, preprocess_extremes,
                              relative_regret)
from ._succ import SuccState
from .solver import SolveResult, solve, solve_naive
from .tree_core import (BranchView, Tree, WeightInterval, branch, build_tree,
                        centroid, closed_branch, path_info, read_tree_text,
                        write_tree_text)

__version__ = "0.1.0"

__all__ = [
    "BadInterval", "BadRange", "BranchView", "BucketArray",
    "CandidateScenario", "CycleDetected", "Disconnected", "DuplicateEdge",
    "ExtremalEnumerator", "ExtremeTables", "IndexOutOfRange",
    "InvariantViolation", "MrbcastError", "NotNeighbor", "OrderedIndex",
    "OutOfUniverse", "RegretReport", "SameVertex", "Scenario", "Schedule",
    "SolveResult", "StaleTables", "SuccState", "TooLarge", "Tree",
    "UnknownVertex", "WeightInterval", "ZeroRho", "alpha_scenario",
    "beta_scenario", "branch", "broadcast_centers", "btime", "btime_all",
    "btime_bruteforce", "btime_from_buckets", "bucket_build", "build_tree",
    "candidate_objective", "centroid", "closed_branch", "max_regret_bruteforce",
    "max_regret_fast", "max_regret_naive", "minmax_center_bruteforce",
    "neighbor_keys", "optimal_schedule", "path_info", "preprocess_extremes",
    "prime_broadcast_center", "random_instance", "read_tree_text",
    "relative_regret", "solve", "solve_naive", "write_tree_text",
]
