"""Maximum-cardinality matching toolkit for general graphs."""

from .bucket_queue import BucketQueue
from .gabow import ScalingMatcher, SolveResult, solve
from .graph_core import (StaticGraph, build_graph, generate_random,
                         generate_worst_case, permute_representation,
                         read_edge_list, write_edge_list)
from .partition import SplittablePartition
from .single_path import MatchingResult, kp_matcher, queue_matcher
from .verify import (check_matching, check_osc, oracle_max_matching,
                     oracle_max_matching_by_subsets, oracle_sap_length)

__all__ = [
    "BucketQueue",
    "MatchingResult",
    "ScalingMatcher",
    "SolveResult",
    "SplittablePartition",
    "StaticGraph",
    "build_graph",
    "check_matching",
    "check_osc",
    "generate_random",
    "generate_worst_case",
    "kp_matcher",
    "oracle_max_matching",
    "oracle_max_matching_by_subsets",
    "oracle_sap_length",
    "permute_representation",
    "queue_matcher",
    "read_edge_list",
    "solve",
    "write_edge_list",
]
