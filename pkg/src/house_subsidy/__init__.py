"""Exact minimum-subsidy envy-free house allocation."""

from .envy import EnvyGraph, build_envy_graph, is_envy_freeable, min_subsidy_for_allocation
from .errors import *  # noqa: F401,F403
from .matching import MatchingResult, max_weight_perfect_matching
from .model import (
    Instance,
    Outcome,
    Rational,
    find_violation,
    format_rational,
    is_envy_free,
    normalize,
    to_rational,
    total_subsidy,
    validate_instance,
)
from .reduction import (
    Graph,
    ReductionInstance,
    extract_cover,
    is_vertex_cover,
    reduce_vertex_cover,
    witness_outcome,
)
from .solvers import (
    SolveReport,
    brute_force,
    solve,
    solve_equal,
    solve_identical,
    solve_subset,
)

__version__ = "0.1.0"
