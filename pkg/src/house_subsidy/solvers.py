"""Minimum-subsidy envy-free outcomes.

Four exact solvers plus a dispatcher:

* ``solve_equal``: m = n, max-weight matching then minimal subsidies.
* ``solve_subset``: any m >= n, runs ``solve_equal`` on every n-subset of
  houses; polynomial only while m - n stays bounded, so a cap applies.
* ``solve_identical``: all agents share one utility function; scans windows
  of consecutive houses in sorted order.
* ``brute_force``: enumerates every allocation and prices each one with an
  all-pairs longest-path computation that shares no code with the others.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional

from .envy import build_envy_graph, min_subsidy_for_allocation
from .errors import BudgetExceeded, NotIdentical, NotSquare, SurplusCapExceeded
from .model import ZERO, Instance, Outcome, total_subsidy
from .matching import max_weight_perfect_matching

log = logging.getLogger(__name__)

DEFAULT_MAX_SURPLUS = 6
DEFAULT_BUDGET = 10**7
STRATEGIES = ("auto", "equal", "subset", "identical", "oracle")


@dataclass(frozen=True)
class SolveReport:
    outcome: Outcome
    total: Fraction
    algorithm: str
    explored: int
    elapsed: float


def _report(outcome: Outcome, algorithm: str, explored: int, started: float) -> SolveReport:
    return SolveReport(
        outcome, total_subsidy(outcome), algorithm, explored, time.perf_counter() - started
    )


def _equal_outcome(inst: Instance) -> Outcome:
    matching = max_weight_perfect_matching(inst.utilities)
    allocation = matching.assignment
    return Outcome(allocation, min_subsidy_for_allocation(inst, allocation))


def solve_equal(inst: Instance) -> SolveReport:
    """Optimal outcome when there are exactly as many houses as agents.

    Any maximum-weight perfect matching is envy-freeable, and its minimal
    subsidy vector is globally optimal regardless of which optimal matching
    was found.
    """
    started = time.perf_counter()
    if inst.m != inst.n:
        raise NotSquare(f"solve_equal needs m = n, got n={inst.n}, m={inst.m}")
    return _report(_equal_outcome(inst), "equal", 1, started)


def _subset_task(inst: Instance, subset: tuple) -> tuple:
    out = _equal_outcome(inst.restrict(subset))
    allocation = tuple(subset[j] for j in out.allocation)
    return allocation, out.subsidy


def solve_subset(
    inst: Instance,
    max_surplus: Optional[int] = DEFAULT_MAX_SURPLUS,
    workers: Optional[int] = None,
) -> SolveReport:
    """Best outcome over all n-subsets of houses, in lexicographic order.

    The first subset reaching the minimum total wins. Sequential runs stop as
    soon as a zero-subsidy outcome shows up. With ``workers > 1`` subsets are
    priced in a process pool and reduced on ``(total, subset order)``, which
    returns the same outcome as the sequential run.
    """
    started = time.perf_counter()
    n, m = inst.n, inst.m
    count = math.comb(m, n)
    if max_surplus is not None and m - n > max_surplus:
        raise SurplusCapExceeded(
            f"m - n = {m - n} exceeds the surplus cap {max_surplus}; the run would "
            f"enumerate C({m},{n}) = {count} subsets (raise the cap to force it)"
        )
    subsets = combinations(range(m), n)

    if workers is not None and workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, count // (4 * workers))
            subsets = list(subsets)
            results = pool.map(_subset_task, [inst] * count, subsets, chunksize=chunk)
            best = min(
                ((total_subsidy(Outcome(a, s)), k, a, s) for k, (a, s) in enumerate(results)),
                key=lambda r: (r[0], r[1]),
            )
        return _report(Outcome(best[2], best[3]), "subset", count, started)

    best = None
    explored = 0
    for subset in subsets:
        explored += 1
        allocation, subsidy = _subset_task(inst, subset)
        total = sum(subsidy, ZERO)
        if best is None or total < best[0]:
            best = (total, allocation, subsidy)
            if total == 0:
                break
    log.debug("subset solver explored %d of %d subsets", explored, count)
    return _report(Outcome(best[1], best[2]), "subset", explored, started)


def solve_identical(inst: Instance) -> SolveReport:
    """Common-utility case: best window of n consecutive houses by value.

    With houses sorted by utility, a set whose top house is fixed needs the
    least subsidy when the other n-1 houses sit right below the top one, so
    only the m-n+1 windows need pricing. Window cost is
    ``n * top - window_sum``; the earliest cheapest window is used.
    """
    started = time.perf_counter()
    if not inst.has_identical_rows():
        raise NotIdentical("agents do not share identical utilities")
    u = inst.utilities[0]
    n, m = inst.n, inst.m
    order = sorted(range(m), key=lambda j: (u[j], j))
    prefix = [ZERO]
    for j in order:
        prefix.append(prefix[-1] + u[j])

    best_start, best_cost = 0, None
    for start in range(m - n + 1):
        top = u[order[start + n - 1]]
        cost = n * top - (prefix[start + n] - prefix[start])
        if best_cost is None or cost < best_cost:
            best_start, best_cost = start, cost

    window = order[best_start : best_start + n]
    top = u[window[-1]]
    outcome = Outcome(tuple(window), tuple(top - u[j] for j in window))
    return _report(outcome, "identical", m - n + 1, started)


def _oracle_subsidy(inst: Instance, allocation: tuple) -> Optional[list]:
    """Minimal subsidies via Floyd-Warshall longest paths; None if not envy-freeable."""
    d = [list(row) for row in build_envy_graph(inst, allocation).weight]
    n = len(d)
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            di = d[i]
            for j in range(n):
                cand = dik + dk[j]
                if cand > di[j]:
                    di[j] = cand
    if any(d[i][i] > 0 for i in range(n)):
        return None
    return [max(row) for row in d]


def brute_force(inst: Instance, budget: int = DEFAULT_BUDGET) -> SolveReport:
    """Exhaustive oracle over all ordered n-tuples of distinct houses."""
    started = time.perf_counter()
    n, m = inst.n, inst.m
    count = math.perm(m, n)
    if count > budget:
        raise BudgetExceeded(
            f"brute force would examine {count} allocations, budget is {budget}"
        )
    best = None
    for allocation in permutations(range(m), n):
        subsidy = _oracle_subsidy(inst, allocation)
        if subsidy is None:
            continue
        total = sum(subsidy, ZERO)
        if best is None or total < best[0]:
            best = (total, allocation, subsidy)
    return _report(Outcome(best[1], tuple(best[2])), "oracle", count, started)


def solve(
    inst: Instance,
    strategy: str = "auto",
    max_surplus: Optional[int] = DEFAULT_MAX_SURPLUS,
    workers: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
) -> SolveReport:
    """Dispatch to a solver. ``auto`` never falls back to the oracle."""
    if strategy == "auto":
        if inst.has_identical_rows():
            strategy = "identical"
        elif inst.m == inst.n:
            strategy = "equal"
        else:
            strategy = "subset"
    if strategy == "identical":
        return solve_identical(inst)
    if strategy == "equal":
        return solve_equal(inst)
    if strategy == "subset":
        return solve_subset(inst, max_surplus=max_surplus, workers=workers)
    if strategy == "oracle":
        return brute_force(inst, budget=budget)
    raise ValueError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
