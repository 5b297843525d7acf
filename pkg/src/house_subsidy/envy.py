"""Envy graphs and minimal envy-eliminating subsidies for a fixed allocation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotEnvyFreeable
from .model import ZERO, Instance, check_allocation


@dataclass(frozen=True)
class EnvyGraph:
    """Complete digraph on agents; ``weight[i][k] = u_i(a_k) - u_i(a_i)``.

    An arc weight is how much agent i would gain by swapping into agent k's
    house, i.e. the subsidy gap ``s_i - s_k`` must cover it.
    """

    weight: tuple

    @property
    def n(self) -> int:
        return len(self.weight)


def build_envy_graph(inst: Instance, allocation: Sequence[int]) -> EnvyGraph:
    alloc = check_allocation(inst, allocation)
    weight = []
    for i, row in enumerate(inst.utilities):
        own = row[alloc[i]]
        weight.append(tuple(row[h] - own for h in alloc))
    return EnvyGraph(tuple(weight))


def _longest_paths(graph: EnvyGraph) -> list:
    """Heaviest path weight out of every agent, empty path included.

    Fixpoint iteration of ``s_i <- max(0, max_k w[i][k] + s_k)`` in ascending
    agent order. A simple path has at most n-1 arcs, so without a positive
    cycle the n-th sweep changes nothing.
    """
    w = graph.weight
    n = graph.n
    s = [ZERO] * n
    for _ in range(n):
        changed = False
        for i in range(n):
            row = w[i]
            best = s[i]
            for k in range(n):
                cand = row[k] + s[k]
                if cand > best:
                    best = cand
            if best != s[i]:
                s[i] = best
                changed = True
        if not changed:
            return s
    raise NotEnvyFreeable("envy graph has a cycle of positive weight")


def is_envy_freeable(inst: Instance, allocation: Sequence[int]) -> bool:
    try:
        _longest_paths(build_envy_graph(inst, allocation))
    except NotEnvyFreeable:
        return False
    return True


def min_subsidy_for_allocation(inst: Instance, allocation: Sequence[int]) -> tuple:
    """Pointwise-smallest subsidy vector making ``allocation`` envy-free.

    Raises :class:`NotEnvyFreeable` when no such vector exists.

    >>> inst = Instance(((200, 100), (200, 100)))
    >>> [str(x) for x in min_subsidy_for_allocation(inst, (0, 1))]
    ['0', '100']
    """
    return tuple(Fraction(x) for x in _longest_paths(build_envy_graph(inst, allocation)))
