"""Maximum-weight perfect matching on a square matrix of rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError
from .model import ZERO, to_rational


@dataclass(frozen=True)
class MatchingResult:
    assignment: tuple  # row i is matched to column assignment[i]
    weight: Fraction


def max_weight_perfect_matching(w: Sequence[Sequence]) -> MatchingResult:
    """Kuhn-Munkres with exact potentials, O(n^3).

    Runs the shortest-augmenting-path form of the Hungarian method on the
    negated weights. Deterministic: the same matrix always yields the same
    assignment.
    """
    n = len(w)
    if n == 0:
        raise ValidationError("weight matrix is empty")
    cost = []
    for row in w:
        if len(row) != n:
            raise ValidationError("weight matrix must be square")
        cost.append([-to_rational(x) for x in row])

    # 1-indexed; column 0 is a virtual root. None stands for +infinity.
    u = [ZERO] * (n + 1)
    v = [ZERO] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row holding column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            crow = cost[i0 - 1]
            delta = None
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = crow[j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1

    assignment = [0] * n
    for j in range(1, n + 1):
        assignment[match[j] - 1] = j - 1
    total = sum((to_rational(w[i][assignment[i]]) for i in range(n)), ZERO)
    return MatchingResult(tuple(assignment), total)
