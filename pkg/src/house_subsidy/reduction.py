"""Vertex-cover reduction to minimum-subsidy house allocation.

For a graph G = (V, E) and budget k, :func:`reduce_vertex_cover` builds an
instance that has an envy-free outcome with total subsidy at most k/|V|
exactly when G has a vertex cover of size at most k. With N = |V|:

* N^4 special agents and N^4 special houses,
* one edge agent per edge,
* N^2 vertex agents of each type w,
* N good houses and N^2 bad houses for each vertex v.

Agents and houses are laid out in that order; vertex-typed blocks are grouped
by vertex, then by copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .errors import (
    CoverTooLarge,
    DimensionMismatch,
    EmptyGraph,
    KTooLarge,
    NotACover,
    ValidationError,
)
from .model import ZERO, Instance, Outcome, check_allocation

ONE = Fraction(1)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset
    labels: Optional[tuple] = None

    def __post_init__(self):
        if self.vertex_count < 2:
            raise EmptyGraph(f"graph needs at least 2 vertices, got {self.vertex_count}")
        norm = set()
        for edge in self.edges:
            x, y = edge
            if x == y:
                raise ValidationError(f"self-loop on vertex {x}")
            if not (0 <= x < self.vertex_count and 0 <= y < self.vertex_count):
                raise ValidationError(f"edge {edge} has an endpoint out of range")
            e = (min(x, y), max(x, y))
            if e in norm:
                raise ValidationError(f"duplicate edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", frozenset(norm))
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(v + 1) for v in range(self.vertex_count)))
        else:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.vertex_count or len(set(labels)) != len(labels):
                raise ValidationError("need one distinct label per vertex")
            object.__setattr__(self, "labels", labels)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def vertex(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise ValidationError(f"no vertex labelled {label!r}") from None


class Role(NamedTuple):
    """``kind`` is special/edge/vertex for agents, special/good/bad for houses.

    ``key`` is the edge (x, y) for edge agents, the vertex for vertex-typed
    roles and the running index for special ones; ``copy`` numbers the
    copies of a vertex-typed role.
    """

    kind: str
    key: object
    copy: int = 0


@dataclass(frozen=True)
class ReductionInstance:
    instance: Instance
    graph: Graph
    k: int
    agent_roles: tuple
    house_roles: tuple

    @property
    def size(self) -> int:
        return self.graph.vertex_count

    def good_house(self, v: int, copy: int) -> int:
        N = self.size
        return N**4 + v * N + copy

    def bad_house(self, v: int, copy: int) -> int:
        N = self.size
        return N**4 + N**2 + v * N * N + copy


def is_vertex_cover(g: Graph, vertices: Iterable[int]) -> bool:
    chosen = set(vertices)
    return all(x in chosen or y in chosen for x, y in g.edges)


def reduce_vertex_cover(g: Graph, k: int) -> ReductionInstance:
    N = g.vertex_count
    if k < 1:
        raise ValidationError(f"k must be positive, got {k}")
    if k >= N - 1:
        raise KTooLarge(f"k = {k} must be below |V| - 1 = {N - 1}; any |V|-1 vertices cover")

    house_roles = [Role("special", j) for j in range(N**4)]
    house_roles += [Role("good", v, c) for v in range(N) for c in range(N)]
    house_roles += [Role("bad", v, c) for v in range(N) for c in range(N * N)]
    m = len(house_roles)
    special = range(N**4)
    first_good = N**4
    first_bad = N**4 + N**2

    bonus = ONE + Fraction(1, N**3)
    special_row = (ONE,) * N**4 + (ZERO,) * (m - N**4)
    rows = [special_row] * N**4
    agent_roles = [Role("special", j) for j in special]

    for x, y in g.sorted_edges():
        row = list(special_row)
        for v in (x, y):
            for c in range(N):
                row[first_good + v * N + c] = ONE
        rows.append(tuple(row))
        agent_roles.append(Role("edge", (x, y)))

    for w in range(N):
        row = [ZERO] * m
        for c in range(N):
            row[first_good + w * N + c] = bonus
        for c in range(N * N):
            row[first_bad + w * N * N + c] = ONE
        row = tuple(row)
        rows.extend([row] * (N * N))
        agent_roles.extend(Role("vertex", w, c) for c in range(N * N))

    house_labels = []
    for r in house_roles:
        if r.kind == "special":
            house_labels.append(f"special{r.key + 1}")
        else:
            house_labels.append(f"{g.labels[r.key]}_{r.kind}{r.copy + 1}")
    agent_labels = []
    for r in agent_roles:
        if r.kind == "special":
            agent_labels.append(f"special{r.key + 1}")
        elif r.kind == "edge":
            agent_labels.append(f"edge{{{g.labels[r.key[0]]},{g.labels[r.key[1]]}}}")
        else:
            agent_labels.append(f"vertex_{g.labels[r.key]}{r.copy + 1}")

    inst = Instance(tuple(rows), house_labels=tuple(house_labels), agent_labels=tuple(agent_labels))
    return ReductionInstance(inst, g, k, tuple(agent_roles), tuple(house_roles))


def witness_outcome(r: ReductionInstance, cover: Iterable[int]) -> Outcome:
    """Envy-free outcome of total subsidy |cover|/|V| built from a vertex cover.

    An edge agent takes a good house of its smaller covered endpoint; good
    copies are handed out in ascending order. Vertex agents of covered types
    sit on bad houses and receive |V|^-3 each.
    """
    g = r.graph
    N = g.vertex_count
    chosen = set(cover)
    for v in chosen:
        if not 0 <= v < N:
            raise ValidationError(f"cover vertex {v} out of range")
    if not is_vertex_cover(g, chosen):
        missed = next(e for e in g.sorted_edges() if not (set(e) & chosen))
        raise NotACover(
            f"edge {{{g.labels[missed[0]]},{g.labels[missed[1]]}}} is not covered"
        )
    if len(chosen) > r.k:
        raise CoverTooLarge(f"cover has {len(chosen)} vertices, k = {r.k}")

    next_copy = [0] * N
    allocation = []
    subsidy = []
    top_up = Fraction(1, N**3)
    for role in r.agent_roles:
        if role.kind == "special":
            allocation.append(role.key)
            subsidy.append(ZERO)
        elif role.kind == "edge":
            v = min(x for x in role.key if x in chosen)
            allocation.append(r.good_house(v, next_copy[v]))
            next_copy[v] += 1
            subsidy.append(ZERO)
        else:
            allocation.append(r.bad_house(role.key, role.copy))
            subsidy.append(top_up if role.key in chosen else ZERO)
    return Outcome(tuple(allocation), tuple(subsidy))


def extract_cover(r: ReductionInstance, out: Outcome) -> frozenset:
    """Vertices v such that some edge agent holds a v-good house."""
    if len(out.allocation) != r.instance.n:
        raise DimensionMismatch(
            f"outcome has {len(out.allocation)} agents, instance has {r.instance.n}"
        )
    alloc = check_allocation(r.instance, out.allocation)
    found = set()
    for role, house in zip(r.agent_roles, alloc):
        if role.kind != "edge":
            continue
        h = r.house_roles[house]
        if h.kind == "good":
            found.add(h.key)
    return frozenset(found)
