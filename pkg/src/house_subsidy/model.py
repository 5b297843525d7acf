"""Exact rationals, instances, outcomes and the envy-freeness check.

All numbers are :class:`fractions.Fraction`, which keeps itself in lowest
terms after every operation. Floats are rejected on input so that nothing in
a solver path can pick up rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import (
    AgentsExceedHouses,
    DimensionMismatch,
    EmptyInstance,
    NegativeShift,
    NegativeUtility,
    RaggedMatrix,
    ValidationError,
)

Rational = Fraction
Allocation = tuple  # tuple[int, ...]: agent i holds house allocation[i]

ZERO = Fraction(0)


def to_rational(value: Any) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats and bools are refused: a float has already lost exactness.
    """
    if isinstance(value, bool):
        raise ValidationError(f"boolean is not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValidationError(f"not a rational 'p/q': {value!r}") from None
        if q <= 0:
            raise ValidationError(f"denominator must be positive: {value!r}")
        return Fraction(p, q)
    raise ValidationError(f"unsupported numeric value {value!r} ({type(value).__name__})")


def format_rational(r: Fraction) -> str:
    """Lowest-terms text form; integers print without a denominator."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class Instance:
    """``utilities[i][j]`` is agent i's value for house j."""

    utilities: tuple
    house_labels: Optional[tuple] = None
    agent_labels: Optional[tuple] = None

    def __post_init__(self):
        rows = tuple(tuple(to_rational(x) for x in row) for row in self.utilities)
        if not rows:
            raise EmptyInstance("instance has no agents")
        m = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != m:
                raise RaggedMatrix(f"row {i} has {len(row)} entries, expected {m}")
        if len(rows) > m:
            raise AgentsExceedHouses(f"{len(rows)} agents but only {m} houses")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x < 0:
                    raise NegativeUtility(f"utility of agent {i} for house {j} is {x}")
        object.__setattr__(self, "utilities", rows)
        if self.house_labels is not None:
            labels = tuple(str(x) for x in self.house_labels)
            if len(labels) != m:
                raise DimensionMismatch(f"{len(labels)} house labels for {m} houses")
            object.__setattr__(self, "house_labels", labels)
        if self.agent_labels is not None:
            labels = tuple(str(x) for x in self.agent_labels)
            if len(labels) != len(rows):
                raise DimensionMismatch(f"{len(labels)} agent labels for {len(rows)} agents")
            object.__setattr__(self, "agent_labels", labels)

    @property
    def n(self) -> int:
        return len(self.utilities)

    @property
    def m(self) -> int:
        return len(self.utilities[0])

    def house_name(self, j: int) -> str:
        return self.house_labels[j] if self.house_labels else f"h{j + 1}"

    def agent_name(self, i: int) -> str:
        return self.agent_labels[i] if self.agent_labels else f"agent {i + 1}"

    def has_identical_rows(self) -> bool:
        first = self.utilities[0]
        return all(row == first for row in self.utilities[1:])

    def restrict(self, houses: Sequence[int]) -> "Instance":
        """Sub-instance on the given house columns, in the given order."""
        labels = None
        if self.house_labels is not None:
            labels = tuple(self.house_labels[j] for j in houses)
        return Instance(
            tuple(tuple(row[j] for j in houses) for row in self.utilities),
            house_labels=labels,
            agent_labels=self.agent_labels,
        )


@dataclass(frozen=True)
class Outcome:
    allocation: tuple
    subsidy: tuple = field(default=())

    def __post_init__(self):
        alloc = tuple(int(h) for h in self.allocation)
        if len(set(alloc)) != len(alloc):
            raise ValidationError(f"allocation assigns a house twice: {alloc}")
        if any(h < 0 for h in alloc):
            raise ValidationError(f"negative house index in {alloc}")
        subsidy = tuple(to_rational(s) for s in self.subsidy) if self.subsidy else (ZERO,) * len(alloc)
        if len(subsidy) != len(alloc):
            raise DimensionMismatch(
                f"subsidy vector has {len(subsidy)} entries for {len(alloc)} agents"
            )
        for i, s in enumerate(subsidy):
            if s < 0:
                raise ValidationError(f"subsidy of agent {i} is negative: {s}")
        object.__setattr__(self, "allocation", alloc)
        object.__setattr__(self, "subsidy", subsidy)

    def permuted(self, sigma: Sequence[int]) -> "Outcome":
        """Agent i takes the house and subsidy of agent ``sigma[i]``."""
        return Outcome(
            tuple(self.allocation[k] for k in sigma),
            tuple(self.subsidy[k] for k in sigma),
        )


def validate_instance(raw: Any) -> Instance:
    """Build an :class:`Instance` from loosely typed data.

    Accepts either a bare utility matrix or a mapping with a ``utilities``
    key and optional ``agents``, ``houses`` and ``agent_labels`` entries
    (the JSON instance format).
    """
    if isinstance(raw, Instance):
        return raw
    houses = agent_labels = None
    declared_agents = None
    if isinstance(raw, Mapping):
        if "utilities" not in raw:
            raise ValidationError("instance data has no 'utilities' entry")
        rows = raw["utilities"]
        declared_agents = raw.get("agents")
        houses = raw.get("houses")
        agent_labels = raw.get("agent_labels")
    else:
        rows = raw
    if isinstance(rows, (str, bytes)) or not isinstance(rows, Iterable):
        raise ValidationError("utilities must be a list of rows")
    rows = list(rows)
    for i, row in enumerate(rows):
        if isinstance(row, (str, bytes)) or not isinstance(row, Iterable):
            raise RaggedMatrix(f"utility row {i} is not a list")
    if not rows:
        raise EmptyInstance("instance has no agents")
    if declared_agents is not None:
        if isinstance(declared_agents, bool) or not isinstance(declared_agents, int):
            raise ValidationError(f"'agents' must be an integer, got {declared_agents!r}")
        if declared_agents == 0:
            raise EmptyInstance("instance has no agents")
        if declared_agents != len(rows):
            raise DimensionMismatch(
                f"'agents' says {declared_agents} but there are {len(rows)} utility rows"
            )
    return Instance(tuple(rows), house_labels=houses, agent_labels=agent_labels)


def check_allocation(inst: Instance, allocation: Sequence[int]) -> tuple:
    alloc = tuple(allocation)
    if len(alloc) != inst.n:
        raise DimensionMismatch(f"allocation has {len(alloc)} entries for {inst.n} agents")
    for h in alloc:
        if not 0 <= h < inst.m:
            raise DimensionMismatch(f"house index {h} out of range [0, {inst.m})")
    if len(set(alloc)) != len(alloc):
        raise ValidationError(f"allocation assigns a house twice: {alloc}")
    return alloc


class Violation(NamedTuple):
    """Agent ``envious`` prefers the bundle of agent ``envied``: lhs < rhs."""

    envious: int
    envied: int
    lhs: Fraction
    rhs: Fraction


def find_violation(inst: Instance, out: Outcome) -> Optional[Violation]:
    """First pair (i, i') in row-major order with u_i(a_i)+s_i < u_i(a_i')+s_i'."""
    alloc = check_allocation(inst, out.allocation)
    subsidy = out.subsidy
    # Compare on a common integer scale; Fraction arithmetic is too slow for
    # the reduction instances (hundreds of agents).
    dens = {s.denominator for s in subsidy}
    for row in inst.utilities:
        dens.update(row[h].denominator for h in alloc)
    scale = math.lcm(*dens)
    s_int = [s.numerator * (scale // s.denominator) for s in subsidy]
    n = len(alloc)
    for i in range(n):
        row = inst.utilities[i]
        vals = [row[h].numerator * (scale // row[h].denominator) for h in alloc]
        own = vals[i] + s_int[i]
        for k in range(n):
            if vals[k] + s_int[k] > own:
                return Violation(
                    i, k, row[alloc[i]] + subsidy[i], row[alloc[k]] + subsidy[k]
                )
    return None


def is_envy_free(inst: Instance, out: Outcome) -> bool:
    return find_violation(inst, out) is None


def total_subsidy(out: Outcome) -> Fraction:
    return sum(out.subsidy, ZERO)


def welfare(inst: Instance, allocation: Sequence[int]) -> Fraction:
    return sum((inst.utilities[i][h] for i, h in enumerate(allocation)), ZERO)


def normalize(inst: Instance, shifts: Sequence[Any]) -> Instance:
    """Add ``shifts[i]`` to every utility of agent i."""
    c = [to_rational(x) for x in shifts]
    if len(c) != inst.n:
        raise DimensionMismatch(f"{len(c)} shifts for {inst.n} agents")
    for i, x in enumerate(c):
        if x < 0:
            raise NegativeShift(f"shift for agent {i} is negative: {x}")
    return Instance(
        tuple(tuple(u + c[i] for u in row) for i, row in enumerate(inst.utilities)),
        house_labels=inst.house_labels,
        agent_labels=inst.agent_labels,
    )
