import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from house_subsidy import Instance, is_envy_freeable, max_weight_perfect_matching
from house_subsidy.errors import ValidationError


def brute_max(w):
    n = len(w)
    return max(sum(w[i][p[i]] for i in range(n)) for p in permutations(range(n)))


square = st.integers(1, 6).flatmap(
    lambda n: st.lists(
        st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=5), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


def test_example_1_values():
    res = max_weight_perfect_matching([[200, 200], [200, 100]])
    assert res.assignment == (1, 0)
    assert res.weight == 400


def test_strategyproofness_values():
    res = max_weight_perfect_matching([[25, 75], [0, 100]])
    assert res.assignment == (0, 1)
    assert res.weight == 125


@pytest.mark.parametrize("n", [1, 2, 5])
def test_identity(n):
    w = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    res = max_weight_perfect_matching(w)
    assert res.assignment == tuple(range(n))
    assert res.weight == n


def test_rejects_bad_shapes():
    with pytest.raises(ValidationError):
        max_weight_perfect_matching([])
    with pytest.raises(ValidationError):
        max_weight_perfect_matching([[1, 2]])


def test_exact_on_tiny_differences():
    eps = Fraction(1, 10**30)
    res = max_weight_perfect_matching([[1, 1 + eps], [1, 1]])
    assert res.assignment == (1, 0)
    assert res.weight == 2 + eps


@settings(max_examples=300, deadline=None)
@given(square)
def test_oracle_equivalence(w):
    res = max_weight_perfect_matching(w)
    assert sorted(res.assignment) == list(range(len(w)))
    assert res.weight == sum(w[i][res.assignment[i]] for i in range(len(w)))
    assert res.weight == brute_max(w)


@settings(max_examples=200, deadline=None)
@given(square, st.data())
def test_row_shift(w, data):
    shifts = [data.draw(st.fractions(min_value=0, max_value=10, max_denominator=3)) for _ in w]
    shifted = [[x + c for x in row] for row, c in zip(w, shifts)]
    base = max_weight_perfect_matching(w)
    moved = max_weight_perfect_matching(shifted)
    assert moved.weight == base.weight + sum(shifts)
    # the shifted optimum is still optimal for the original weights
    assert sum(w[i][moved.assignment[i]] for i in range(len(w))) == base.weight


def test_deterministic():
    rng = random.Random(3)
    w = [[rng.randint(0, 2) for _ in range(6)] for _ in range(6)]
    assert len({max_weight_perfect_matching(w).assignment for _ in range(5)}) == 1


@settings(max_examples=200, deadline=None)
@given(square)
def test_result_is_envy_freeable(w):
    if any(x < 0 for row in w for x in row):
        w = [[abs(x) for x in row] for row in w]
    res = max_weight_perfect_matching(w)
    assert is_envy_freeable(Instance(w), res.assignment)
