from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from house_subsidy import (
    Instance,
    Outcome,
    format_rational,
    is_envy_free,
    normalize,
    to_rational,
    total_subsidy,
    validate_instance,
)
from house_subsidy.errors import (
    AgentsExceedHouses,
    DimensionMismatch,
    EmptyInstance,
    NegativeShift,
    NegativeUtility,
    RaggedMatrix,
    ValidationError,
)

from helpers import INTRO, TRUTHFUL, envy_free_by_definition

rationals = st.fractions()
nonneg = st.fractions(min_value=0, max_value=50, max_denominator=12)


class TestRational:
    def test_parse_forms(self):
        assert to_rational("6/4") == Fraction(3, 2)
        assert to_rational(" -2/6 ") == Fraction(-1, 3)
        assert to_rational(7) == 7
        assert to_rational("7") == 7

    @pytest.mark.parametrize("bad", ["1/0", "1/-2", "abc", "1.5", 1.5, True, None])
    def test_rejects(self, bad):
        with pytest.raises(ValidationError):
            to_rational(bad)

    def test_format_lowest_terms(self):
        assert format_rational(Fraction(10, 4)) == "5/2"
        assert format_rational(Fraction(100)) == "100"
        assert format_rational(Fraction(-1, 3)) == "-1/3"

    @given(rationals)
    def test_round_trip(self, r):
        assert to_rational(format_rational(r)) == r


class TestValidateInstance:
    def test_intro_instance(self):
        inst = validate_instance({"agents": 2, "utilities": [[200, 100], [200, 100]]})
        assert (inst.n, inst.m) == (2, 2)
        assert inst.utilities[1][0] == 200

    def test_minimal(self):
        inst = validate_instance([[0]])
        assert (inst.n, inst.m) == (1, 1)

    def test_canonical_entries(self):
        inst = validate_instance([["2/4", "3"]])
        assert inst.utilities == ((Fraction(1, 2), Fraction(3)),)

    def test_more_agents_than_houses(self):
        with pytest.raises(AgentsExceedHouses):
            validate_instance([[1, 2], [1, 2], [1, 2]])

    @pytest.mark.parametrize("raw", [[], {"utilities": []}, {"agents": 0, "utilities": [[1]]}])
    def test_empty(self, raw):
        with pytest.raises(EmptyInstance):
            validate_instance(raw)

    def test_ragged(self):
        with pytest.raises(RaggedMatrix):
            validate_instance([[1, 2], [1]])

    def test_negative(self):
        with pytest.raises(NegativeUtility):
            validate_instance([[1, "-1/2"]])

    def test_agent_count_mismatch(self):
        with pytest.raises(DimensionMismatch):
            validate_instance({"agents": 3, "utilities": [[1, 2], [3, 4]]})


class TestEnvyFree:
    def test_intro_with_subsidy(self):
        assert is_envy_free(Instance(INTRO), Outcome((0, 1), (0, 100)))

    def test_intro_without_subsidy(self):
        assert not is_envy_free(Instance(INTRO), Outcome((0, 1), (0, 0)))

    def test_single_agent(self):
        assert is_envy_free(Instance(((3, 9),)), Outcome((0,), (0,)))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            is_envy_free(Instance(INTRO), Outcome((0,), (0,)))

    def test_house_out_of_range(self):
        with pytest.raises(DimensionMismatch):
            is_envy_free(Instance(INTRO), Outcome((0, 2), (0, 0)))

    def test_outcome_rejects_negative_subsidy(self):
        with pytest.raises(ValidationError):
            Outcome((0, 1), (0, -1))

    def test_outcome_rejects_repeated_house(self):
        with pytest.raises(ValidationError):
            Outcome((1, 1), (0, 0))

    @settings(max_examples=200)
    @given(st.data())
    def test_matches_definition(self, data):
        n = data.draw(st.integers(1, 4))
        m = data.draw(st.integers(n, 5))
        u = [[data.draw(nonneg) for _ in range(m)] for _ in range(n)]
        alloc = data.draw(st.permutations(range(m)))[:n]
        s = [data.draw(nonneg) for _ in range(n)]
        assert is_envy_free(Instance(u), Outcome(alloc, s)) == envy_free_by_definition(u, alloc, s)

    @settings(max_examples=100)
    @given(st.data())
    def test_constant_subsidy_shift(self, data):
        n = data.draw(st.integers(1, 4))
        u = [[data.draw(nonneg) for _ in range(n)] for _ in range(n)]
        alloc = data.draw(st.permutations(range(n)))
        s = [data.draw(nonneg) for _ in range(n)]
        c = data.draw(nonneg)
        inst = Instance(u)
        assert is_envy_free(inst, Outcome(alloc, s)) == is_envy_free(
            inst, Outcome(alloc, [x + c for x in s])
        )


def test_total_subsidy():
    assert total_subsidy(Outcome((0, 1), (0, 100))) == 100
    assert total_subsidy(Outcome((0, 1, 2), (0, 0, 0))) == 0
    assert total_subsidy(Outcome((0, 1), (50, 0))) == 50


class TestNormalize:
    def test_zero_shift_is_identity(self):
        inst = Instance(TRUTHFUL)
        assert normalize(inst, [0, 0]) == inst

    def test_direct_addition(self):
        assert normalize(Instance(INTRO), [0, 50]).utilities == ((200, 100), (250, 150))

    def test_errors(self):
        with pytest.raises(DimensionMismatch):
            normalize(Instance(INTRO), [1])
        with pytest.raises(NegativeShift):
            normalize(Instance(INTRO), [1, -1])

    @settings(max_examples=200)
    @given(st.data())
    def test_envy_freeness_unchanged(self, data):
        n = data.draw(st.integers(1, 4))
        m = data.draw(st.integers(n, 5))
        inst = Instance([[data.draw(nonneg) for _ in range(m)] for _ in range(n)])
        out = Outcome(data.draw(st.permutations(range(m)))[:n], [data.draw(nonneg) for _ in range(n)])
        shifts = [data.draw(nonneg) for _ in range(n)]
        assert is_envy_free(inst, out) == is_envy_free(normalize(inst, shifts), out)
