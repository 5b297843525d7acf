import doctest

import house_subsidy.envy


def test_doctests():
    result = doctest.testmod(house_subsidy.envy)
    assert result.attempted > 0
    assert result.failed == 0
