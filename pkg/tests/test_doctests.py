import doctest

import pytest

import ulisperm.census
import ulisperm.oeis
import ulisperm.permutations
import ulisperm.ranks
import ulisperm.ulis


@pytest.mark.parametrize("module", [
    ulisperm.permutations,
    ulisperm.ranks,
    ulisperm.ulis,
    ulisperm.census,
    ulisperm.oeis,
])
def test_module_doctests(module):
    results = doctest.testmod(module, verbose=False)
    assert results.attempted > 0
    assert results.failed == 0
