import doctest

import pytest

from twobridge import decide, pieces, reflections, seqs, slopes, words


@pytest.mark.parametrize("module",
                         [slopes, words, seqs, reflections, pieces, decide])
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
