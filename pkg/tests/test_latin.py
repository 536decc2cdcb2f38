import pytest
from hypothesis import given, strategies as st

from symds.exact_matrix import ExactMatrix
from symds.latin import (
    LatinSquare,
    cyclic_latin,
    is_block_isolated,
    latin_block,
    latin_from_decomposition,
    latin_from_layers,
    layers,
    validate_latin,
)


def test_block_from_cyclic_3():
    T = latin_block(cyclic_latin(3))
    assert T.n == 6
    assert validate_latin(T, require_centro=True)
    assert is_block_isolated(T)
    assert T.rotate_pi() == T


def test_cyclic_3_not_centro():
    assert validate_latin(cyclic_latin(3))
    assert not validate_latin(cyclic_latin(3), require_centro=True)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_from_decomposition(n):
    T = latin_from_decomposition(n)
    assert validate_latin(T, require_centro=True)
    ps = layers(T)
    total = ExactMatrix.zeros(n)
    for P in ps:
        assert P.is_centrosymmetric()
        total = total + P.matrix()
    assert total == ExactMatrix.ones(n)
    assert latin_from_layers(ps) == T


def test_odd_rejected():
    with pytest.raises(ValueError):
        latin_from_decomposition(5)


@pytest.mark.parametrize(
    "rows",
    [[[1, 2], [1, 2]], [[1, 2], [2, 3]], [[1]], [[1, 2, 3], [2, 3, 1]], [], [[0, 1], [1, 0]], [[True, 2], [2, True]]],
)
def test_validate_rejects(rows):
    expected = rows == [[1]]
    assert validate_latin(rows) is expected


@given(st.integers(1, 6))
def test_block_any_cyclic(m):
    T = latin_block(cyclic_latin(m))
    assert validate_latin(T, True) and is_block_isolated(T)


def test_block_rejects_non_latin():
    with pytest.raises(ValueError):
        latin_block(LatinSquare.from_rows([[1, 1], [2, 2]]))
