from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symds.dsm import DsmFormatError, canonical_key, format_matrix, format_stream, parse, parse_stream, read_file
from symds.exact_matrix import ExactMatrix

mats = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.fractions(-5, 5, max_denominator=7), min_size=n, max_size=n), min_size=n, max_size=n)
).map(ExactMatrix.from_rows)


def test_parse_with_comments_and_fractions():
    A = parse("# header\n2\n1/2 1/2\n\n  # inner\n1/2 1/2\n")
    assert A == ExactMatrix.from_rows([[1, 1], [1, 1]], Fraction(1, 2))


def test_stream():
    text = "1\n1\n2\n0 1\n1 0\n"
    assert [A.n for A in parse_stream(text)] == [1, 2]


@given(mats)
def test_round_trip(A):
    assert parse(format_matrix(A, "c")) == A


@given(st.lists(mats, min_size=1, max_size=4))
def test_stream_round_trip(ms):
    assert parse_stream(format_stream(ms)) == ms


@pytest.mark.parametrize(
    "text",
    ["x\n", "2\n1 0\n", "2\n1 0\n0\n", "2\n1 0\n0 0.5\n", "0\n", "-1\n", "1\n1/0\n", "", "2\n1 0 0\n0 1\n"],
)
def test_malformed(text):
    with pytest.raises(DsmFormatError):
        parse(text)


def test_parse_rejects_two_matrices():
    with pytest.raises(DsmFormatError):
        parse("1\n1\n1\n1\n")


def test_error_is_value_error():
    assert issubclass(DsmFormatError, ValueError)


def test_read_file(tmp_path):
    p = tmp_path / "m.dsm"
    p.write_text("2\n0 1\n1 0\n")
    assert read_file(str(p)).is_permutation_matrix()


def test_canonical_key_distinguishes_and_normalizes():
    a = ExactMatrix.from_rows([["2/4", "1/2"], ["1/2", "1/2"]])
    b = ExactMatrix.from_rows([[1, 1], [1, 1]], Fraction(1, 2))
    assert canonical_key(a) == canonical_key(b) == "1/2,1/2;1/2,1/2"
    assert canonical_key(ExactMatrix.identity(2)) != canonical_key(ExactMatrix.hankel_identity(2))
