"""The package catalog must agree with the independent transcriptions."""

import pytest

import reference_data as D
from symds import named as N
from symds.decompose import half_sum
from symds.exact_matrix import ExactMatrix, Permutation, rotate_pi


def M(entry):
    return ExactMatrix.from_rows(D.grid(*entry) if isinstance(entry, tuple) else D.grid(entry))


@pytest.mark.parametrize(
    "ours,theirs",
    [
        (N.SYM_EVEN_P.matrix(), D.SHIFT6),
        (N.SYM_EVEN_Q1.matrix(), D.SHIFT6_PART1),
        (N.SYM_EVEN_Q2.matrix(), D.SHIFT6_PART2),
        (N.HANKEL_P.matrix(), D.HANKEL3),
        (N.HANKEL_Q.matrix(), D.HANKEL4),
        (N.EXTRA.matrix(), D.EXTRA4),
        (N.DOUBLE_A, D.DOUBLE),
        (N.DOUBLE_B_DISPLAYED, D.DOUBLE_B),
        (N.CROSS3, D.CROSS),
        (N.CENT_A, D.CENT_A),
        (N.CENT_E1, D.CENT_E1),
        (N.CENT_E2, D.CENT_E2),
        (N.EXTREME_Q.matrix(), D.ISO_Q),
        (N.EXTREME_A, D.ISO_A),
        (N.EXTREME_P.matrix(), D.ISO_P),
        (N.SYMHANKEL_A1, D.SH_A1),
        (N.SYMHANKEL_A2, D.SH_A2),
        (N.NONEXTREME_QUARTER, D.NE_QUARTER),
        (N.NONEXTREME_R, D.NE_R),
        (N.NONEXTREME_R2, D.NE_R_PARTNER),
        (N.ODD7_A2, D.ODD7),
        (N.ODD9_A1, D.ODD9),
        (N.ODD11_A, D.ODD11),
    ],
)
def test_matrix_transcriptions(ours, theirs):
    assert ours == M(theirs)


def test_dim4_and_basis():
    for k, text in D.DIM4.items():
        assert N.DIM4[k].matrix() == M(text)
    assert [P.matrix() for P in N.BASIS_C4] == [M(t) for t in D.BASIS4]


def test_misc():
    assert N.THETA_SIGMA.images == D.THETA_IN
    assert N.NONEXTREME_P.images == D.NE_P
    assert N.DOUBLE_P_SHADED == Permutation(tuple(j for _, j in D.DOUBLE_SHADED))
    assert (N.EXTREME_K, N.EXTREME_L) == (D.ISO_K, D.ISO_L)
    assert half_sum(N.EXTREME_P, rotate_pi) == M(D.ISO_BLOCK)
