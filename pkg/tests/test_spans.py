from math import comb

import pytest

import oracles as O
import reference_data as D
from symds.exact_matrix import ExactMatrix, Permutation, SymmetryClass, classify
from symds.extremality import enumerate_extreme
from symds.perm_classes import enumerate_class
from symds.spans import (
    BasisSet,
    affine_rank,
    basis_centro,
    basis_perm_space,
    basis_th,
    class_span_rank,
    dimension_formula,
    incremental_rank,
    polytope_dimension,
    rational_rank,
    span_dimension,
    span_formula,
)


def g(A):
    return A.to_lists()


DIM4 = {k: ExactMatrix.from_rows(D.grid(t)) for k, t in D.DIM4.items()}


class TestDim4:
    def test_all_eight(self):
        assert rational_rank(list(DIM4.values())) == 6
        assert affine_rank(list(DIM4.values())) == 5

    def test_first_six_independent(self):
        assert rational_rank([DIM4[k] for k in range(1, 7)]) == 6

    def test_alternative_six_independent(self):
        assert rational_rank([DIM4[k] for k in (1, 2, 3, 5, 7, 8)]) == 6

    def test_formulas(self):
        assert dimension_formula(4, "pi") == 5
        assert polytope_dimension(4, "pi", verify=True) == 5
        assert span_dimension(4, "pi", verify=True) == 6


# frozen from the sympy oracle on enumerated vertices
AFFINE = {
    ("pi", 2): 1, ("pi", 3): 2, ("pi", 4): 5, ("pi", 5): 8, ("pi", 6): 13,
    ("th", 2): 1, ("th", 3): 2, ("th", 4): 4, ("th", 5): 6, ("th", 6): 9, ("th", 7): 12,
    ("t", 3): 3, ("t", 4): 6, ("h", 4): 6, ("t", 5): 10, ("h", 5): 10,
}


@pytest.mark.parametrize("key", sorted(AFFINE))
def test_affine_rank_of_vertices(key):
    cls, n = key
    vs = enumerate_extreme(n, cls)
    got = affine_rank(vs)
    assert got == AFFINE[key] == dimension_formula(n, cls)
    if n <= 5:
        assert got == O.sympy_affine_rank([g(A) for A in vs])


@pytest.mark.parametrize("n", range(1, 8))
def test_dimension_formula_values(n):
    assert dimension_formula(n, "t") == dimension_formula(n, "h") == comb(n, 2)
    assert dimension_formula(n, "ds") == (n - 1) ** 2


@pytest.mark.parametrize("cls", ["ds", "t", "pi", "th"])
@pytest.mark.parametrize("n", range(2, 7))
def test_span_rank_matches_formula_and_sympy(n, cls):
    r = class_span_rank(n, cls)
    assert r == span_formula(n, cls)
    if n <= 5:
        assert r == O.sympy_rank([g(P.matrix()) for P in enumerate_class(n, cls)])


def test_incremental_rank_cap():
    mats = [P.matrix() for P in enumerate_class(4, "ds")]
    assert incremental_rank(mats) == 10
    assert incremental_rank(mats, cap=3) == 3


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        rational_rank([ExactMatrix.identity(2), ExactMatrix.identity(3)])


def test_basis_centro4_displayed_order():
    want = [ExactMatrix.from_rows(D.grid(t)) for t in D.BASIS4]
    assert basis_centro(4).matrices() == want


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_basis_centro(n):
    B = basis_centro(n)
    m = n // 2
    assert len(B) == 2 * m * m - 2 * m + 2 == span_formula(n, "pi")
    members = [P.matrix() for P in enumerate_class(n, "pi")] if n <= 6 else []
    assert rational_rank(B.matrices() + members) == len(B)
    assert all(P.is_centrosymmetric() for P in B.members)


@pytest.mark.parametrize("n", range(2, 9))
def test_basis_th(n):
    B = basis_th(n)
    e = n - n % 2
    assert len(B) == e * e // 4 + 1
    members = [P.matrix() for P in enumerate_class(n, "th")]
    assert rational_rank(B.matrices() + members) == len(B) == rational_rank(B.matrices())
    for P in B.members:
        assert {SymmetryClass.T, SymmetryClass.H} <= classify(P.matrix())


def test_basis_th_small_rejected():
    with pytest.raises(ValueError):
        basis_th(1)


def test_basis_centro_odd_rejected():
    with pytest.raises(ValueError):
        basis_centro(3)


@pytest.mark.parametrize("m", range(1, 6))
def test_basis_perm_space(m):
    B = basis_perm_space(m)
    assert len(B) == (m - 1) ** 2 + 1
    if m <= 4:
        allp = [P.matrix() for P in enumerate_class(m, "ds")]
        assert rational_rank(B.matrices() + allp) == len(B)


def test_basis_set_validates():
    with pytest.raises(ValueError):
        BasisSet((Permutation((1, 2)), Permutation((1, 2))), SymmetryClass.DS, 2)
    with pytest.raises(ValueError):
        BasisSet((Permutation((1, 2)),), SymmetryClass.DS, 2)
