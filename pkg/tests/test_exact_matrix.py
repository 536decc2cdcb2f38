from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import reference_data as D
from symds.exact_matrix import (
    ExactMatrix,
    Permutation,
    SymmetryClass,
    classify,
    complement,
    digraph,
    hankel_transpose,
    in_polytope,
    is_centrosymmetric,
    is_doubly_stochastic,
    loopy_graph,
    position_orbit,
    reverse_columns,
    rotate_pi,
    satisfies_symmetry,
    submatrix,
    transpose,
)


def M(text, scale=1):
    return ExactMatrix.from_rows(D.grid(text, scale))


perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))
small_mats = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=n, max_size=n), min_size=n, max_size=n)
).map(ExactMatrix.from_rows)


class TestConstruction:
    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            ExactMatrix.from_rows([[1, 0], [0]])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            ExactMatrix.from_rows([])

    def test_rejects_float(self):
        with pytest.raises((TypeError, ValueError)):
            ExactMatrix.from_rows([[0.5]])

    def test_fraction_strings_and_scale(self):
        A = ExactMatrix.from_rows([["1/2", 1], [1, "1/2"]], Fraction(1, 2))
        assert A[1, 1] == Fraction(1, 4) and A[1, 2] == Fraction(1, 2)

    def test_one_based_indexing(self):
        A = ExactMatrix.from_rows([[1, 2], [3, 4]])
        assert A[2, 1] == 3
        with pytest.raises(IndexError):
            A[0, 1]

    def test_identity_and_hankel_identity(self):
        assert ExactMatrix.identity(3).support() == {(1, 1), (2, 2), (3, 3)}
        assert ExactMatrix.hankel_identity(3).support() == {(1, 3), (2, 2), (3, 1)}

    def test_hashable_and_equal(self):
        assert {ExactMatrix.identity(2), ExactMatrix.identity(2)} == {ExactMatrix.identity(2)}


class TestOperators:
    def test_shift_transpose_is_inverse(self):
        P = M(D.SHIFT6)
        assert transpose(P) == Permutation.from_matrix(P).inverse().matrix()

    def test_hankel3_fixed(self):
        P = M(D.HANKEL3)
        assert hankel_transpose(P) == P

    def test_extra_is_rotation_fixed(self):
        E = M(D.EXTRA4)
        assert rotate_pi(E) == E

    def test_hankel_transpose_formula(self):
        A = ExactMatrix.from_function(4, lambda i, j: 10 * i + j)
        H = hankel_transpose(A)
        assert all(H[i, j] == A[5 - j, 5 - i] for i in range(1, 5) for j in range(1, 5))

    @given(small_mats)
    def test_group_relations(self, A):
        assert transpose(transpose(A)) == A
        assert hankel_transpose(hankel_transpose(A)) == A
        assert rotate_pi(A) == transpose(hankel_transpose(A)) == hankel_transpose(transpose(A))

    @given(small_mats)
    def test_reverse_columns_is_product_with_hankel_identity(self, A):
        assert reverse_columns(A) == A @ ExactMatrix.hankel_identity(A.n)


class TestClassify:
    def test_hankel4_all_classes(self):
        assert classify(M(D.HANKEL4)) == {SymmetryClass.T, SymmetryClass.H, SymmetryClass.PI, SymmetryClass.DS}

    def test_extra_only_pi(self):
        assert classify(M(D.EXTRA4)) == {SymmetryClass.PI, SymmetryClass.DS}

    def test_symmetry_tags_without_ds(self):
        assert classify(ExactMatrix.from_rows([[1, 1], [0, 1]])) == {SymmetryClass.H}
        assert classify(ExactMatrix.from_rows([[1, 2], [3, 4]])) == frozenset()

    def test_negative_entry_keeps_symmetry_tags(self):
        A = ExactMatrix.from_rows([[2, -1], [-1, 2]])
        assert classify(A) == {SymmetryClass.T, SymmetryClass.H, SymmetryClass.PI}

    @given(small_mats)
    def test_two_of_three(self, A):
        tags = classify(A) & {SymmetryClass.T, SymmetryClass.H, SymmetryClass.PI}
        assert len(tags) in (0, 1, 3)
        assert (SymmetryClass.PI in tags) == (transpose(A) == hankel_transpose(A))

    def test_cent_A_doubly_stochastic(self):
        A = M(*D.CENT_A)
        assert is_doubly_stochastic(A) and is_centrosymmetric(A)

    def test_negative_entry_not_stochastic(self):
        assert not is_doubly_stochastic(ExactMatrix.from_rows([[2, -1], [-1, 2]]))

    def test_in_polytope(self):
        assert in_polytope(M(*D.SH_A2), "th")
        assert not in_polytope(M(D.EXTRA4), "t")

    def test_parse_class(self):
        assert SymmetryClass.parse("PI") is SymmetryClass.PI
        with pytest.raises(ValueError):
            SymmetryClass.parse("x")

    @given(perms)
    def test_th_implies_pi(self, P):
        A = P.matrix()
        if satisfies_symmetry(A, "th"):
            assert satisfies_symmetry(A, "pi")


class TestOrbitsAndBlocks:
    def test_th_orbit_generic(self):
        assert position_orbit(4, "th", 1, 2) == {(1, 2), (2, 1), (3, 4), (4, 3)}

    def test_th_orbit_center(self):
        assert position_orbit(5, "th", 3, 3) == {(3, 3)}

    def test_th_orbit_on_diagonal(self):
        assert position_orbit(4, "th", 1, 1) == {(1, 1), (4, 4)}

    def test_submatrix_and_complement(self):
        A = M(*D.ISO_A)
        assert submatrix(A, D.ISO_K, D.ISO_L) == M(*D.ISO_BLOCK)
        assert complement(A, D.ISO_K, D.ISO_L) == ExactMatrix.identity(2)

    def test_submatrix_rejects_non_square(self):
        with pytest.raises(ValueError):
            submatrix(ExactMatrix.identity(3), [1, 2], [1])


class TestPermutation:
    def test_round_trip(self):
        P = Permutation((2, 3, 1))
        assert Permutation.from_matrix(P.matrix()) == P

    def test_rejects_bad(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))

    @given(perms, st.data())
    def test_product_matches_matrix_product(self, P, data):
        Q = Permutation(tuple(data.draw(st.permutations(range(1, P.n + 1)))))
        assert (P * Q).matrix() == P.matrix() @ Q.matrix()

    @given(perms)
    def test_operator_images(self, P):
        assert P.inverse().matrix() == transpose(P.matrix())
        assert P.rotate_pi().matrix() == rotate_pi(P.matrix())
        assert P.hankel_transpose().matrix() == hankel_transpose(P.matrix())

    def test_cycles_start_at_minimum(self):
        assert Permutation((3, 2, 4, 6, 5, 7, 1, 8)).cycles() == [(1, 3, 4, 6, 7), (2,), (5,), (8,)]

    def test_from_cycles(self):
        assert Permutation.from_cycles(4, [(1, 3), (2, 4)]).images == (3, 4, 1, 2)


class TestGraphs:
    def test_A1_loopy_graphs(self):
        A1 = M(D.SH_A1)
        assert loopy_graph(A1).edges == {(1, 4), (2, 5), (3, 3)}
        assert loopy_graph(A1, hankel=True).edges == {(1, 2), (4, 5), (3, 3)}

    def test_A2_cycle_and_hankel_paths(self):
        A2 = M(*D.SH_A2)
        G = loopy_graph(A2)
        assert G.components() == [[1, 2, 3, 4, 5, 6]]
        assert all(G.degree(v) == 2 for v in range(1, 7))
        Gh = loopy_graph(A2, hankel=True)
        assert {v for v in range(1, 7) if Gh.has_loop(v)} == {1, 3, 4, 6}
        assert Gh.components() == [[1, 3, 5], [2, 4, 6]]

    def test_loopy_graph_needs_symmetric(self):
        with pytest.raises(ValueError):
            loopy_graph(M(D.EXTRA4))

    def test_digraph_multiplicity(self):
        G = digraph(ExactMatrix.from_rows([[2, 0], [0, 2]]))
        assert G.arcs == ((1, 1), (1, 1), (2, 2), (2, 2))
        assert G.out_degree(1) == 2
