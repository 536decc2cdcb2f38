"""Named matrices and permutations used by the reproduction table."""

from __future__ import annotations

from fractions import Fraction

from .exact_matrix import ExactMatrix, Permutation

Q4 = Fraction(1, 4)
H2 = Fraction(1, 2)


def _sparse(n: int, entries: dict[tuple[int, int], int], scale) -> ExactMatrix:
    return ExactMatrix.from_function(n, lambda i, j: Fraction(entries.get((i, j), 0)) * scale)


# shift 1 -> 2 -> ... -> 6 -> 1 and the two involutions splitting P + P^t
SYM_EVEN_P = Permutation((2, 3, 4, 5, 6, 1))
SYM_EVEN_Q1 = Permutation((2, 1, 4, 3, 6, 5))
SYM_EVEN_Q2 = Permutation((6, 3, 2, 5, 4, 1))

HANKEL_P = Permutation((2, 3, 1))
HANKEL_Q = Permutation((2, 1, 4, 3))

EXTRA = Permutation((2, 4, 1, 3))

THETA_SIGMA = Permutation((2, 1, 6, 5, 4, 3, 8, 7))
THETA_IMAGE = (-1, -2, 4, 3)

DOUBLE_A = ExactMatrix.from_rows(
    [
        [1, 1, 0, 1, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [1, 0, 1, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 0, 1, 1],
    ]
)
# reduced matrix as printed (its last row)
DOUBLE_B_DISPLAYED = ExactMatrix.from_rows([[1, 1, 0, 1], [0, 0, 1, 1], [0, 0, 1, 0], [1, 1, 1, 0]])
# the shaded permutation
DOUBLE_P_SHADED = Permutation((2, 5, 6, 1, 8, 3, 4, 7))

CROSS3 = ExactMatrix.from_rows([[0, 1, 0], [1, 0, 1], [0, 1, 0]])

CENT_A = ExactMatrix.from_rows([[3, 1, 0], [1, 2, 1], [0, 1, 3]], Q4)
CENT_E1 = ExactMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]], H2)
CENT_E2 = ExactMatrix.from_rows([[1, 1, 0], [1, 0, 1], [0, 1, 1]], H2)

DIM4 = {
    1: Permutation((1, 2, 3, 4)),
    2: Permutation((2, 1, 4, 3)),
    3: Permutation((4, 2, 3, 1)),
    4: Permutation((1, 3, 2, 4)),
    5: Permutation((3, 1, 4, 2)),
    6: Permutation((2, 4, 1, 3)),
    7: Permutation((4, 3, 2, 1)),
    8: Permutation((3, 4, 1, 2)),
}

BASIS_C4 = [
    Permutation((1, 2, 3, 4)),
    Permutation((2, 1, 4, 3)),
    Permutation((3, 1, 4, 2)),
    Permutation((4, 2, 3, 1)),
    Permutation((1, 3, 2, 4)),
    Permutation((2, 4, 1, 3)),
]

EXTREME_Q = Permutation((2, 1, 4, 5, 3))
EXTREME_A = ExactMatrix.from_rows(
    [[0, 1, 1, 0, 0], [2, 0, 0, 0, 0], [0, 1, 0, 1, 0], [0, 0, 0, 0, 2], [0, 0, 1, 1, 0]], H2
)
EXTREME_P = Permutation((2, 1, 3))
EXTREME_K = (1, 3, 5)
EXTREME_L = (2, 3, 4)

SYMHANKEL_A1 = Permutation((4, 5, 3, 1, 2)).matrix()
SYMHANKEL_A2 = ExactMatrix.from_rows(
    [
        [0, 1, 0, 0, 0, 1],
        [1, 0, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 0, 1],
        [1, 0, 0, 0, 1, 0],
    ],
    H2,
)

NONEXTREME_P = Permutation((3, 2, 4, 6, 5, 7, 1, 8))
NONEXTREME_QUARTER = ExactMatrix.from_rows(
    [
        [2, 0, 1, 0, 0, 0, 1, 0],
        [0, 2, 1, 0, 0, 0, 0, 1],
        [1, 1, 0, 1, 1, 0, 0, 0],
        [0, 0, 1, 2, 0, 1, 0, 0],
        [0, 0, 1, 0, 2, 1, 0, 0],
        [0, 0, 0, 1, 1, 0, 1, 1],
        [1, 0, 0, 0, 0, 1, 2, 0],
        [0, 1, 0, 0, 0, 1, 0, 2],
    ],
    Q4,
)
NONEXTREME_R = ExactMatrix.from_rows(
    [
        [2, 0, 1, 0, 0, 0, 1, 0],
        [0, 2, 1, 0, 0, 0, 0, 1],
        [1, 1, 0, 2, 0, 0, 0, 0],
        [0, 0, 2, 2, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 2, 0, 0],
        [0, 0, 0, 0, 2, 0, 1, 1],
        [1, 0, 0, 0, 0, 1, 2, 0],
        [0, 1, 0, 0, 0, 1, 0, 2],
    ],
    Q4,
)
NONEXTREME_R2 = ExactMatrix.from_rows(
    [
        [2, 0, 1, 0, 0, 0, 1, 0],
        [0, 2, 1, 0, 0, 0, 0, 1],
        [1, 1, 0, 0, 2, 0, 0, 0],
        [0, 0, 0, 2, 0, 2, 0, 0],
        [0, 0, 2, 0, 2, 0, 0, 0],
        [0, 0, 0, 2, 0, 0, 1, 1],
        [1, 0, 0, 0, 0, 1, 2, 0],
        [0, 1, 0, 0, 0, 1, 0, 2],
    ],
    Q4,
)

ODD7_A2 = ExactMatrix.from_rows(
    [
        [0, 1, 0, 0, 0, 0, 1],
        [1, 0, 1, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 1, 0],
        [0, 0, 0, 0, 1, 0, 1],
        [1, 0, 0, 0, 0, 1, 0],
    ],
    H2,
)

ODD9_A1 = _sparse(
    9,
    {
        (1, 7): 1, (1, 8): 3, (2, 7): 1, (2, 9): 3, (3, 6): 2, (3, 8): 1, (3, 9): 1,
        (4, 5): 2, (4, 7): 2, (5, 4): 2, (5, 6): 2, (6, 3): 2, (6, 5): 2,
        (7, 1): 1, (7, 2): 1, (7, 4): 2, (8, 1): 3, (8, 3): 1, (9, 2): 3, (9, 3): 1,
    },
    Q4,
)

ODD11_A = _sparse(
    11,
    {
        (1, 2): 3, (1, 5): 1, (2, 1): 3, (2, 3): 1, (3, 2): 1, (3, 4): 3,
        (4, 3): 3, (4, 5): 1, (5, 1): 1, (5, 4): 1, (5, 6): 2, (6, 5): 2, (6, 7): 2,
        (7, 6): 2, (7, 8): 1, (7, 11): 1, (8, 7): 1, (8, 9): 3, (9, 8): 3, (9, 10): 1,
        (10, 9): 1, (10, 11): 3, (11, 7): 1, (11, 10): 3,
    },
    Q4,
)
