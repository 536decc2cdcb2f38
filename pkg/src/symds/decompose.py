"""Birkhoff-type decompositions and the structured permutation splittings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_matrix import (
    ExactMatrix,
    Permutation,
    SymmetryClass,
    hankel_transpose,
    is_centrosymmetric,
    is_doubly_stochastic,
    rotate_pi,
    transpose,
)
from .term_rank import find_centro_permutation, lex_first_perfect_matching


class SplitError(ValueError):
    """No split of the requested kind exists."""


@dataclass(frozen=True)
class DecompositionResult:
    terms: tuple[tuple[Fraction, Permutation], ...]
    target_order: int
    perm_class: SymmetryClass = SymmetryClass.DS

    def total(self) -> ExactMatrix:
        acc = ExactMatrix.zeros(self.target_order)
        for c, P in self.terms:
            acc = acc + P.matrix().scale(c)
        return acc

    def coefficient_sum(self) -> Fraction:
        return sum((c for c, _ in self.terms), Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)


def _greedy(A: ExactMatrix, pick, cls: SymmetryClass) -> DecompositionResult:
    n = A.n
    rest = [list(r) for r in A.rows]
    terms = []
    while any(x != 0 for r in rest for x in r):
        P = pick(rest)
        if P is None:
            raise ArithmeticError("no permutation fits the remaining support")
        c = min(rest[i - 1][P(i) - 1] for i in range(1, n + 1))
        for i in range(1, n + 1):
            rest[i - 1][P(i) - 1] -= c
        terms.append((c, P))
    return DecompositionResult(tuple(terms), n, cls)


def _pattern(rest) -> list[list[int]]:
    return [[int(x != 0) for x in r] for r in rest]


def birkhoff(A: ExactMatrix) -> DecompositionResult:
    """Greedy convex decomposition into permutation matrices."""
    if not is_doubly_stochastic(A):
        raise ValueError("matrix is not doubly stochastic")

    def pick(rest):
        cols = lex_first_perfect_matching(_pattern(rest))
        return None if cols is None else Permutation(tuple(j + 1 for j in cols))

    return _greedy(A, pick, SymmetryClass.DS)


def centro_birkhoff(A: ExactMatrix) -> DecompositionResult:
    """Convex decomposition into centrosymmetric permutation matrices (even order)."""
    if A.n % 2:
        raise ValueError("odd order: such a decomposition need not exist")
    if not (is_doubly_stochastic(A) and is_centrosymmetric(A)):
        raise ValueError("matrix is not centrosymmetric doubly stochastic")

    def pick(rest):
        return find_centro_permutation(ExactMatrix.from_rows(_pattern(rest)))

    return _greedy(A, pick, SymmetryClass.PI)


def centro_birkhoff_integral(A: ExactMatrix, k: int) -> list[Permutation]:
    """k centrosymmetric permutations summing to the integral matrix A."""
    n = A.n
    if n % 2:
        raise ValueError("order must be even")
    if not (A.is_integral() and A.is_nonnegative() and is_centrosymmetric(A)):
        raise ValueError("matrix must be nonnegative, integral and centrosymmetric")
    if any(s != k for s in A.row_sums() + A.col_sums()):
        raise ValueError(f"all line sums must equal {k}")
    rest = [[int(x) for x in r] for r in A.rows]
    out = []
    for _ in range(k):
        P = find_centro_permutation(ExactMatrix.from_rows(_pattern(rest)))
        if P is None:
            raise ArithmeticError("no centrosymmetric permutation fits the remaining support")
        for i in range(1, n + 1):
            rest[i - 1][P(i) - 1] -= 1
        out.append(P)
    return out


def symmetric_split(P: Permutation) -> tuple[Permutation, Permutation] | None:
    """Involutions Q1 != Q2 with P + P^t = Q1 + Q2, or None when 1/2(P + P^t) is extreme.

    Each even cycle (i1 ... ik) with k >= 4, written from its least element,
    contributes (i1 i2)(i3 i4)... to Q1 and (i2 i3)...(ik i1) to Q2; cycles of
    length at most 2 go to both.  An odd cycle of length >= 3 admits no such
    split, so if it occurs together with an even cycle a SplitError is raised.
    """
    cycles = P.cycles()
    even = [c for c in cycles if len(c) >= 4 and len(c) % 2 == 0]
    odd = [c for c in cycles if len(c) >= 3 and len(c) % 2 == 1]
    if not even:
        return None
    if odd:
        raise SplitError("P + P^t is not a sum of two symmetric permutation matrices")
    q1 = list(range(P.n + 1))
    q2 = list(range(P.n + 1))

    def swap(q, a, b):
        q[a], q[b] = b, a

    for c in cycles:
        if len(c) == 2:
            swap(q1, *c)
            swap(q2, *c)
        elif len(c) >= 4:
            k = len(c)
            for t in range(0, k, 2):
                swap(q1, c[t], c[t + 1])
                swap(q2, c[t + 1], c[(t + 2) % k])
    return Permutation(tuple(q1[1:])), Permutation(tuple(q2[1:]))


def hankel_split(P: Permutation) -> tuple[Permutation, Permutation] | None:
    """Hankel analogue of symmetric_split, via right multiplication by L_n."""
    n = P.n
    L = Permutation(tuple(range(n, 0, -1)))
    # (P + P^h) L = R + R^t with R = P L
    s = symmetric_split(P * L)
    if s is None:
        return None
    return s[0] * L, s[1] * L


def centro_split(P: Permutation) -> tuple[Permutation, Permutation]:
    """Centrosymmetric Q1, Q2 with P + P^pi = Q1 + Q2 (even order)."""
    n = P.n
    if n % 2:
        raise ValueError("order must be even")
    if P.is_centrosymmetric():
        return P, P
    m = n // 2
    B = P.matrix() + rotate_pi(P.matrix())
    weight = [[0] * m for _ in range(m)]
    itype = [[True] * m for _ in range(m)]
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            s, t = B[a, b], B[a, n + 1 - b]
            assert s == 0 or t == 0
            weight[a - 1][b - 1] = int(s + t)
            itype[a - 1][b - 1] = s != 0
    r1 = lex_first_perfect_matching([[int(w > 0) for w in row] for row in weight])
    assert r1 is not None
    rest = [row[:] for row in weight]
    for a, b in enumerate(r1):
        rest[a][b] -= 1
    r2 = lex_first_perfect_matching(rest)
    assert r2 is not None

    def expand(r):
        img = [0] * (n + 1)
        for a0, b0 in enumerate(r):
            a, b = a0 + 1, b0 + 1
            if itype[a0][b0]:
                img[a], img[n + 1 - a] = b, n + 1 - b
            else:
                img[a], img[n + 1 - a] = n + 1 - b, b
        return Permutation(tuple(img[1:]))

    return expand(r1), expand(r2)


def quarter_form(P: Permutation) -> ExactMatrix:
    """1/4 (P + P^t + P^h + P^pi), a member of the doubly symmetric polytope."""
    M = P.matrix()
    return (M + transpose(M) + hankel_transpose(M) + rotate_pi(M)).scale(Fraction(1, 4))


def half_sum(P: Permutation, op) -> ExactMatrix:
    M = P.matrix()
    return (M + op(M)).scale(Fraction(1, 2))
