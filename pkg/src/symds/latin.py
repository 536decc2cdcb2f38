"""Centrosymmetric latin squares."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .decompose import centro_birkhoff_integral
from .exact_matrix import ExactMatrix, Permutation


@dataclass(frozen=True)
class LatinSquare:
    n: int
    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LatinSquare":
        cells = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(cells), cells)

    def rotate_pi(self) -> "LatinSquare":
        return LatinSquare(self.n, tuple(tuple(reversed(r)) for r in reversed(self.cells)))

    def __str__(self) -> str:
        w = len(str(self.n))
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.cells)


def validate_latin(T, require_centro: bool = False) -> bool:
    """True iff T is a latin square (and, if asked, fixed by the 180-degree rotation)."""
    try:
        rows = [list(r) for r in (T.cells if isinstance(T, LatinSquare) else T)]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            return False
        full = set(range(1, n + 1))
        if any(not isinstance(x, int) or isinstance(x, bool) for r in rows for x in r):
            return False
        if any(set(r) != full for r in rows) or any(set(c) != full for c in zip(*rows)):
            return False
        if require_centro:
            return all(rows[i][j] == rows[n - 1 - i][n - 1 - j] for i in range(n) for j in range(n))
        return True
    except TypeError:
        return False


def cyclic_latin(m: int) -> LatinSquare:
    return LatinSquare.from_rows([[(i + j) % m + 1 for j in range(m)] for i in range(m)])


def latin_block(U: LatinSquare) -> LatinSquare:
    """[U, U + mJ; (U + mJ)^pi, U^pi]."""
    if not validate_latin(U):
        raise ValueError("input is not a latin square")
    m = U.n
    up = [[x + m for x in r] for r in U.cells]
    rot = lambda g: [list(reversed(r)) for r in reversed(g)]  # noqa: E731
    top = [list(a) + b for a, b in zip(U.cells, up)]
    bottom = [a + b for a, b in zip(rot(up), rot([list(r) for r in U.cells]))]
    return LatinSquare.from_rows(top + bottom)


def latin_from_layers(perms: Sequence[Permutation]) -> LatinSquare:
    n = len(perms)
    cells = [[0] * n for _ in range(n)]
    for s, P in enumerate(perms, 1):
        for i in range(1, n + 1):
            cells[i - 1][P(i) - 1] = s
    return LatinSquare.from_rows(cells)


def latin_from_decomposition(n: int) -> LatinSquare:
    """1 Q1 + 2 Q2 + ... + n Qn for a split of J_n into centrosymmetric permutations."""
    if n % 2:
        raise ValueError("centrosymmetric latin squares have even order")
    T = latin_from_layers(centro_birkhoff_integral(ExactMatrix.ones(n), n))
    assert validate_latin(T, require_centro=True)
    return T


def layers(T: LatinSquare) -> list[Permutation]:
    """The permutation matrices P_s with T = sum s P_s."""
    if not validate_latin(T):
        raise ValueError("not a latin square")
    out = []
    for s in range(1, T.n + 1):
        out.append(Permutation(tuple(r.index(s) + 1 for r in T.cells)))
    return out


def is_block_isolated(T: LatinSquare) -> bool:
    """Symbols 1..m fill exactly the two diagonal m x m blocks."""
    n = T.n
    m = n // 2
    return all(
        (T.cells[i][j] <= m) == ((i < m) == (j < m)) for i in range(n) for j in range(n)
    )
