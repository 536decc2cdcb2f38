"""Exact ranks, polytope and span dimensions, and explicit bases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact_matrix import ExactMatrix, Permutation, SymmetryClass, classify
from .linalg import rank
from .perm_classes import enumerate_class


def _vec(A: ExactMatrix) -> list[Fraction]:
    return list(A.key())


def rational_rank(mats: list[ExactMatrix]) -> int:
    mats = list(mats)
    if not mats:
        return 0
    if len({A.n for A in mats}) != 1:
        raise ValueError("matrices of mixed orders")
    return rank([_vec(A) for A in mats])


def incremental_rank(mats, cap: int | None = None) -> int:
    """Rank of a (possibly long) stream; stops early once ``cap`` is reached."""
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot, reduced row)
    for A in mats:
        v = _vec(A)
        for p, row in basis:
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        piv = next((k for k, x in enumerate(v) if x != 0), None)
        if piv is None:
            continue
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        for idx, (p, row) in enumerate(basis):
            if row[piv] != 0:
                f = row[piv]
                basis[idx] = (p, [a - f * b for a, b in zip(row, v)])
        basis.append((piv, v))
        if cap is not None and len(basis) >= cap:
            break
    return len(basis)


def affine_rank(mats: list[ExactMatrix]) -> int:
    """Dimension of the affine hull."""
    mats = list(mats)
    if len(mats) <= 1:
        return 0
    base = mats[0]
    return rational_rank([A - base for A in mats[1:]])


def dimension_formula(n: int, cls: SymmetryClass | str) -> int:
    cls = SymmetryClass.parse(cls)
    if n < 1:
        raise ValueError("n must be positive")
    if cls is SymmetryClass.DS:
        return (n - 1) ** 2
    if cls in (SymmetryClass.T, SymmetryClass.H):
        return comb(n, 2)
    if cls is SymmetryClass.PI:
        return ((n - 1) ** 2 + 1) // 2 if n % 2 == 0 else (n - 1) ** 2 // 2
    return n * n // 4 if n % 2 == 0 else (n * n - 1) // 4


def span_formula(n: int, cls: SymmetryClass | str) -> int:
    cls = SymmetryClass.parse(cls)
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    if cls is SymmetryClass.DS:
        return (n - 1) ** 2 + 1
    if cls in (SymmetryClass.T, SymmetryClass.H):
        return comb(n, 2) + 1
    even = n if n % 2 == 0 else n - 1
    if cls is SymmetryClass.PI:
        return ((even - 1) ** 2 + 1) // 2 + 1
    return even * even // 4 + 1


def polytope_dimension(n: int, cls: SymmetryClass | str, verify: bool = False) -> int:
    value = dimension_formula(n, cls)
    if verify:
        from .extremality import enumerate_extreme

        got = affine_rank(enumerate_extreme(n, cls))
        if got != value:
            raise AssertionError(f"affine rank {got} differs from formula {value}")
    return value


def verified_polytope_dimension(n: int, cls: SymmetryClass | str) -> int:
    from .extremality import enumerate_extreme

    return affine_rank(enumerate_extreme(n, cls))


def class_span_rank(n: int, cls: SymmetryClass | str) -> int:
    cap = (n - 1) ** 2 + 1 if n > 1 else 1
    return incremental_rank((P.matrix() for P in enumerate_class(n, cls)), cap=cap)


def span_dimension(n: int, cls: SymmetryClass | str, verify: bool = False) -> int:
    value = span_formula(n, cls)
    if verify:
        got = class_span_rank(n, cls)
        if got != value:
            raise AssertionError(f"span rank {got} differs from formula {value}")
    return value


@dataclass(frozen=True)
class BasisSet:
    members: tuple[Permutation, ...]
    perm_class: SymmetryClass
    claimed_dimension: int

    def __post_init__(self):
        if len(set(self.members)) != len(self.members):
            raise ValueError("basis members must be distinct")
        r = rational_rank([P.matrix() for P in self.members])
        if r != len(self.members) or r != self.claimed_dimension:
            raise ValueError(f"rank {r}, size {len(self.members)}, claimed {self.claimed_dimension}")

    def matrices(self) -> list[ExactMatrix]:
        return [P.matrix() for P in self.members]

    def __len__(self) -> int:
        return len(self.members)


def basis_perm_space(m: int) -> BasisSet:
    """Identity, transpositions (i m) and 3-cycles i -> j -> m -> i with i, j < m."""
    if m < 1:
        raise ValueError("m must be positive")
    out = [Permutation.identity(m)]
    for i in range(1, m):
        out.append(Permutation.from_cycles(m, [(i, m)]))
    for i in range(1, m):
        for j in range(1, m):
            if i != j:
                out.append(Permutation.from_cycles(m, [(i, j, m)]))
    return BasisSet(tuple(out), SymmetryClass.DS, (m - 1) ** 2 + 1)


def _mirror_fill(img: list[int], n: int) -> Permutation:
    for a in range(1, n // 2 + 1):
        img[n + 1 - a] = n + 1 - img[a]
    return Permutation(tuple(img[1:]))


def basis_centro(n: int) -> BasisSet:
    """Basis of the span of the centrosymmetric permutation matrices, n even."""
    if n % 2 or n < 2:
        raise ValueError("n must be even and positive")
    m = n // 2
    out = []
    for P in basis_perm_space(m).members:
        img = [0] * (n + 1)
        for a in range(1, m + 1):
            img[a] = P(a)
        out.append(_mirror_fill(img, n))
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            img = [0] * (n + 1)
            img[i] = m + j
            rows = [r for r in range(1, m + 1) if r != i]
            cols = [c for c in range(1, m + 1) if c != m + 1 - j]
            for r, c in zip(rows, cols):
                img[r] = c
            out.append(_mirror_fill(img, n))
    return BasisSet(tuple(out), SymmetryClass.PI, 2 * m * m - 2 * m + 2)


def _th_even(n: int) -> list[Permutation]:
    m = n // 2
    out = []
    pairs = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    for i, j in pairs:
        tau = Permutation.from_cycles(m, [(i, j)])
        img = [0] * (n + 1)
        for a in range(1, m + 1):
            img[a] = tau(a)
        out.append(_mirror_fill(img, n))
    for i, j in pairs:
        tau = Permutation.from_cycles(m, [(i, j)])
        img = [0] * (n + 1)
        for a in range(1, m + 1):
            img[a] = n + 1 - tau(a)
        out.append(_mirror_fill(img, n))
    for i in range(m + 1):
        img = [0] * (n + 1)
        for a in range(1, m + 1):
            img[a] = a if a <= i else n + 1 - a
        out.append(_mirror_fill(img, n))
    return out


def basis_th(n: int) -> BasisSet:
    """Basis of the span of the symmetric, Hankel-symmetric permutation matrices."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2 == 0:
        members = _th_even(n)
    else:
        c = (n + 1) // 2
        members = []
        for P in _th_even(n - 1):
            img = [0]
            for a in range(1, n):
                b = P(a)
                img.append(b if b < c else b + 1)
            img.insert(c, c)
            members.append(Permutation(tuple(img[1:])))
    for P in members:
        tags = classify(P.matrix())
        assert SymmetryClass.T in tags and SymmetryClass.H in tags
    even = n - n % 2
    return BasisSet(tuple(members), SymmetryClass.TH, even * even // 4 + 1)
