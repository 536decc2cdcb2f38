"""Exact rational matrices, permutations and the three symmetry operators.

Indices are 1-based at every public entry point: ``A[i, j]`` is the entry in
row ``i`` and column ``j`` with ``1 <= i, j <= n``.  The operators are

* ``transpose``:        (i, j) -> (j, i)
* ``hankel_transpose``: (i, j) -> (n+1-j, n+1-i)   (reflection in the antidiagonal)
* ``rotate_pi``:        (i, j) -> (n+1-i, n+1-j)   (rotation by 180 degrees)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Rational = Fraction


class SymmetryClass(str, enum.Enum):
    """Polytope / permutation class tags."""

    DS = "ds"
    T = "t"
    H = "h"
    PI = "pi"
    TH = "th"

    @classmethod
    def parse(cls, value: "str | SymmetryClass") -> "SymmetryClass":
        if isinstance(value, SymmetryClass):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown symmetry class {value!r}") from None


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use Fraction or 'p/q' strings")
    return Fraction(x)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense square matrix of exact rationals (immutable)."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_frac(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix order must be positive")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], scale=1) -> "ExactMatrix":
        s = _frac(scale)
        return cls(tuple(tuple(_frac(x) * s for x in r) for r in rows))

    @classmethod
    def from_function(cls, n: int, f) -> "ExactMatrix":
        return cls(tuple(tuple(f(i, j) for j in range(1, n + 1)) for i in range(1, n + 1)))

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, lambda i, j: 0)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, lambda i, j: int(i == j))

    @classmethod
    def hankel_identity(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, lambda i, j: int(i + j == n + 1))

    @classmethod
    def ones(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, lambda i, j: 1)

    # access ---------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"position {ij} outside a {self.n}x{self.n} matrix")
        return self.rows[i - 1][j - 1]

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for i, r in enumerate(self.rows, 1):
            for j, x in enumerate(r, 1):
                yield i, j, x

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, j, x in self.entries() if x != 0)

    def row_sums(self) -> list[Fraction]:
        return [sum(r, Fraction(0)) for r in self.rows]

    def col_sums(self) -> list[Fraction]:
        return [sum(c, Fraction(0)) for c in zip(*self.rows)]

    def key(self) -> tuple[Fraction, ...]:
        """Row-major entry tuple; a total order for deterministic sorting."""
        return tuple(x for r in self.rows for x in r)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    # predicates -----------------------------------------------------------

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for r in self.rows for x in r)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.rows for x in r)

    def is_zero_one(self) -> bool:
        return all(x in (0, 1) for r in self.rows for x in r)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_permutation_matrix(self) -> bool:
        return self.is_zero_one() and all(s == 1 for s in self.row_sums()) and all(
            s == 1 for s in self.col_sums()
        )

    # arithmetic -----------------------------------------------------------

    def _zip(self, other: "ExactMatrix", op) -> "ExactMatrix":
        if other.n != self.n:
            raise ValueError("order mismatch")
        return ExactMatrix(tuple(tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = _frac(c)
        return ExactMatrix(tuple(tuple(c * x for x in r) for r in self.rows))

    def __mul__(self, c) -> "ExactMatrix":
        if isinstance(c, ExactMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.n != self.n:
            raise ValueError("order mismatch")
        cols = list(zip(*other.rows))
        return ExactMatrix(
            tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self.rows)
        )

    def __le__(self, other: "ExactMatrix") -> bool:
        """Entrywise comparison."""
        if other.n != self.n:
            raise ValueError("order mismatch")
        return all(a <= b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)


def transpose(A: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(tuple(zip(*A.rows)))


def hankel_transpose(A: ExactMatrix) -> ExactMatrix:
    n = A.n
    return ExactMatrix.from_function(n, lambda i, j: A[n + 1 - j, n + 1 - i])


def rotate_pi(A: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(tuple(tuple(reversed(r)) for r in reversed(A.rows)))


def reverse_columns(A: ExactMatrix) -> ExactMatrix:
    """A @ L_n."""
    return ExactMatrix(tuple(tuple(reversed(r)) for r in A.rows))


def is_symmetric(A: ExactMatrix) -> bool:
    return transpose(A) == A


def is_hankel_symmetric(A: ExactMatrix) -> bool:
    return hankel_transpose(A) == A


def is_centrosymmetric(A: ExactMatrix) -> bool:
    return rotate_pi(A) == A


def is_doubly_stochastic(A: ExactMatrix) -> bool:
    return (
        A.is_nonnegative()
        and all(s == 1 for s in A.row_sums())
        and all(s == 1 for s in A.col_sums())
    )


def classify(A: ExactMatrix) -> frozenset[SymmetryClass]:
    """Satisfied tags among T, H, PI, plus DS when A is doubly stochastic."""
    tags = set()
    if is_symmetric(A):
        tags.add(SymmetryClass.T)
    if is_hankel_symmetric(A):
        tags.add(SymmetryClass.H)
    if is_centrosymmetric(A):
        tags.add(SymmetryClass.PI)
    if is_doubly_stochastic(A):
        tags.add(SymmetryClass.DS)
    return frozenset(tags)


def satisfies_symmetry(A: ExactMatrix, cls: SymmetryClass | str) -> bool:
    """Symmetry part of membership (no stochasticity check)."""
    cls = SymmetryClass.parse(cls)
    if cls is SymmetryClass.DS:
        return True
    if cls is SymmetryClass.T:
        return is_symmetric(A)
    if cls is SymmetryClass.H:
        return is_hankel_symmetric(A)
    if cls is SymmetryClass.PI:
        return is_centrosymmetric(A)
    return is_symmetric(A) and is_hankel_symmetric(A)


def in_polytope(A: ExactMatrix, cls: SymmetryClass | str) -> bool:
    """Membership in Omega_n restricted to the symmetry class."""
    return is_doubly_stochastic(A) and satisfies_symmetry(A, cls)


def position_orbit(n: int, cls: SymmetryClass | str, i: int, j: int) -> frozenset[tuple[int, int]]:
    """Orbit of position (i, j) under the operator group fixing the class."""
    cls = SymmetryClass.parse(cls)
    gens = {
        SymmetryClass.DS: (),
        SymmetryClass.T: ("t",),
        SymmetryClass.H: ("h",),
        SymmetryClass.PI: ("pi",),
        SymmetryClass.TH: ("t", "h"),
    }[cls]
    moves = {
        "t": lambda a, b: (b, a),
        "h": lambda a, b: (n + 1 - b, n + 1 - a),
        "pi": lambda a, b: (n + 1 - a, n + 1 - b),
    }
    orbit = {(i, j)}
    frontier = [(i, j)]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = moves[g](*p)
            if q not in orbit:
                orbit.add(q)
                frontier.append(q)
    return frozenset(orbit)


def submatrix(A: ExactMatrix, K: Iterable[int], L: Iterable[int]) -> ExactMatrix:
    """A[K, L] with K and L read in increasing order; |K| must equal |L|."""
    K, L = sorted(set(K)), sorted(set(L))
    if not K or not L:
        raise ValueError("index sets must be nonempty")
    if any(not 1 <= k <= A.n for k in K + L):
        raise IndexError("index out of range")
    if len(K) != len(L):
        raise ValueError("only square selections are supported")
    return ExactMatrix(tuple(tuple(A[i, j] for j in L) for i in K))


def complement(A: ExactMatrix, K: Iterable[int], L: Iterable[int]) -> ExactMatrix:
    """A(K, L) = A[complement of K, complement of L]."""
    K, L = set(K), set(L)
    if any(not 1 <= k <= A.n for k in K | L):
        raise IndexError("index out of range")
    full = set(range(1, A.n + 1))
    return submatrix(A, full - K, full - L)


@dataclass(frozen=True)
class Permutation:
    """Permutation in one-line notation, ``images[i-1] = sigma(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)) or not imgs:
            raise ValueError(f"{imgs} is not a permutation of 1..n")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_matrix(cls, P: ExactMatrix) -> "Permutation":
        if not P.is_permutation_matrix():
            raise ValueError("not a permutation matrix")
        return cls(tuple(r.index(1) + 1 for r in P.rows))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_function(self.n, lambda i, j: int(self(i) == j))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Matrix-product order: (P*Q).matrix() == P.matrix() @ Q.matrix()."""
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def rotate_pi(self) -> "Permutation":
        n = self.n
        return Permutation(tuple(n + 1 - self(n + 1 - i) for i in range(1, n + 1)))

    def hankel_transpose(self) -> "Permutation":
        n = self.n
        inv = self.inverse()
        return Permutation(tuple(n + 1 - inv(n + 1 - k) for k in range(1, n + 1)))

    def is_centrosymmetric(self) -> bool:
        n = self.n
        return all(self(i) + self(n + 1 - i) == n + 1 for i in range(1, n + 1))

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.n + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles (fixed points included), each starting at its least element."""
        seen = set()
        out = []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            x = self(s)
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return " ".join(map(str, self.images))


@dataclass(frozen=True)
class LoopyGraph:
    """Undirected graph on 1..vertex_count; an edge (i, i) is a loop."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def has_loop(self, v: int) -> bool:
        return (v, v) in self.edges

    def degree(self, v: int) -> int:
        """Loops count twice."""
        return sum(2 if a == b else 1 for a, b in self.edges if v in (a, b))

    def components(self) -> list[list[int]]:
        adj = {v: set() for v in range(1, self.vertex_count + 1)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen, comps = set(), []
        for s in adj:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced_edges(self, vertices: Iterable[int]) -> frozenset[tuple[int, int]]:
        vs = set(vertices)
        return frozenset(e for e in self.edges if e[0] in vs and e[1] in vs)


@dataclass(frozen=True)
class Digraph:
    """Multidigraph; ``arcs`` is a sorted tuple with repetition."""

    vertex_count: int
    arcs: tuple[tuple[int, int], ...]

    def out_degree(self, v: int) -> int:
        return sum(1 for a, _ in self.arcs if a == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, b in self.arcs if b == v)


def loopy_graph(A: ExactMatrix, hankel: bool = False) -> LoopyGraph:
    """G(A) for symmetric A, or the Hankel loopy graph G(A L_n) for Hankel-symmetric A."""
    if hankel:
        if not is_hankel_symmetric(A):
            raise ValueError("Hankel loopy graph needs a Hankel-symmetric matrix")
        A = reverse_columns(A)
    elif not is_symmetric(A):
        raise ValueError("loopy graph needs a symmetric matrix")
    edges = frozenset((i, j) for i, j, x in A.entries() if x != 0 and i <= j)
    return LoopyGraph(A.n, edges)


def digraph(A: ExactMatrix) -> Digraph:
    if not (A.is_integral() and A.is_nonnegative()):
        raise ValueError("digraph needs a nonnegative integral matrix")
    arcs = []
    for i, j, x in A.entries():
        arcs.extend([(i, j)] * int(x))
    return Digraph(A.n, tuple(arcs))
