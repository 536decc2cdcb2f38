"""Enumeration and counting of the structured permutation classes, and the
isomorphism between even-order centrosymmetric permutations and signed
permutations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterator

from .exact_matrix import ExactMatrix, Permutation, SymmetryClass

MAX_ENUM_N = 10


def _forced(n: int, cls: SymmetryClass, i: int, j: int) -> list[tuple[int, int]]:
    """All assignments sigma(a) = b implied by sigma(i) = j within the class."""
    moves = {
        SymmetryClass.T: [lambda a, b: (b, a)],
        SymmetryClass.H: [lambda a, b: (n + 1 - b, n + 1 - a)],
        SymmetryClass.PI: [lambda a, b: (n + 1 - a, n + 1 - b)],
        SymmetryClass.TH: [lambda a, b: (b, a), lambda a, b: (n + 1 - b, n + 1 - a)],
    }[cls]
    seen = {(i, j)}
    stack = [(i, j)]
    while stack:
        p = stack.pop()
        for f in moves:
            q = f(*p)
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return sorted(seen)


def enumerate_class(n: int, cls: SymmetryClass | str) -> Iterator[Permutation]:
    """Lazily yield the class members in lexicographic order of one-line notation."""
    cls = SymmetryClass.parse(cls)
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    if cls is SymmetryClass.DS:
        for p in permutations(range(1, n + 1)):
            yield Permutation(p)
        return

    img = [0] * (n + 1)
    used = [False] * (n + 1)

    def place(pairs):
        done = []
        for a, b in pairs:
            if img[a] == b:
                continue
            if img[a] != 0 or used[b]:
                for x, y in done:
                    img[x] = 0
                    used[y] = False
                return None
            img[a] = b
            used[b] = True
            done.append((a, b))
        return done

    def walk(i):
        while i <= n and img[i]:
            i += 1
        if i > n:
            yield Permutation(tuple(img[1:]))
            return
        for j in range(1, n + 1):
            if used[j]:
                continue
            done = place(_forced(n, cls, i, j))
            if done is None:
                continue
            yield from walk(i + 1)
            for a, b in done:
                img[a] = 0
                used[b] = False

    yield from walk(1)


def count_class(n: int, cls: SymmetryClass | str) -> int:
    return sum(1 for _ in enumerate_class(n, cls))


def count_centrosymmetric(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    m = n // 2
    return 2**m * factorial(m)


def count_involutions(n: int) -> int:
    """Number of symmetric (equivalently, of Hankel-symmetric) permutation matrices."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 1, 1  # a(0), a(1)
    if n == 0:
        return 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b


def count_sym_hankel(n: int) -> int:
    """Number of symmetric and Hankel-symmetric permutations of order n."""
    if n < 1:
        raise ValueError("n must be positive")
    k = n // 2
    dfact = 2**k * factorial(k)  # (2k)!!
    total = 0
    for h in range(k // 2 + 1):
        den = factorial(k - 2 * h) * factorial(h) * 2 ** (2 * h)
        q, r = divmod(dfact, den)
        assert r == 0
        total += q
    return total


def formula_count(n: int, cls: SymmetryClass | str) -> int:
    cls = SymmetryClass.parse(cls)
    if cls is SymmetryClass.DS:
        return factorial(n)
    if cls in (SymmetryClass.T, SymmetryClass.H):
        return count_involutions(n)
    if cls is SymmetryClass.PI:
        return count_centrosymmetric(n)
    return count_sym_hankel(n)


@dataclass(frozen=True)
class SignedPermutation:
    """Signed permutation rho of {+-1..+-m} with rho(-i) = -rho(i)."""

    m: int
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if len(imgs) != self.m or sorted(abs(x) for x in imgs) != list(range(1, self.m + 1)):
            raise ValueError(f"{imgs} is not a signed permutation of order {self.m}")
        object.__setattr__(self, "images", imgs)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Matrix-product order, as for Permutation."""
        return SignedPermutation(self.m, tuple(other(self(i)) for i in range(1, self.m + 1)))

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_function(
            self.m, lambda i, j: (1 if self(i) > 0 else -1) if abs(self(i)) == j else 0
        )

    @classmethod
    def identity(cls, m: int) -> "SignedPermutation":
        return cls(m, tuple(range(1, m + 1)))


def theta(P: Permutation) -> SignedPermutation:
    n = P.n
    if n % 2:
        raise ValueError("theta is defined for even order only")
    if not P.is_centrosymmetric():
        raise ValueError("theta needs a centrosymmetric permutation")
    m = n // 2
    out = []
    for i in range(1, m + 1):
        s = P(m + i)
        out.append(s - m if s > m else s - m - 1)
    return SignedPermutation(m, tuple(out))


def theta_inverse(S: SignedPermutation) -> Permutation:
    m = S.m
    n = 2 * m
    img = [0] * (n + 1)
    for i in range(1, m + 1):
        v = S(i)
        img[m + i] = m + v if v > 0 else m + 1 + v
        img[m + 1 - i] = n + 1 - img[m + i]
    return Permutation(tuple(img[1:]))
