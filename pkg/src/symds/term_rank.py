"""Term rank, König covers and their centrosymmetric analogues for 0/1 matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .exact_matrix import ExactMatrix, Permutation

Grid = Sequence[Sequence[int]]

EXHAUSTIVE_MAX_N = 10


@dataclass(frozen=True)
class Cover:
    rows: frozenset[int]
    cols: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.rows) + len(self.cols)

    def covers(self, A: ExactMatrix) -> bool:
        return all(i in self.rows or j in self.cols for i, j in A.support())

    def is_pi_invariant(self, n: int) -> bool:
        return all(n + 1 - i in self.rows for i in self.rows) and all(
            n + 1 - j in self.cols for j in self.cols
        )


@dataclass(frozen=True)
class MatchingSelection:
    positions: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.positions)

    def is_valid_for(self, A: ExactMatrix) -> bool:
        rows = [i for i, _ in self.positions]
        cols = [j for _, j in self.positions]
        return (
            len(set(rows)) == len(rows)
            and len(set(cols)) == len(cols)
            and all(A[i, j] == 1 for i, j in self.positions)
        )

    def is_pi_invariant(self, n: int) -> bool:
        return all((n + 1 - i, n + 1 - j) in self.positions for i, j in self.positions)

    def sorted(self) -> list[tuple[int, int]]:
        return sorted(self.positions)


def _grid(A: ExactMatrix) -> list[list[int]]:
    if not A.is_zero_one():
        raise ValueError("term rank computations need a 0/1 matrix")
    return [[int(x) for x in r] for r in A.rows]


def _to_matrix(g: Grid) -> ExactMatrix:
    return ExactMatrix.from_rows(g)


# classical ---------------------------------------------------------------


def _max_matching(g: Grid) -> list[int]:
    """Kuhn's augmenting paths, rows in increasing order; returns match_col[j] = row or -1."""
    n = len(g)
    ncols = len(g[0]) if n else 0
    match_col = [-1] * ncols
    adj = [[j for j in range(ncols) if g[i][j]] for i in range(n)]

    def augment(i, seen):
        for j in adj[i]:
            if seen[j]:
                continue
            seen[j] = True
            if match_col[j] < 0 or augment(match_col[j], seen):
                match_col[j] = i
                return True
        return False

    for i in range(n):
        augment(i, [False] * ncols)
    return match_col


def _koenig(g: Grid, match_col: list[int]) -> tuple[set[int], set[int]]:
    """0-based cover (rows, cols) from a maximum matching by alternating reachability."""
    n = len(g)
    ncols = len(g[0]) if n else 0
    match_row = [-1] * n
    for j, i in enumerate(match_col):
        if i >= 0:
            match_row[i] = j
    zr = {i for i in range(n) if match_row[i] < 0}
    zc: set[int] = set()
    stack = list(zr)
    while stack:
        i = stack.pop()
        for j in range(ncols):
            if g[i][j] and j not in zc:
                zc.add(j)
                r = match_col[j]
                if r >= 0 and r not in zr:
                    zr.add(r)
                    stack.append(r)
    return set(range(n)) - zr, zc


def term_rank(A: ExactMatrix) -> tuple[int, MatchingSelection]:
    g = _grid(A)
    mc = _max_matching(g)
    pos = frozenset((i + 1, j + 1) for j, i in enumerate(mc) if i >= 0)
    return len(pos), MatchingSelection(pos)


def min_cover(A: ExactMatrix) -> Cover:
    g = _grid(A)
    rows, cols = _koenig(g, _max_matching(g))
    return Cover(frozenset(r + 1 for r in rows), frozenset(c + 1 for c in cols))


def lex_first_perfect_matching(g: Grid) -> list[int] | None:
    """Lexicographically least perfect matching of a square 0/1 pattern (0-based columns per row)."""
    n = len(g)
    chosen: list[int] = []
    used = [False] * n
    for i in range(n):
        for j in range(n):
            if not g[i][j] or used[j]:
                continue
            used[j] = True
            rest = [[g[r][c] if not used[c] else 0 for c in range(n)] for r in range(i + 1, n)]
            size = sum(1 for x in _max_matching(rest) if x >= 0) if rest else 0
            if size == n - i - 1:
                chosen.append(j)
                break
            used[j] = False
        else:
            return None
    return chosen


# centrosymmetric -------------------------------------------------------------


def _mask(g: Grid) -> list[list[int]]:
    n = len(g)
    return [[g[i][j] & g[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)]


def _join(g: Grid) -> list[list[int]]:
    n = len(g)
    return [[g[i][j] | g[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)]


def _reduce(g: Grid) -> list[list[int]]:
    n = len(g)
    m = n // 2
    return [[g[i][j] | g[i][n - 1 - j] for j in range(m)] for i in range(m)]


def centro_reduce(A: ExactMatrix) -> ExactMatrix:
    """B = A1 OR A2' where A2' is the trailing column block with columns reversed."""
    g = _grid(A)
    if A.n % 2:
        raise ValueError("reduction needs even order")
    if _mask(g) != g:
        raise ValueError("reduction needs a centrosymmetric matrix")
    return _to_matrix(_reduce(g))


def _lift(g: Grid, pairs: list[tuple[int, int]]) -> set[tuple[int, int]]:
    """Lift 0-based matches (i, j) of the reduced matrix to positions of the even-order g."""
    n = len(g)
    out = set()
    for i, j in pairs:
        if g[i][j]:
            out |= {(i, j), (n - 1 - i, n - 1 - j)}
        else:
            out |= {(i, n - 1 - j), (n - 1 - i, j)}
    return out


def _strip_center(g: Grid) -> list[list[int]]:
    c = len(g) // 2
    return [[x for j, x in enumerate(r) if j != c] for i, r in enumerate(g) if i != c]


def _even_centro_match(g: Grid) -> set[tuple[int, int]]:
    """Maximum pi-invariant selection for an even-order centrosymmetric g (0-based)."""
    if not g:
        return set()
    b = _reduce(g)
    mc = _max_matching(b)
    return _lift(g, [(i, j) for j, i in enumerate(mc) if i >= 0])


def _centro_positions(g: Grid) -> set[tuple[int, int]]:
    n = len(g)
    h = _mask(g)
    if n % 2 == 0:
        return _even_centro_match(h)
    c = n // 2
    inner = _even_centro_match(_strip_center(h))
    back = lambda k: k if k < c else k + 1  # noqa: E731
    out = {(back(i), back(j)) for i, j in inner}
    if h[c][c]:
        out.add((c, c))
    return out


def centro_term_rank(A: ExactMatrix) -> tuple[int, MatchingSelection]:
    pos = _centro_positions(_grid(A))
    sel = MatchingSelection(frozenset((i + 1, j + 1) for i, j in pos))
    return len(sel), sel


def centro_min_cover(A: ExactMatrix) -> Cover:
    """A minimum pi-invariant cover of A (exhaustive for odd order)."""
    g = _grid(A)
    n = len(g)
    if n % 2:
        return _exhaustive_centro_cover(g)
    b = _reduce(_join(g))
    rows, cols = _koenig(b, _max_matching(b))
    r = {x for i in rows for x in (i + 1, n - i)}
    c = {x for j in cols for x in (j + 1, n - j)}
    return Cover(frozenset(r), frozenset(c))


def centro_cover_number(A: ExactMatrix) -> int:
    g = _grid(A)
    n = len(g)
    if n % 2 and n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"odd-order cover search supports n <= {EXHAUSTIVE_MAX_N}")
    return centro_min_cover(A).size


def find_centro_permutation(A: ExactMatrix) -> Permutation | None:
    """A centrosymmetric permutation matrix P <= A, or None."""
    g = _grid(A)
    n = len(g)
    pos = _centro_positions(g)
    if len(pos) != n:
        return None
    img = [0] * n
    for i, j in pos:
        img[i] = j + 1
    return Permutation(tuple(img))


# exhaustive references -----------------------------------------------------------


def _exhaustive_centro_cover(g: Grid) -> Cover:
    n = len(g)
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive cover search supports n <= {EXHAUSTIVE_MAX_N}")
    m = n // 2
    odd = n % 2
    ones = [(i, j) for i in range(n) for j in range(n) if g[i][j]]
    row_groups = [{i, n - 1 - i} for i in range(m)] + ([{m}] if odd else [])
    col_groups = [set(s) for s in row_groups]
    best = None
    for rsel in product((0, 1), repeat=len(row_groups)):
        rows = set().union(*[s for s, b in zip(row_groups, rsel) if b]) if any(rsel) else set()
        left = [(i, j) for i, j in ones if i not in rows]
        for csel in product((0, 1), repeat=len(col_groups)):
            cols = set().union(*[s for s, b in zip(col_groups, csel) if b]) if any(csel) else set()
            size = len(rows) + len(cols)
            if best is not None and size >= best[0]:
                continue
            if all(j in cols for _, j in left):
                best = (size, rows, cols)
    _, rows, cols = best
    return Cover(frozenset(r + 1 for r in rows), frozenset(c + 1 for c in cols))


def exhaustive_centro_cover_number(A: ExactMatrix) -> int:
    return _exhaustive_centro_cover(_grid(A)).size


def exhaustive_centro_term_rank(A: ExactMatrix) -> int:
    """Brute-force rho_pi: every pi-invariant partial selection over the top rows."""
    g = _grid(A)
    n = len(g)
    m = n // 2
    c = m if n % 2 else None
    best = 0
    used = [False] * n

    def walk(i, size):
        nonlocal best
        if i == m:
            best = max(best, size)
            return
        walk(i + 1, size)
        for j in range(n):
            jj = n - 1 - j
            if j == jj or used[j] or used[jj]:
                continue
            if g[i][j] and g[n - 1 - i][jj]:
                used[j] = used[jj] = True
                walk(i + 1, size + 2)
                used[j] = used[jj] = False

    walk(0, 0)
    if c is not None and g[c][c]:
        best += 1
    return best


def exhaustive_find_centro_permutation(A: ExactMatrix) -> bool:
    from .perm_classes import enumerate_class

    sup = A.support()
    return any(
        all((i, P(i)) in sup for i in range(1, A.n + 1)) for P in enumerate_class(A.n, "pi")
    )
