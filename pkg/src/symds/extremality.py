"""Extreme points of the five polytopes: an exact zero-pattern oracle, structural
classifiers for each class, and vertex enumeration for small orders."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .decompose import half_sum, quarter_form
from .dsm import canonical_key
from .exact_matrix import (
    ExactMatrix,
    Permutation,
    SymmetryClass,
    hankel_transpose,
    in_polytope,
    loopy_graph,
    position_orbit,
    reverse_columns,
    rotate_pi,
    submatrix,
    transpose,
)
from .linalg import nullspace
from .perm_classes import enumerate_class

DEFAULT_MAX_N = 7
HALF = Fraction(1, 2)


def max_enumeration_n() -> int:
    raw = os.environ.get("SYMDS_MAX_N")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"SYMDS_MAX_N must be an integer, got {raw!r}") from None


# types -----------------------------------------------------------------------


@dataclass(frozen=True)
class SelfPaired:
    cycle: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle)


@dataclass(frozen=True)
class PairedPair:
    cycle: tuple[int, ...]
    mirror: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle) + len(self.mirror)


@dataclass(frozen=True)
class CycleStructure:
    items: tuple[Union[SelfPaired, PairedPair], ...]


@dataclass(frozen=True)
class ExtremeVerdict:
    is_extreme: bool
    witness: tuple[ExactMatrix, ExactMatrix] | None
    structure_tag: str

    def __post_init__(self):
        if self.witness is not None and self.is_extreme:
            raise ValueError("an extreme verdict cannot carry a witness")


# oracle ---------------------------------------------------------------------


def _orbit_system(A: ExactMatrix, cls: SymmetryClass):
    n = A.n
    sup = A.support()
    orbit_of: dict[tuple[int, int], int] = {}
    orbits: list[frozenset] = []
    for p in sorted(sup):
        if p in orbit_of:
            continue
        orb = position_orbit(n, cls, *p)
        for q in orb:
            orbit_of[q] = len(orbits)
        orbits.append(orb)
    k = len(orbits)
    rows = []
    for i in range(1, n + 1):
        r = [0] * k
        for j in range(1, n + 1):
            if (i, j) in orbit_of:
                r[orbit_of[(i, j)]] += 1
        rows.append(r)
    for j in range(1, n + 1):
        r = [0] * k
        for i in range(1, n + 1):
            if (i, j) in orbit_of:
                r[orbit_of[(i, j)]] += 1
        rows.append(r)
    return orbits, rows


def _check_member(A: ExactMatrix, cls: SymmetryClass) -> None:
    if not in_polytope(A, cls):
        raise ValueError(f"matrix is not in the {cls.value} polytope")


def oracle_null_directions(A: ExactMatrix, cls: SymmetryClass | str) -> list[ExactMatrix]:
    """Basis of the class-symmetric, zero-line-sum matrices supported inside support(A)."""
    cls = SymmetryClass.parse(cls)
    orbits, rows = _orbit_system(A, cls)
    out = []
    for v in nullspace(rows, len(orbits)):
        d = {}
        for x, orb in zip(v, orbits):
            for p in orb:
                d[p] = x
        out.append(ExactMatrix.from_function(A.n, lambda i, j: d.get((i, j), 0)))
    return out


def is_extreme_oracle(A: ExactMatrix, cls: SymmetryClass | str) -> bool:
    cls = SymmetryClass.parse(cls)
    _check_member(A, cls)
    orbits, rows = _orbit_system(A, cls)
    return not nullspace(rows, len(orbits))


def oracle_witness(A: ExactMatrix, cls: SymmetryClass | str) -> tuple[ExactMatrix, ExactMatrix] | None:
    """(A + eD, A - eD) for the first null direction D, or None if A is extreme."""
    cls = SymmetryClass.parse(cls)
    _check_member(A, cls)
    dirs = oracle_null_directions(A, cls)
    if not dirs:
        return None
    D = dirs[0]
    first = next(x for x in D.key() if x != 0)
    if first < 0:
        D = -D
    eps = min(a / abs(d) for (_, _, a), d in zip(A.entries(), D.key()) if d != 0)
    return A + D.scale(eps), A - D.scale(eps)


def oracle_verdict(A: ExactMatrix, cls: SymmetryClass | str) -> ExtremeVerdict:
    w = oracle_witness(A, cls)
    return ExtremeVerdict(w is None, w, "oracle")


def _verdict(A, cls, ok: bool, tag: str) -> ExtremeVerdict:
    if ok:
        return ExtremeVerdict(True, None, tag)
    return ExtremeVerdict(False, oracle_witness(A, cls), tag)


# cycle structure -------------------------------------------------------------


def cycle_structure(Q: Permutation) -> CycleStructure:
    """Split the cycles of a centrosymmetric Q into rotation-fixed cycles and mirror pairs."""
    if not Q.is_centrosymmetric():
        raise ValueError("cycle structure needs a centrosymmetric permutation")
    n = Q.n
    items = []
    seen = set()
    for cyc in Q.cycles():
        if cyc[0] in seen:
            continue
        mirror_set = {n + 1 - v for v in cyc}
        seen.update(cyc)
        if mirror_set == set(cyc):
            items.append(SelfPaired(cyc))
        else:
            start = n + 1 - cyc[0]
            mir = [start]
            x = Q(start)
            while x != start:
                mir.append(x)
                x = Q(x)
            seen.update(mir)
            items.append(PairedPair(cyc, tuple(mir)))
    return CycleStructure(tuple(items))


# graph helpers ----------------------------------------------------------------


def _adjacency(A: ExactMatrix, vertices=None):
    n = A.n
    vs = set(range(1, n + 1)) if vertices is None else set(vertices)
    adj = {v: [] for v in vs}
    for i in vs:
        for j in range(1, n + 1):
            if j in vs and j != i and A[i, j] != 0:
                adj[i].append(j)
    return adj


def _components(A: ExactMatrix) -> list[list[int]]:
    return loopy_graph(A).components()


def _walk_cycle(adj, start) -> list[int]:
    """Traverse a 2-regular component from start, first toward the smaller neighbour."""
    order = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        order.append(cur)
        nxt = [w for w in adj[cur] if w != prev]
        prev, cur = cur, nxt[0]
    return order


def _sym_components_ok(A: ExactMatrix) -> tuple[bool, str]:
    """Loops, weight-1 edges and odd half-weight cycles only."""
    ok, why = _sym_like_components(A)
    if not ok:
        return ok, why
    for comp in _components(A):
        if len(comp) > 2 and len(comp) % 2 == 0:
            return False, f"even cycle of length {len(comp)}"
    return True, "loops, edges and odd cycles"


# symmetric and Hankel ---------------------------------------------------------


def is_extreme_sym(A: ExactMatrix) -> ExtremeVerdict:
    _check_member(A, SymmetryClass.T)
    ok, why = _sym_components_ok(A)
    return _verdict(A, SymmetryClass.T, ok, f"t: {why}")


def is_extreme_hankel(A: ExactMatrix) -> ExtremeVerdict:
    _check_member(A, SymmetryClass.H)
    ok, why = _sym_components_ok(reverse_columns(A))
    return _verdict(A, SymmetryClass.H, ok, f"h: {why}")


def is_extreme_ds(A: ExactMatrix) -> ExtremeVerdict:
    _check_member(A, SymmetryClass.DS)
    ok = A.is_permutation_matrix()
    return _verdict(A, SymmetryClass.DS, ok, "ds: permutation matrix" if ok else "ds: not a permutation matrix")


# centrosymmetric ----------------------------------------------------------------


def anti_centro_cyclic(P: Permutation) -> bool:
    """P has no 1 whose rotation is a 1, and P + P^pi is a single 2r-cycle."""
    r = P.n
    if r % 2 == 0:
        raise ValueError("anti-centrosymmetric permutations have odd order")
    if any(P(r + 1 - i) == r + 1 - P(i) for i in range(1, r + 1)):
        return False
    # union of the two matchings as a graph on rows 1..r and columns -1..-r
    nbr = {}
    for i in range(1, r + 1):
        a, b = P(i), r + 1 - P(r + 1 - i)
        nbr.setdefault(i, []).extend([-a, -b])
        nbr.setdefault(-a, []).append(i)
        nbr.setdefault(-b, []).append(i)
    seen, stack = {1}, [1]
    while stack:
        v = stack.pop()
        for w in nbr[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == 2 * r


def _centro_odd(A: ExactMatrix) -> tuple[bool, str]:
    n = A.n
    c = (n + 1) // 2
    if A.is_permutation_matrix():
        return True, "pi odd (a): centrosymmetric permutation matrix"
    if A[c, c] != 0:
        return False, "central entry strictly between 0 and 1"
    if any(x not in (0, HALF, 1) for x in A.key()):
        return False, "entry outside {0, 1/2, 1}"
    # bipartite component of row c on the support
    rows, cols = {c}, set()
    stack = [("r", c)]
    while stack:
        side, v = stack.pop()
        if side == "r":
            for j in range(1, n + 1):
                if A[v, j] != 0 and j not in cols:
                    cols.add(j)
                    stack.append(("c", j))
        else:
            for i in range(1, n + 1):
                if A[i, v] != 0 and i not in rows:
                    rows.add(i)
                    stack.append(("r", i))
    K, L = sorted(rows), sorted(cols)
    if len(K) != len(L) or any(A[i, j] not in (0, HALF) for i in K for j in L):
        return False, "central block is not a half-weight cycle"
    r = len(K)
    sub = submatrix(A, K, L).scale(2)
    # alternate edges of the cycle: walk it from row 1 of the block
    edges = []
    nb_r = {i: [j for j in range(1, r + 1) if sub[i, j] != 0] for i in range(1, r + 1)}
    nb_c = {j: [i for i in range(1, r + 1) if sub[i, j] != 0] for j in range(1, r + 1)}
    if any(len(v) != 2 for v in list(nb_r.values()) + list(nb_c.values())):
        return False, "central block is not a half-weight cycle"
    i, j = 1, nb_r[1][0]
    for _ in range(r):
        edges.append((i, j))
        i = next(x for x in nb_c[j] if x != i)
        j = next(y for y in nb_r[i] if y != j)
    img = [0] * (r + 1)
    for a, b in edges:
        img[a] = b
    if len(set(img[1:])) != r or 0 in img[1:]:
        return False, "central block is not a single cycle"
    P = Permutation(tuple(img[1:]))
    if not anti_centro_cyclic(P):
        return False, "central block is not anti-centrosymmetric cyclic"
    Kc = [k for k in range(1, n + 1) if k not in rows]
    Lc = [k for k in range(1, n + 1) if k not in cols]
    if Kc and not submatrix(A, Kc, Lc).is_permutation_matrix():
        return False, "complement of the central block is not a permutation matrix"
    return True, f"pi odd (b): isolated centro-submatrix of order {r}"


def is_extreme_centro(A: ExactMatrix) -> ExtremeVerdict:
    _check_member(A, SymmetryClass.PI)
    if A.n % 2 == 0:
        ok = A.is_permutation_matrix()
        why = "pi even: centrosymmetric permutation matrix" if ok else "pi even: not a permutation matrix"
    else:
        ok, why = _centro_odd(A)
    return _verdict(A, SymmetryClass.PI, ok, why)


# doubly symmetric -----------------------------------------------------------------


def _th_even_rule(A: ExactMatrix) -> tuple[bool, str]:
    """Even-order rule on A1/2(Q + Q^t), Q centrosymmetric, via its graph."""
    n = A.n
    ok, why = _sym_like_components(A)
    if not ok:
        return False, why
    adj = _adjacency(A)
    img = [0] * (n + 1)
    done = set()
    for comp in _components(A):
        if comp[0] in done:
            continue
        if len(comp) == 1:
            img[comp[0]] = comp[0]
            done.add(comp[0])
            continue
        if len(comp) == 2:
            a, b = comp
            img[a], img[b] = b, a
            done.update(comp)
            continue
        order = _walk_cycle(adj, comp[0])
        k = len(order)
        mirror = {n + 1 - v for v in comp}
        if mirror == set(comp):
            pos = {v: t for t, v in enumerate(order)}
            s = pos[n + 1 - order[0]]
            if pos[n + 1 - order[1]] != (s + 1) % k:
                return False, f"rotation reverses a cycle of length {k}"
            for t in range(k):
                img[order[t]] = order[(t + 1) % k]
            done.update(comp)
        else:
            for t in range(k):
                img[order[t]] = order[(t + 1) % k]
                img[n + 1 - order[t]] = n + 1 - order[(t + 1) % k]
            done.update(comp)
            done.update(mirror)
    Q = Permutation(tuple(img[1:]))
    for item in cycle_structure(Q).items:
        if isinstance(item, SelfPaired) and item.length % 4 == 0:
            return False, f"rotation-fixed cycle of length {item.length}"
        if isinstance(item, PairedPair):
            k = len(item.cycle)
            if k % 2 == 0 and k > 2:
                return False, f"mirror pair of cycles of length {k}"
    return True, "th even: half of Q + Q^t with admissible cycles"


def _sym_like_components(A: ExactMatrix) -> tuple[bool, str]:
    """Components of the shape produced by 1/2(Q + Q^t)."""
    adj = _adjacency(A)
    for comp in _components(A):
        if len(comp) == 1:
            if A[comp[0], comp[0]] != 1:
                return False, "loop with weight below 1"
            continue
        if any(A[v, v] != 0 for v in comp):
            return False, "loop inside a larger component"
        if len(comp) == 2:
            continue
        if any(len(adj[v]) != 2 for v in comp) or any(A[v, w] != HALF for v in comp for w in adj[v]):
            return False, "component is not a half-weight cycle"
    return True, ""


def _relabel(A: ExactMatrix, vs: list[int]) -> ExactMatrix:
    vs = sorted(vs)
    return ExactMatrix(tuple(tuple(A[i, j] for j in vs) for i in vs))


def _deg(adj, loops, v) -> int:
    return len(adj[v]) + (2 if v in loops else 0)


def _strip_leaves(adj, vs, loops):
    vs = set(vs)
    deg = {v: sum(1 for w in adj[v] if w in vs) + (2 if v in loops else 0) for v in vs}
    leaves = [v for v in vs if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        if v not in vs:
            continue
        vs.discard(v)
        for w in adj[v]:
            if w in vs:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    return vs


def _center_type(A: ExactMatrix, S: list[int]) -> tuple[str | None, str]:
    """Graph type of the component S through the central vertex."""
    n = A.n
    c = (n + 1) // 2
    Sset = set(S)
    loops = {v for v in S if A[v, v] != 0}
    adj = {v: [w for w in range(1, n + 1) if w != v and w in Sset and A[v, w] != 0] for v in S}
    V = len(S)
    E = len(loops) + sum(len(a) for a in adj.values()) // 2
    if S == [c]:
        return ("a", "loop at the centre") if A[c, c] == 1 else (None, "isolated centre")
    if c in loops:
        return None, "loop at the centre inside a larger component"
    deg = {v: _deg(adj, loops, v) for v in S}
    if E == V and not loops and all(d == 2 for d in deg.values()):
        if V % 2:
            return "a", f"odd cycle of length {V} through the centre"
        return None, f"even cycle of length {V} through the centre"
    if E != V + 1:
        return None, "component has the wrong number of edges"
    if deg[c] == 4:
        if any(deg[v] != 2 for v in S if v != c):
            return None, "unexpected degree pattern"
        rest = [v for v in S if v != c]
        parts = _split(adj, rest)
        if len(parts) != 2:
            return None, "centre of degree 4 is not a figure eight"
        p1, p2 = parts
        if {n + 1 - v for v in p1} != set(p2):
            return None, "figure eight not swapped by the rotation"
        k = len(p1) + 1
        if k % 2 == 0:
            return None, f"two even cycles of length {k} at the centre"
        return "b", f"two cycles of length {k} meeting at the centre"
    if deg[c] != 2:
        return None, "unexpected degree at the centre"
    junctions = [v for v in S if deg[v] == 3]
    if len(junctions) != 2 or any(deg[v] != 2 for v in S if v not in junctions):
        return None, "unexpected degree pattern"
    u, w = junctions
    if w != n + 1 - u:
        return None, "junctions are not mirror images"
    rest = [v for v in S if v != c]
    parts = _split(adj, rest)
    if len(parts) == 2:
        p1, p2 = parts
        core = _strip_leaves(adj, p1, loops)
        k = len(core)
        if k % 2 == 0:
            return None, f"two even cycles of length {k} joined through the centre"
        path = len(S) - 2 * k + 1
        return "b", f"two cycles of length {k} joined by a path of length {path}"
    if loops:
        return None, "loop on a theta graph"
    # theta: three internally disjoint u-w paths
    lengths = []
    through_c = None
    for start in adj[u]:
        prev, cur, length, hit_c = u, start, 1, start == c
        while cur != w:
            nxt = [x for x in adj[cur] if x != prev]
            prev, cur = cur, nxt[0]
            length += 1
            hit_c = hit_c or cur == c
        if hit_c:
            through_c = length
        else:
            lengths.append(length)
    if through_c is None or len(lengths) != 2:
        return None, "unexpected theta shape"
    if through_c % 2 or sum(lengths) % 2:
        return None, "theta with an odd part"
    return "c", f"cycle of length {sum(lengths)} bisected by a path of length {through_c}"


def _split(adj, vs):
    vs = set(vs)
    parts = []
    seen = set()
    for s in sorted(vs):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w in vs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        parts.append(sorted(comp))
    return parts


def is_extreme_th(A: ExactMatrix) -> ExtremeVerdict:
    cls = SymmetryClass.TH
    _check_member(A, cls)
    n = A.n
    if n % 2 == 0:
        ok, why = _th_even_rule(A)
        return _verdict(A, cls, ok, why)
    c = (n + 1) // 2
    S = next(comp for comp in _components(A) if c in comp)
    kind, why = _center_type(A, S)
    if kind is None:
        return _verdict(A, cls, False, f"th odd: {why}")
    rest = [v for v in range(1, n + 1) if v not in S]
    if rest:
        ok, rwhy = _th_even_rule(_relabel(A, rest))
        if not ok:
            return _verdict(A, cls, False, f"th odd: complement fails: {rwhy}")
    if not is_extreme_oracle(_relabel(A, S), cls):
        return _verdict(A, cls, False, f"th odd: central component not determined by its zeros ({why})")
    return _verdict(A, cls, True, f"th odd ({kind}): {why}")


_DISPATCH = {
    SymmetryClass.DS: is_extreme_ds,
    SymmetryClass.T: is_extreme_sym,
    SymmetryClass.H: is_extreme_hankel,
    SymmetryClass.PI: is_extreme_centro,
    SymmetryClass.TH: is_extreme_th,
}


def is_extreme(A: ExactMatrix, cls: SymmetryClass | str) -> ExtremeVerdict:
    return _DISPATCH[SymmetryClass.parse(cls)](A)


# enumeration ------------------------------------------------------------------------


def generator_candidates(n: int, cls: SymmetryClass | str):
    """Matrices of the generator form; every extreme point appears among them."""
    cls = SymmetryClass.parse(cls)
    if cls is SymmetryClass.DS:
        for P in enumerate_class(n, "ds"):
            yield P.matrix()
    elif cls is SymmetryClass.T:
        for P in enumerate_class(n, "ds"):
            yield half_sum(P, transpose)
    elif cls is SymmetryClass.H:
        for P in enumerate_class(n, "ds"):
            yield half_sum(P, hankel_transpose)
    elif cls is SymmetryClass.PI:
        for P in enumerate_class(n, "ds"):
            yield half_sum(P, rotate_pi)
    elif n % 2 == 0:
        for Q in enumerate_class(n, "pi"):
            yield half_sum(Q, transpose)
    else:
        for P in enumerate_class(n, "ds"):
            yield quarter_form(P)


def enumerate_extreme(n: int, cls: SymmetryClass | str) -> list[ExactMatrix]:
    cls = SymmetryClass.parse(cls)
    limit = max_enumeration_n()
    if not 1 <= n <= limit:
        raise ValueError(f"vertex enumeration supports 1 <= n <= {limit} (set SYMDS_MAX_N to raise)")
    seen: dict[str, ExactMatrix] = {}
    for M in generator_candidates(n, cls):
        key = canonical_key(M)
        if key not in seen:
            seen[key] = M
    verts = [M for M in seen.values() if is_extreme_oracle(M, cls)]
    return sorted(verts, key=lambda M: M.key())
