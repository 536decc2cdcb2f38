"""The reproduction table: acceptance criteria and named facts, each checked exactly.

Every check returns a plain dict so the whole report serializes to stable JSON.
Randomized batches draw from ``random.Random(seed)`` only.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from . import named as N
from .decompose import (
    birkhoff,
    centro_birkhoff,
    centro_birkhoff_integral,
    centro_split,
    half_sum,
    quarter_form,
    symmetric_split,
)
from .exact_matrix import (
    ExactMatrix,
    Permutation,
    SymmetryClass,
    classify,
    complement,
    in_polytope,
    is_doubly_stochastic,
    loopy_graph,
    rotate_pi,
    submatrix,
    transpose,
    hankel_transpose,
)
from .extremality import (
    anti_centro_cyclic,
    enumerate_extreme,
    is_extreme,
    is_extreme_oracle,
    is_extreme_th,
)
from .latin import cyclic_latin, is_block_isolated, latin_block, latin_from_layers, validate_latin
from .perm_classes import count_centrosymmetric, count_class, count_sym_hankel, enumerate_class, theta
from .spans import affine_rank, basis_centro, basis_th, dimension_formula, rational_rank
from .term_rank import (
    centro_cover_number,
    centro_reduce,
    centro_term_rank,
    exhaustive_centro_cover_number,
    exhaustive_centro_term_rank,
    find_centro_permutation,
    min_cover,
    term_rank,
)


def _rows(A: ExactMatrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in A.rows]


def _entry(name: str, ok: bool, **detail) -> dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


# criteria ----------------------------------------------------------------------


def criterion_1(seed: int = 0) -> dict:
    rows = []
    ok = True
    for n in range(1, 10):
        pi, th = count_class(n, "pi"), count_class(n, "th")
        good = pi == count_centrosymmetric(n) and th == count_sym_hankel(n)
        ok &= good
        rows.append({"n": n, "pi": pi, "pi_formula": count_centrosymmetric(n), "th": th, "th_formula": count_sym_hankel(n)})
    brute = {}
    for n in range(1, 8):
        got = sum(
            1
            for P in enumerate_class(n, "ds")
            if {SymmetryClass.T, SymmetryClass.H} <= classify(P.matrix())
        )
        brute[n] = got
        ok &= got == count_sym_hankel(n)
    ok &= count_class(4, "pi") == 8 and count_class(4, "th") == 6
    return _entry("counting", ok, table=rows, brute_force_th=brute)


def criterion_2(seed: int = 0) -> dict:
    plan = [("pi", n) for n in (2, 4, 6, 3, 5)] + [("th", n) for n in (2, 4, 6, 3, 5, 7)]
    plan += [(c, n) for c in ("t", "h") for n in range(2, 7)]
    rows = []
    ok = True
    for cls, n in plan:
        got = affine_rank(enumerate_extreme(n, cls))
        want = dimension_formula(n, cls)
        if cls in ("t", "h"):
            want = comb(n, 2)
        rows.append({"class": cls, "n": n, "affine_rank": got, "formula": want})
        ok &= got == want
    ok &= affine_rank(enumerate_extreme(4, "pi")) == 5
    return _entry("dimensions", ok, table=rows)


def criterion_3(seed: int = 0) -> dict:
    v3 = {M.key() for M in enumerate_extreme(3, "pi")}
    want3 = {M.key() for M in (ExactMatrix.identity(3), ExactMatrix.hankel_identity(3), N.CENT_E1, N.CENT_E2)}
    ok3 = v3 == want3
    even = {}
    for n in (2, 4, 6):
        got = {M.key() for M in enumerate_extreme(n, "pi")}
        want = {P.matrix().key() for P in enumerate_class(n, "pi")}
        even[n] = got == want
    return _entry("vertex sets", ok3 and all(even.values()), n3_exact=ok3, even_equal=even)


def _witness_ok(A, cls, w) -> bool:
    if w is None:
        return False
    B1, B2 = w
    return B1 != B2 and in_polytope(B1, cls) and in_polytope(B2, cls) and (B1 + B2).scale(Fraction(1, 2)) == A


def criterion_4(seed: int = 0) -> dict:
    a2 = is_extreme_th(N.SYMHANKEL_A2)
    q = quarter_form(N.NONEXTREME_P)
    vq = is_extreme_th(q)
    v7 = is_extreme_th(N.ODD7_A2)
    v11 = is_extreme_th(N.ODD11_A)
    parts = {
        "sym_hankel_A2_extreme": a2.is_extreme,
        "nonextreme_quarter_matches_display": q == N.NONEXTREME_QUARTER,
        "nonextreme_not_extreme_with_witness": (not vq.is_extreme) and _witness_ok(q, "th", vq.witness),
        "odd7_extreme_a": v7.is_extreme and "(a)" in v7.structure_tag,
        "odd11_extreme_b": v11.is_extreme and "(b)" in v11.structure_tag,
    }
    return _entry(
        "named matrices",
        all(parts.values()),
        parts=parts,
        sym_hankel_A2_clause=a2.structure_tag,
        sym_hankel_A2_witness=[_rows(B) for B in a2.witness] if a2.witness else None,
    )


def _random_centro01(rng: random.Random, n: int) -> ExactMatrix:
    p = rng.choice((0.2, 0.3, 0.4, 0.5, 0.6))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if (i, j) <= (n - 1 - i, n - 1 - j):
                b = int(rng.random() < p)
                g[i][j] = g[n - 1 - i][n - 1 - j] = b
    return ExactMatrix.from_rows(g)


def criterion_5(seed: int = 0) -> dict:
    B = centro_reduce(N.DOUBLE_A)
    P = find_centro_permutation(N.DOUBLE_A)
    p_ok = P is not None and P.is_centrosymmetric() and P.matrix() <= N.DOUBLE_A
    cross_rho = centro_term_rank(N.CROSS3)[0]
    cross_beta = centro_cover_number(N.CROSS3)
    rng = random.Random(seed)
    batch = {}
    for n in (4, 6, 8):
        bad = 0
        for _ in range(200):
            A = _random_centro01(rng, n)
            r, sel = centro_term_rank(A)
            vals = {r, centro_cover_number(A), exhaustive_centro_term_rank(A), exhaustive_centro_cover_number(A)}
            if len(vals) != 1 or not (sel.is_valid_for(A) and sel.is_pi_invariant(n)):
                bad += 1
        batch[n] = bad
    parts = {
        "reduction_matches_display": B == N.DOUBLE_B_DISPLAYED,
        "centro_permutation_found": p_ok,
        "cross_rho_pi_0": cross_rho == 0,
        "cross_beta_pi_2": cross_beta == 2,
        "random_rho_pi_equals_beta_pi": all(v == 0 for v in batch.values()),
    }
    return _entry(
        "term rank",
        all(parts.values()),
        parts=parts,
        computed_B=[[int(x) for x in r] for r in B.rows],
        permutation=list(P.images) if P else None,
        random_failures=batch,
    )


def _random_centro_combo(rng: random.Random, members: list[Permutation]) -> ExactMatrix:
    k = rng.randint(1, 5)
    picks = [rng.choice(members) for _ in range(k)]
    w = [rng.randint(1, 9) for _ in range(k)]
    tot = sum(w)
    A = ExactMatrix.zeros(members[0].n)
    for P, x in zip(picks, w):
        A = A + P.matrix().scale(Fraction(x, tot))
    return A


def criterion_6(seed: int = 0) -> dict:
    rng = random.Random(seed + 6)
    fails = {}
    for n in (4, 6):
        members = list(enumerate_class(n, "pi"))
        bad = 0
        for _ in range(100):
            A = _random_centro_combo(rng, members)
            d = centro_birkhoff(A)
            if d.total() != A or d.coefficient_sum() != 1 or not all(P.is_centrosymmetric() for _, P in d.terms):
                bad += 1
        fails[n] = bad
    latin = {}
    for m in range(1, 5):
        n = 2 * m
        perms = centro_birkhoff_integral(ExactMatrix.ones(n), n)
        T = latin_from_layers(perms)
        latin[n] = len(perms) == n and all(P.is_centrosymmetric() for P in perms) and validate_latin(T, True)
    split = symmetric_split(N.SYM_EVEN_P)
    P = N.SYM_EVEN_P.matrix()
    split_ok = (
        split is not None
        and split[0].matrix() + split[1].matrix() == P + transpose(P)
        and all(Q.is_involution() for Q in split)
        and split == (N.SYM_EVEN_Q1, N.SYM_EVEN_Q2)
    )
    ok = all(v == 0 for v in fails.values()) and all(latin.values()) and split_ok
    return _entry("decompositions", ok, centro_birkhoff_failures=fails, latin=latin, symmetric_split_matches_display=split_ok)


def _agreement_candidates():
    gens = {
        "ds": lambda P: P.matrix(),
        "t": lambda P: half_sum(P, transpose),
        "h": lambda P: half_sum(P, hankel_transpose),
        "pi": lambda P: half_sum(P, rotate_pi),
        "th": quarter_form,
    }
    for n in range(1, 6):
        for P in enumerate_class(n, "ds"):
            for cls, g in gens.items():
                yield cls, g(P)
    for n in range(1, 7):
        for Q in enumerate_class(n, "pi"):
            for cls, g in gens.items():
                yield cls, (half_sum(Q, transpose) if cls == "th" else g(Q))


def criterion_7(seed: int = 0) -> dict:
    seen = set()
    checked = 0
    bad = []
    for cls, M in _agreement_candidates():
        key = (cls, M.key())
        if key in seen:
            continue
        seen.add(key)
        checked += 1
        v = is_extreme(M, cls)
        if v.is_extreme != is_extreme_oracle(M, cls):
            bad.append({"class": cls, "matrix": _rows(M), "clause": v.structure_tag})
        elif not v.is_extreme and not _witness_ok(M, cls, v.witness):
            bad.append({"class": cls, "matrix": _rows(M), "clause": "invalid witness"})
    return _entry("oracle agreement", not bad, checked=checked, disagreements=bad)


def criterion_8(seed: int = 0) -> dict:
    b4 = basis_centro(4)
    all8 = [P.matrix() for P in enumerate_class(4, "pi")]
    c_ok = (
        list(b4.members) == N.BASIS_C4
        and rational_rank(b4.matrices()) == 6
        and rational_rank(b4.matrices() + all8) == 6
    )
    th = {}
    for n in range(2, 9):
        B = basis_th(n)
        even = n - n % 2
        want = even * even // 4 + 1
        members = [P.matrix() for P in enumerate_class(n, "th")]
        r = rational_rank(B.matrices())
        th[n] = len(B) == want and r == want and rational_rank(B.matrices() + members) == want
    return _entry("bases", c_ok and all(th.values()), centro4=c_ok, th=th)


def criterion_9(seed: int = 0) -> dict:
    allowed = {Fraction(k, 4) for k in range(5)}
    res = {}
    for n in range(1, 8):
        res[n] = all(set(M.key()) <= allowed for M in enumerate_extreme(n, "th"))
    return _entry("entry values", all(res.values()), by_n=res)


def _deterministic_payload() -> str:
    out = {
        "birkhoff": [
            [str(c), list(P.images)] for c, P in centro_birkhoff(
                (N.DIM4[2].matrix() + N.DIM4[3].matrix()).scale(Fraction(1, 2))
            ).terms
        ],
        "split": [list(Q.images) for Q in centro_split(Permutation((2, 3, 4, 5, 6, 1)))],
        "latin": [list(r) for r in latin_from_layers(centro_birkhoff_integral(ExactMatrix.ones(6), 6)).cells],
        "vertices": [_rows(M) for M in enumerate_extreme(5, "th")],
        "rank": list(centro_term_rank(N.DOUBLE_A)[1].sorted()),
    }
    return json.dumps(out, sort_keys=True)


def criterion_10(seed: int = 0) -> dict:
    a, b = _deterministic_payload(), _deterministic_payload()
    return _entry("determinism", a == b, in_process_repeat_identical=a == b)


CRITERIA: list[tuple[int, Callable[[int], dict]]] = [
    (1, criterion_1),
    (2, criterion_2),
    (3, criterion_3),
    (4, criterion_4),
    (5, criterion_5),
    (6, criterion_6),
    (7, criterion_7),
    (8, criterion_8),
    (9, criterion_9),
    (10, criterion_10),
]


# named facts ----------------------------------------------------------------------


def named_facts() -> list[dict]:
    f = []
    P = N.SYM_EVEN_P.matrix()
    f.append(_entry("transpose of the 6-cycle is its inverse", transpose(P) == N.SYM_EVEN_P.inverse().matrix()))
    f.append(_entry("3x3 Hankel example is fixed by the Hankel transpose", hankel_transpose(N.HANKEL_P.matrix()) == N.HANKEL_P.matrix()))
    f.append(_entry("4x4 Q is symmetric and Hankel-symmetric", classify(N.HANKEL_Q.matrix()) == {SymmetryClass.T, SymmetryClass.H, SymmetryClass.PI, SymmetryClass.DS}))
    E = N.EXTRA.matrix()
    f.append(_entry("4x4 extra example is centrosymmetric only", rotate_pi(E) == E and classify(E) == {SymmetryClass.PI, SymmetryClass.DS}))
    f.append(_entry("cent A is doubly stochastic", is_doubly_stochastic(N.CENT_A)))
    g1 = loopy_graph(N.SYMHANKEL_A1)
    f.append(_entry("loopy graph of A1 has edges 14, 25 and a loop at 3", g1.edges == frozenset({(1, 4), (2, 5), (3, 3)})))
    gh = loopy_graph(N.SYMHANKEL_A1, hankel=True)
    f.append(_entry("Hankel loopy graph of A1 has edges 12, 45 and a loop at 3", gh.edges == frozenset({(1, 2), (4, 5), (3, 3)})))
    g2 = loopy_graph(N.SYMHANKEL_A2)
    f.append(_entry("loopy graph of the 6x6 A2 is the 6-cycle", g2.edges == frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)})))
    gh2 = loopy_graph(N.SYMHANKEL_A2, hankel=True)
    f.append(_entry("Hankel loopy graph of A2 is the paths 1-5-3, 6-2-4 with loops at 1, 3, 4, 6", gh2.edges == frozenset({(1, 5), (3, 5), (2, 6), (2, 4), (1, 1), (3, 3), (4, 4), (6, 6)})))
    f.append(_entry("A[K,L] in the isolated-block example is 1/2(P + P^pi)", submatrix(N.EXTREME_A, N.EXTREME_K, N.EXTREME_L) == half_sum(N.EXTREME_P, rotate_pi)))
    f.append(_entry("its complement is I2", complement(N.EXTREME_A, N.EXTREME_K, N.EXTREME_L) == ExactMatrix.identity(2)))
    f.append(_entry("A = 1/2(Q + Q^pi) in the isolated-block example", half_sum(N.EXTREME_Q, rotate_pi) == N.EXTREME_A))
    f.append(_entry("P of the isolated-block example is anti-centrosymmetric cyclic", anti_centro_cyclic(N.EXTREME_P)))
    f.append(_entry("isolated-block example is PI-extreme by clause (b)", "(b)" in is_extreme(N.EXTREME_A, "pi").structure_tag and is_extreme(N.EXTREME_A, "pi").is_extreme))
    f.append(_entry("eight centrosymmetric 4x4 permutations", [P for P in enumerate_class(4, "pi")] == sorted(N.DIM4.values(), key=lambda p: p.images)))
    f.append(_entry("P_3^pi = {I3, L3}", [P.images for P in enumerate_class(3, "pi")] == [(1, 2, 3), (3, 2, 1)]))
    mats = {k: v.matrix() for k, v in N.DIM4.items()}
    f.append(_entry("A1..A6 independent", rational_rank([mats[k] for k in range(1, 7)]) == 6))
    f.append(_entry("A1,A2,A3,A5,A7,A8 independent", rational_rank([mats[k] for k in (1, 2, 3, 5, 7, 8)]) == 6))
    f.append(_entry("A1..A8 have rank 6 and dim 5", rational_rank(list(mats.values())) == 6 and affine_rank(list(mats.values())) == 5))
    f.append(_entry("cent A = 1/2(E2 + I3)", (N.CENT_E2 + ExactMatrix.identity(3)).scale(Fraction(1, 2)) == N.CENT_A))
    f.append(_entry("cent A is not PI-extreme", not is_extreme(N.CENT_A, "pi").is_extreme))
    f.append(_entry("E1 and E2 are PI-extreme", is_extreme(N.CENT_E1, "pi").is_extreme and is_extreme(N.CENT_E2, "pi").is_extreme))
    try:
        centro_birkhoff(N.CENT_A)
        odd_rejected = False
    except ValueError:
        odd_rejected = True
    f.append(_entry("odd-order centrosymmetric decomposition is rejected", odd_rejected))
    s = theta(N.THETA_SIGMA)
    f.append(_entry("theta of (2,1,6,5,4,3,8,7)", s.images == N.THETA_IMAGE))
    f.append(_entry("cross matrix has term rank 2 and cover row 2 + column 2", term_rank(N.CROSS3)[0] == 2 and min_cover(N.CROSS3).size == 2))
    f.append(_entry("cross matrix has no centrosymmetric permutation", find_centro_permutation(N.CROSS3) is None))
    f.append(_entry("8x8 double example has term rank 8", term_rank(N.DOUBLE_A)[0] == 8))
    f.append(_entry("8x8 double example centro term rank 8", centro_term_rank(N.DOUBLE_A)[0] == 8))
    f.append(_entry("shaded permutation is centrosymmetric and below A", N.DOUBLE_P_SHADED.is_centrosymmetric() and N.DOUBLE_P_SHADED.matrix() <= N.DOUBLE_A))
    f.append(_entry("quarter form of the 8x8 P matches the display", quarter_form(N.NONEXTREME_P) == N.NONEXTREME_QUARTER))
    f.append(_entry("R and its partner average to the quarter form", (N.NONEXTREME_R + N.NONEXTREME_R2).scale(Fraction(1, 2)) == N.NONEXTREME_QUARTER and N.NONEXTREME_R != N.NONEXTREME_R2 and in_polytope(N.NONEXTREME_R, "th") and in_polytope(N.NONEXTREME_R2, "th")))
    f.append(_entry("9x9 A1 is TH-extreme by clause (c)", "(c)" in is_extreme_th(N.ODD9_A1).structure_tag and is_extreme_th(N.ODD9_A1).is_extreme))
    hs = half_sum(N.SYM_EVEN_P, transpose)
    f.append(_entry("6-cycle half-sum is not T-extreme", not is_extreme(hs, "t").is_extreme))
    f.append(_entry("6-cycle half-sum averages the two displayed involutions", (N.SYM_EVEN_Q1.matrix() + N.SYM_EVEN_Q2.matrix()).scale(Fraction(1, 2)) == hs))
    f.append(_entry("Birkhoff terms of cent A re-sum to A", birkhoff(N.CENT_A).total() == N.CENT_A))
    f.append(_entry("C3 half-cycle is T-extreme", is_extreme(N.CENT_E1, "t").is_extreme))
    f.append(_entry("5-cycle has no symmetric split", symmetric_split(Permutation((2, 3, 4, 5, 1))) is None))
    U = cyclic_latin(3)
    T = latin_block(U)
    f.append(_entry("block latin square from a 3x3 cyclic square isolates 1..3", validate_latin(T, True) and is_block_isolated(T)))
    f.append(_entry("3x3 cyclic latin square is not centrosymmetric", not validate_latin(U, True)))
    f.append(_entry("dim of Omega_4^pi is 5", dimension_formula(4, "pi") == 5))
    f.append(_entry("|P_4^pi| = 2^2 2!", count_centrosymmetric(4) == 4 * factorial(2)))
    return f


def run_all(seed: int = 0, only: list[int] | None = None) -> dict:
    crit = []
    for num, fn in CRITERIA:
        if only and num not in only:
            continue
        r = fn(seed)
        r["id"] = num
        crit.append(r)
    facts = named_facts()
    ok = all(c["pass"] for c in crit) and all(x["pass"] for x in facts)
    return {"seed": seed, "criteria": crit, "facts": facts, "all_pass": ok}
