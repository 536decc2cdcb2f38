"""Command-line front end. Every subcommand prints one JSON report by default."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .decompose import birkhoff, centro_birkhoff, centro_birkhoff_integral
from .dsm import DsmFormatError, format_stream, read_file
from .exact_matrix import ExactMatrix
from .extremality import enumerate_extreme, is_extreme, max_enumeration_n
from .latin import cyclic_latin, latin_block, latin_from_decomposition, validate_latin
from .perm_classes import count_class, enumerate_class, formula_count
from .spans import basis_centro, basis_th, dimension_formula, rational_rank, verified_polytope_dimension
from .term_rank import centro_min_cover, centro_term_rank, min_cover, term_rank

CLASSES = ("t", "h", "pi", "th", "ds")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _report(command: str, inputs: dict, result, paper_check: dict | None = None) -> dict:
    out = {"command": command, "inputs": inputs, "result": result}
    if paper_check is not None:
        out["paper_check"] = paper_check
    return out


def _rows(A: ExactMatrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in A.rows]


def _need_n(args, limit: int | None = None) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 1:
        raise UsageError("--n must be positive")
    if limit is not None and args.n > limit:
        raise UsageError(f"--n {args.n} exceeds the enumeration limit {limit} (SYMDS_MAX_N)")
    return args.n


def _need_matrix(args) -> ExactMatrix:
    if not args.infile:
        raise UsageError("--in is required")
    try:
        return read_file(args.infile)
    except OSError as e:
        raise UsageError(f"cannot read {args.infile}: {e.strerror}") from e


def _perm_text(P) -> str:
    return " ".join(map(str, P.images))


# subcommands ----------------------------------------------------------------------


def cmd_count(args):
    n = _need_n(args, 10)
    classes = ("t", "h", "pi", "th") if args.cls == "all" else (args.cls,)
    res = [{"n": n, "class": c, "count": count_class(n, c), "formula_count": formula_count(n, c)} for c in classes]
    ok = all(r["count"] == r["formula_count"] for r in res)
    result = res[0] if len(res) == 1 else res
    return _report("count", {"n": n, "class": args.cls}, result), 0 if ok else 1


def cmd_enumerate(args):
    n = _need_n(args, 10)
    perms = list(enumerate_class(n, args.cls))
    if args.format == "dsm":
        return format_stream((P.matrix() for P in perms), (_perm_text(P) for P in perms)), 0
    return _report("enumerate", {"n": n, "class": args.cls}, [list(P.images) for P in perms]), 0


def cmd_vertices(args):
    n = _need_n(args, max_enumeration_n())
    vs = enumerate_extreme(n, args.cls)
    if args.format == "json":
        return _report("vertices", {"n": n, "class": args.cls}, [_rows(A) for A in vs]), 0
    return format_stream(vs), 0


def cmd_check_extreme(args):
    A = _need_matrix(args)
    if args.cls == "ds":
        raise UsageError("check-extreme takes --class t, h, pi or th")
    try:
        v = is_extreme(A, args.cls)
    except ValueError as e:
        raise UsageError(str(e)) from e
    res = {"is_extreme": v.is_extreme, "clause": v.structure_tag}
    if v.witness:
        res["witness"] = [_rows(B) for B in v.witness]
    return _report("check-extreme", {"in": args.infile, "class": args.cls}, res), 0


def cmd_decompose(args):
    A = _need_matrix(args)
    try:
        if args.integral is not None:
            perms = centro_birkhoff_integral(A, args.integral)
            terms = [{"coeff": "1", "perm": _perm_text(P)} for P in perms]
        else:
            d = birkhoff(A) if args.cls == "ds" else centro_birkhoff(A) if args.cls == "pi" else None
            if d is None:
                raise UsageError("decompose takes --class ds or pi")
            terms = [{"coeff": f"{c.numerator}/{c.denominator}", "perm": _perm_text(P)} for c, P in d.terms]
    except UsageError:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["coeff", "perm"])
        for t in terms:
            w.writerow([t["coeff"], t["perm"]])
        return buf.getvalue(), 0
    inputs = {"in": args.infile, "class": args.cls, "integral": args.integral}
    return _report("decompose", inputs, terms), 0


def cmd_term_rank(args):
    A = _need_matrix(args)
    if not A.is_zero_one():
        raise UsageError("term-rank needs a 0/1 matrix")
    if args.centro:
        rho, sel = centro_term_rank(A)
        cov = centro_min_cover(A)
    else:
        rho, sel = term_rank(A)
        cov = min_cover(A)
    res = {
        "rho": rho,
        "beta": cov.size,
        "witness_positions": [list(p) for p in sel.sorted()],
        "cover_rows": sorted(cov.rows),
        "cover_cols": sorted(cov.cols),
    }
    return _report("term-rank", {"in": args.infile, "centro": args.centro}, res), 0 if rho == cov.size else 1


def cmd_dimension(args):
    n = _need_n(args)
    res = {"formula": dimension_formula(n, args.cls)}
    code = 0
    if args.verify:
        _need_n(args, max_enumeration_n())
        got = verified_polytope_dimension(n, args.cls)
        res["verified_rank"] = got
        res["pass"] = got == res["formula"]
        code = 0 if res["pass"] else 1
    return _report("dimension", {"n": n, "class": args.cls, "verify": args.verify}, res), code


def cmd_basis(args):
    n = _need_n(args, 10)
    try:
        B = basis_centro(n) if args.target == "centro" else basis_th(n)
    except ValueError as e:
        raise UsageError(str(e)) from e
    mats = B.matrices()
    members = [P.matrix() for P in enumerate_class(n, "pi" if args.target == "centro" else "th")]
    r = rational_rank(mats)
    span_ok = rational_rank(mats + members) == r
    code = 0 if span_ok and r == len(mats) else 1
    if args.format == "dsm":
        text = format_stream(mats, (_perm_text(P) for P in B.members))
        return text + f"# size {len(mats)} rank {r} spans_class {str(span_ok).lower()}\n", code
    res = {"size": len(mats), "rank": r, "spans_class": span_ok, "members": [list(P.images) for P in B.members]}
    return _report("basis", {"n": n, "target": args.target}, res), code


def cmd_latin(args):
    n = _need_n(args, 16)
    try:
        if args.method == "block":
            if n % 2:
                raise ValueError("block construction needs even n")
            T = latin_block(cyclic_latin(n // 2))
        else:
            T = latin_from_decomposition(n)
    except ValueError as e:
        raise UsageError(str(e)) from e
    ok = validate_latin(T, True)
    if args.format == "json":
        res = {"square": [list(r) for r in T.cells], "centrosymmetric": ok}
        return _report("latin", {"n": n, "method": args.method}, res), 0 if ok else 1
    return str(T) + "\n", 0 if ok else 1


def cmd_reproduce(args):
    from .reproduce import run_all

    r = run_all(seed=args.seed)
    failed = [c["id"] for c in r["criteria"] if not c["pass"]]
    check = {"expected": "all criteria and facts pass", "got": {"failed_criteria": failed}, "pass": r["all_pass"]}
    return _report("reproduce", {"seed": args.seed}, r, check), 0 if r["all_pass"] else 1


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "check-extreme": cmd_check_extreme,
    "vertices": cmd_vertices,
    "decompose": cmd_decompose,
    "term-rank": cmd_term_rank,
    "dimension": cmd_dimension,
    "basis": cmd_basis,
    "latin": cmd_latin,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symds", description=__doc__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--n", type=int)
        default_cls = {"count": "all", "decompose": "pi", "vertices": "pi", "dimension": "pi", "enumerate": "pi"}.get(name, "th")
        choices = CLASSES + (("all",) if name == "count" else ())
        s.add_argument("--class", dest="cls", choices=choices, default=default_cls)
        s.add_argument("--in", dest="infile")
        default_fmt = "dsm" if name == "vertices" else "json"
        s.add_argument("--format", choices=("json", "csv", "dsm"), default=default_fmt)
        s.add_argument("--verify", action="store_true")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--centro", action="store_true")
        s.add_argument("--integral", type=int)
        s.add_argument("--target", choices=("centro", "th"), default="centro")
        s.add_argument("--method", choices=("block", "decompose"), default="decompose")
    return p


def _emit(payload, stream) -> None:
    if isinstance(payload, str):
        stream.write(payload)
    else:
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def run(argv: list[str] | None = None) -> tuple[object, int]:
    """Parse and execute; returns (payload, exit code) without printing."""
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        return COMMANDS[args.command](args)
    except KeyboardInterrupt:
        raise
    except (UsageError, DsmFormatError) as e:
        return {"error": str(e)}, 2


def main(argv: list[str] | None = None) -> int:
    payload, code = run(argv)
    _emit(payload, sys.stderr if code == 2 else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
