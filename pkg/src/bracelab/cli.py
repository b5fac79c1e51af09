"""Command-line interface: ``bracelab <command> ...``.

Exit codes: 0 success, 1 domain error (invalid input, failed check), 2 usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import analyze
from .catalog import builtin_catalog
from .enumeration import STRATEGIES, enumerate_braces
from .errors import BraceLabError
from .formats import (
    detect_kind,
    format_brace,
    format_solution,
    load_brace,
    load_solution,
    parse_brace,
    parse_solution,
)
from .substructure import enumerate_subbraces, format_set, is_ideal, quotient
from .ybe import associated_solution, multipermutation_level_solution, retract
from .zbrace import (
    z_is_dedekind,
    z_socle_membership,
    z_star,
    z_subgroup_ideal_check,
    z_mul,
)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    if detect_kind(text) == "brace":
        b = parse_brace(text)
        print(f"valid brace: order {b.order}")
    else:
        s = parse_solution(text)
        print(f"valid solution: size {s.size}")
    return 0


def cmd_analyze(args) -> int:
    report = analyze(load_brace(args.file))
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return 0


def cmd_solution(args) -> int:
    _emit(format_solution(associated_solution(load_brace(args.file))), args.output)
    return 0


def cmd_retract(args) -> int:
    step = retract(load_solution(args.file))
    print("classes: " + " ".join(format_set(c) for c in step.classes))
    print(f"size: {step.quotient.size}")
    if args.output:
        Path(args.output).write_text(format_solution(step.quotient), encoding="utf-8")
    return 0


def cmd_level(args) -> int:
    level = multipermutation_level_solution(load_solution(args.file))
    print("none" if level is None else level)
    return 0


def cmd_subbraces(args) -> int:
    A = load_brace(args.file)
    for S in enumerate_subbraces(A, strategy=args.strategy):
        report = is_ideal(A, S)
        line = f"{S} ideal={'true' if report else 'false'}"
        if not report:
            a, b, c = report.witness
            line += f" witness=star({a},{b})={c}"
        print(line)
    return 0


def _parse_elements(text: str) -> list[int]:
    text = text.strip().strip("{}")
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad element list {text!r}") from None


def cmd_quotient(args) -> int:
    A = load_brace(args.file)
    q = quotient(A, args.ideal)
    _emit(format_brace(q.brace), args.output)
    return 0


def cmd_enumerate(args) -> int:
    braces = enumerate_braces(args.order, args.strategy)
    print(f"count: {len(braces)}")
    for b in braces:
        print(f"{b.name} mul=" + "/".join(" ".join(map(str, row)) for row in b.mul_table))
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for b in braces:
            (out / f"{b.name}.brace").write_text(format_brace(b), encoding="utf-8")
    return 0


def cmd_catalog(args) -> int:
    cat = builtin_catalog()
    for entry in cat:
        print(f"{entry.name} order={entry.brace.order}")
    if args.export:
        out = Path(args.export)
        out.mkdir(parents=True, exist_ok=True)
        for entry in cat:
            (out / f"{entry.name}.brace").write_text(format_brace(entry.brace), encoding="utf-8")
    return 0


def _witness_text(w: tuple[int, int, int]) -> str:
    n, m, r = w
    return f"star({_za(n)},{_za(m)}) = {_za(r)}"


def _za(n: int) -> str:
    return {0: "0", 1: "a", -1: "-a"}.get(n, f"{n}a")


def cmd_zbrace(args) -> int:
    op = args.zop
    if op == "mul":
        print(z_mul(args.n, args.m))
    elif op == "star":
        print(z_star(args.n, args.m))
    elif op == "socle":
        res = z_socle_membership(args.n)
        print("true" if res else f"false; witness {_witness_text(res.witness)}")
    elif op == "ideal-check":
        rep = z_subgroup_ideal_check(args.k)
        print("ideal" if rep else f"not ideal; witness {_witness_text(rep.witness)}")
    elif op == "dedekind":
        rep = z_is_dedekind(non_abelian=args.structure == "non-abelian")
        if rep:
            print("true")
        else:
            print(f"false; witness subgroup {rep.witness_k}Z; {_witness_text(rep.ideal_report.witness)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bracelab", description="Finite left braces and Yang-Baxter solutions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="validate a brace or solution file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="full analysis of a brace file")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("solution", help="write the associated solution of a brace")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solution)

    s = sub.add_parser("retract", help="one retraction step of a solution")
    s.add_argument("file")
    s.add_argument("-o", "--output", help="write the retracted solution here")
    s.set_defaults(func=cmd_retract)

    s = sub.add_parser("level", help="multipermutation level of a solution")
    s.add_argument("file")
    s.set_defaults(func=cmd_level)

    s = sub.add_parser("subbraces", help="list subbraces with their ideal status")
    s.add_argument("file")
    s.add_argument("--strategy", choices=("lattice", "closure"), default="lattice")
    s.set_defaults(func=cmd_subbraces)

    s = sub.add_parser("quotient", help="quotient of a brace by an ideal")
    s.add_argument("file")
    s.add_argument("--ideal", required=True, type=_parse_elements, help="e.g. 0,2")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("enumerate", help="all braces of a small order")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--strategy", choices=STRATEGIES, default="lambda")
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("catalog", help="list (and optionally export) the built-in braces")
    s.add_argument("--export", metavar="DIR")
    s.set_defaults(func=cmd_catalog)

    z = sub.add_parser("zbrace", help="the non-abelian brace on the integers")
    zsub = z.add_subparsers(dest="zop", required=True)
    for name in ("mul", "star"):
        t = zsub.add_parser(name)
        t.add_argument("n", type=int)
        t.add_argument("m", type=int)
    t = zsub.add_parser("socle")
    t.add_argument("n", type=int)
    t = zsub.add_parser("ideal-check")
    t.add_argument("k", type=int)
    t = zsub.add_parser("dedekind")
    t.add_argument("structure", nargs="?", choices=("non-abelian", "abelian"), default="non-abelian")
    z.set_defaults(func=cmd_zbrace)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BraceLabError, OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
