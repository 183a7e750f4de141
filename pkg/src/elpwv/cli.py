"""``elpwv`` command line.

Exit codes: 0 when the requested objects exist (or the programs are
equivalent, or the correspondence holds), 1 when they do not, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .engine import check_correspondence, enumerate_cwvs, enumerate_se_cwvs, se_wvs
from .equivalence import equivalent
from .qsat import QdimacsError, encode, parse_qdimacs3, solve_report
from .syntax import CWI, ParseError, Program, format_program, parse_program, program_to_json

DEFAULT_MAX_ATOMS = 14


class InputError(Exception):
    pass


def _max_atoms(args) -> int:
    if args.max_atoms is not None:
        return args.max_atoms
    env = os.environ.get("ELPWV_MAX_ATOMS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"ELPWV_MAX_ATOMS={env!r} is not an integer") from None
    return DEFAULT_MAX_ATOMS


def _guard(n: int, args, what: str = "atoms"):
    limit = _max_atoms(args)
    if n > limit:
        raise InputError(
            f"{n} {what} exceed the limit of {limit}; "
            "raise it with --max-atoms or ELPWV_MAX_ATOMS"
        )


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> Program:
    try:
        return parse_program(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _dump(doc) -> str:
    return json.dumps(doc, indent=2)


def _cwi_line(w: CWI, universe) -> str:
    u = sorted(w.unknown(universe))
    return f"T: {' '.join(sorted(w.pos))} / F: {' '.join(sorted(w.neg))} / U: {' '.join(u)}"


def _sets_json(sets):
    return sorted(sorted(m) for m in sets)


def cmd_solve(args) -> int:
    program = _load(args.file)
    _guard(len(program.atoms), args)
    if args.mode in ("wv", "cwv"):
        result = enumerate_cwvs(program)
        chosen = result.wvs if args.mode == "wv" else result.cwvs
        if args.format == "json":
            key = "world_views" if args.mode == "wv" else "candidate_world_views"
            print(_dump({key: [w.to_json(program.atoms) for w in chosen]}))
        else:
            for w in chosen:
                print(_cwi_line(w, program.atoms))
            headless = sorted(
                a for a in set(program.atoms) - program.head_atoms()
                if chosen and all(a in w.neg for w in chosen)
            )
            if headless:
                print(f"% false for lack of a defining rule: {' '.join(headless)}")
    else:
        found = enumerate_se_cwvs(program) if args.mode == "se-cwv" else se_wvs(program)
        chosen = sorted(found, key=lambda c: c.sort_key())
        if args.format == "json":
            print(_dump({
                "se_world_views" if args.mode == "se-wv" else "se_candidate_world_views": [
                    {"guess": sorted(map(str, c.guess)), "answer_sets": _sets_json(c.answer_sets)}
                    for c in chosen
                ]
            }))
        else:
            for c in chosen:
                print(f"guess: {{{', '.join(sorted(map(str, c.guess)))}}}")
                for m in _sets_json(c.answer_sets):
                    print(f"  {{{', '.join(m)}}}")
    return 0 if chosen else 1


def cmd_equiv(args) -> int:
    p1, p2 = _load(args.file1), _load(args.file2)
    _guard(len(set(p1.atoms) | set(p2.atoms)), args)
    verdict = equivalent(p1, p2, args.notion)
    if args.format == "json":
        print(_dump(verdict.to_json()))
    else:
        print(f"{verdict.notion}: {'equivalent' if verdict.equal else 'not equivalent'}")
        if verdict.counterexample:
            print(f"counterexample: {json.dumps(verdict.counterexample)}")
    return 0 if verdict.equal else 1


def cmd_correspond(args) -> int:
    program = _load(args.file)
    _guard(len(program.atoms), args)
    report = check_correspondence(program)
    if args.format == "json":
        print(_dump(report.to_json()))
    else:
        print(f"{len(report.pairs)} CWV(s) paired with SE-CWV(s)")
        for w, guess, sets in report.pairs:
            print(_cwi_line(w, program.atoms))
            print(f"  guess: {{{', '.join(sorted(map(str, guess)))}}}")
            print(f"  answer sets: {_sets_json(sets)}")
        for f in report.failures:
            print(f"FAIL: {f}")
        print(f"WVs vs SE-WVs: {report.wv_relation}")
        if report.headless_false:
            print(f"% false for lack of a defining rule: {' '.join(report.headless_false)}")
    return 0 if report.ok else 1


def _load_qbf(path: str):
    try:
        return parse_qdimacs3(_read(path))
    except QdimacsError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_qsat_encode(args) -> int:
    q = _load_qbf(args.file)
    program = encode(q, check=False)
    if args.emit_elp:
        sys.stdout.write(format_program(program))
    else:
        print(_dump(program_to_json(program)))
    return 0


def cmd_qsat_solve(args) -> int:
    q = _load_qbf(args.file)
    _guard(len(q.x_vars + q.y_vars + q.z_vars), args, "QBF variables")
    result = solve_report(q)
    print(_dump(result.to_json()))
    return 0 if result.satisfiable else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elpwv", description="Three-valued world views of epistemic logic programs."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-atoms", type=int, default=None,
                        help=f"refuse larger inputs (default {DEFAULT_MAX_ATOMS} or $ELPWV_MAX_ATOMS)")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve", parents=[common], help="enumerate (candidate) world views")
    p.add_argument("file")
    p.add_argument("--mode", choices=("wv", "cwv", "se-wv", "se-cwv"), default="wv")
    fmt(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("equiv", parents=[common], help="decide equivalence of two programs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--notion", choices=("cwv", "wv", "se-cwv", "se-wv", "strong"), default="strong")
    fmt(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("correspond", parents=[common], help="pair CWVs with Shen-Eiter candidate world views")
    p.add_argument("file")
    fmt(p)
    p.set_defaults(func=cmd_correspond)

    p = sub.add_parser("qsat-encode", parents=[common], help="ground ELP for a QDIMACS ∃∀∃ 3-CNF")
    p.add_argument("file")
    p.add_argument("--emit-elp", action="store_true", help="print the ELP text format instead of JSON")
    p.set_defaults(func=cmd_qsat_encode)

    p = sub.add_parser("qsat-solve", parents=[common], help="solve a QDIMACS ∃∀∃ 3-CNF through its CWVs")
    p.add_argument("file")
    p.set_defaults(func=cmd_qsat_solve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"elpwv: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
