"""Command-line front-end.

Every subcommand reads solution documents as JSON (``-`` means stdin) and
writes a JSON result to stdout.  Exit codes: 0 success, 1 I/O or parse
errors, 2 failed checks (validation failures, failed asserted sweep claims,
failed relation checks).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus
from .enumerate import CLAIMS, ENUM_CAP, FILTERS, SWEEP_CAP, enumerate_square_free, sweep
from .errors import CapExceeded, YbeError
from .perm import DEFAULT_ELEMENT_CAP, closure, is_abelian
from .perm import orbits as group_orbits
from .retract import (
    multipermutation_level,
    ret,
    ret_rho,
    retract_classes,
    rho_classes,
    strong_level,
)
from .solution import (
    Solution,
    is_isomorphic,
    is_trivial,
    iyb_group,
    report_for_doc,
    solution_from_doc,
    solution_to_doc,
)
from .structure import check_defining_relations, eval_word, parse_word
from .twisted import check_cyclic_generators, gtu_report


def _element_cap() -> int:
    raw = os.environ.get("YBE_ELEMENT_CAP")
    if raw is None:
        return DEFAULT_ELEMENT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"YBE_ELEMENT_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("YBE_ELEMENT_CAP must be positive")
    return cap


def _emit(obj, pretty: bool) -> None:
    if pretty:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _read_doc(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _load_solution(path: str) -> Solution:
    return solution_from_doc(_read_doc(path))


def _cmd_validate(args) -> int:
    report = report_for_doc(_read_doc(args.file))
    _emit(report.to_doc(), args.pretty)
    return 0 if report.all_ok else 2


def _cmd_analyze(args) -> int:
    sol = _load_solution(args.file)
    group = iyb_group(sol, element_cap=_element_cap())
    try:
        order = closure(group).order()
    except CapExceeded:
        order = None
    _emit({
        "n": sol.n,
        "square_free": sol.square_free,
        "trivial": is_trivial(sol),
        "orbit_count": group_orbits(group).num_classes,
        "orbits": [list(c) for c in group_orbits(group).classes()],
        "group_order": order,
        "abelian": is_abelian(group),
        "cyclic_generators": check_cyclic_generators(sol),
        "retract_class_count": retract_classes(sol).num_classes,
        "rho_class_count": rho_classes(sol).num_classes,
        "multipermutation_level": multipermutation_level(sol),
        "strong_level": strong_level(sol),
    }, args.pretty)
    return 0


def _cmd_retract(args) -> int:
    sol = _load_solution(args.file)
    step = ret if args.mode == "ret" else ret_rho
    part = retract_classes if args.mode == "ret" else rho_classes
    tower = [sol]
    while part(tower[-1]).num_classes < tower[-1].n:
        tower.append(step(tower[-1]))
    if args.trace:
        _emit([solution_to_doc(t) for t in tower], args.pretty)
    else:
        _emit(solution_to_doc(tower[-1]), args.pretty)
    return 0


def _cmd_twisted(args) -> int:
    sol = _load_solution(args.file)
    _emit(gtu_report(sol, mode=args.mode), args.pretty)
    return 0


def _cmd_structure(args) -> int:
    sol = _load_solution(args.file)
    if args.eval is not None:
        word = parse_word(args.eval)
        elem = eval_word(sol, word)
        _emit({"vec": list(elem.vec), "perm": list(elem.perm.images)}, args.pretty)
        return 0
    verdict = check_defining_relations(sol)
    _emit(bool(verdict), args.pretty)
    return 0 if verdict else 2


def _cmd_enumerate(args) -> int:
    sols = enumerate_square_free(args.n, up_to_iso=args.up_to_iso,
                                 threads=args.threads, max_n=args.max_n)
    if args.max_n > ENUM_CAP:
        print(f"warning: enumeration cap raised to {args.max_n}", file=sys.stderr)
    docs = [solution_to_doc(s) for s in sols]
    if args.jsonl:
        for doc in docs:
            _emit(doc, False)
    else:
        _emit(docs, args.pretty)
    return 0


def _cmd_sweep(args) -> int:
    report = sweep(args.n_max, args.claim, args.filter,
                   max_n=args.max_n, threads=args.threads)
    if args.max_n > SWEEP_CAP:
        print(f"warning: sweep cap raised to {args.max_n}", file=sys.stderr)
    _emit(report, args.pretty)
    if report["asserted"] and not report["ok"]:
        return 2
    return 0


def _cmd_iso(args) -> int:
    a = _load_solution(args.file_a)
    b = _load_solution(args.file_b)
    p = is_isomorphic(a, b)
    _emit(None if p is None else list(p.images), args.pretty)
    return 0


def _cmd_corpus(args) -> int:
    if args.action == "list":
        _emit(corpus.names(), args.pretty)
        return 0
    if args.name is None:
        print("error: corpus emit needs a name", file=sys.stderr)
        return 1
    sol = corpus.get(args.name)
    _emit(solution_to_doc(sol), args.pretty)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybe",
        description="Finite involutive Yang-Baxter solutions: validation, "
                    "retraction, twisted unions, structure group, enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pretty(p):
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")

    p = sub.add_parser("validate", help="run all axiom checks on a solution document")
    p.add_argument("file")
    add_pretty(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("analyze", help="summary invariants of a solution")
    p.add_argument("file")
    add_pretty(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("retract", help="iterate the retraction to its fixpoint")
    p.add_argument("file")
    p.add_argument("--mode", choices=["ret", "rho"], default="ret")
    p.add_argument("--trace", action="store_true", help="emit the whole tower")
    add_pretty(p)
    p.set_defaults(func=_cmd_retract)

    p = sub.add_parser("twisted", help="search for a twisted-union split")
    p.add_argument("file")
    p.add_argument("--mode", choices=["auto", "general", "squarefree"], default="auto")
    add_pretty(p)
    p.set_defaults(func=_cmd_twisted)

    p = sub.add_parser("structure", help="structure-group arithmetic")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--eval", metavar="WORD", help='evaluate a word like "x1 x3 x2^-1"')
    g.add_argument("--check-relations", action="store_true",
                   help="verify the defining relations hold elementwise")
    add_pretty(p)
    p.set_defaults(func=_cmd_structure)

    p = sub.add_parser("enumerate", help="enumerate square-free solutions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--jsonl", action="store_true", help="one document per line")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-n", type=int, default=ENUM_CAP,
                   help="raise the enumeration size cap (with a warning)")
    add_pretty(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("sweep", help="check a named claim over all small solutions")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--claim", required=True, choices=sorted(CLAIMS))
    p.add_argument("--filter", default="all", choices=sorted(FILTERS))
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-n", type=int, default=SWEEP_CAP,
                   help="raise the sweep size cap (with a warning)")
    add_pretty(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("iso", help="find a relabelling between two solutions")
    p.add_argument("file_a")
    p.add_argument("file_b")
    add_pretty(p)
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("corpus", help="built-in solutions")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    add_pretty(p)
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except YbeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
