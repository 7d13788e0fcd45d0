"""Command-line surface.

Every subcommand accepts --model, --json, --cache-dir, --limit, --seed and
--threads.  JSON output is a single object with the fixed keys "command",
"model", "k", "result", "elapsed_ms" and "limits"; permutations and peg
permutations appear as strings in their canonical text forms.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 resource limit
exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .basis import m_set, peg_basis, standard_basis
from .distance import Model, ResourceLimitError, distance, distance_peg
from .enumeration import CountMethod, sequence
from .generators import generating_set
from .inflation import grid_member
from .peg import PegPermutation, format_peg, parse_peg, peg_of, peg_sort_key
from .perm import ParseError, Perm, contains_pattern, format_perm, parse_perm
from .verify import run_suites

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4

_METHODS = {"bfs": CountMethod.BFS, "grid": CountMethod.GRID,
            "avoid": CountMethod.AVOID}


class UsageError(Exception):
    """Bad invocation: missing/empty arguments, unknown flags."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract reserves 2 for
    # parse errors, so route usage problems through UsageError instead.
    def error(self, message: str):
        raise UsageError(message)


def _perm_arg(text: str) -> Perm:
    if not text.strip():
        raise UsageError("empty permutation argument")
    return parse_perm(text)


def _peg_arg(text: str) -> PegPermutation:
    if not text.strip():
        raise UsageError("empty peg permutation argument")
    return parse_peg(text)


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--model", choices=("rd", "prd"), default="rd",
                        help="reversal (rd) or prefix reversal (prd) model")
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")
    common.add_argument("--cache-dir", metavar="PATH", default=None,
                        help="distance table cache directory "
                             "(default: $PEGBALL_CACHE)")
    common.add_argument("--limit", metavar="N", type=int, default=None,
                        help="resource limit override (length or k bound, "
                             "per subcommand)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property checks")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker parallelism degree (accepted; execution "
                             "is serial)")

    parser = _Parser(prog="pegball",
                     description="Distance balls of permutations under "
                                 "reversals and prefix reversals.")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")

    p = sub.add_parser("distance", parents=[common],
                       help="exact distance of a permutation")
    p.add_argument("perm", metavar="PERM")

    p = sub.add_parser("peg-distance", parents=[common],
                       help="exact distance of a peg permutation")
    p.add_argument("pegperm", metavar="PEGPERM")

    p = sub.add_parser("peg", parents=[common],
                       help="collapse a permutation to its peg permutation")
    p.add_argument("perm", metavar="PERM")

    p = sub.add_parser("generate", parents=[common],
                       help="k-generating peg permutations")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("peg-basis", parents=[common],
                       help="clean compact peg basis of the radius-k ball")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("basis", parents=[common],
                       help="standard basis with M-set provenance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", metavar="L", type=int, default=None,
                   help="length cap for the M-set search")

    p = sub.add_parser("enumerate", parents=[common],
                       help="ball sizes for n = 1 .. n-max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--method", choices=sorted(_METHODS), default="bfs")

    p = sub.add_parser("member", parents=[common],
                       help="ball membership with a witness or violation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("perm", metavar="PERM")

    p = sub.add_parser("grid-member", parents=[common],
                       help="grid-class membership")
    p.add_argument("pegperm", metavar="PEGPERM")
    p.add_argument("perm", metavar="PERM")

    p = sub.add_parser("verify", parents=[common],
                       help="recompute reference values and check invariants")
    p.add_argument("--suite", choices=("paper", "properties", "all"),
                   default="all")

    return parser


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (result, text lines, exit code)

def _cmd_distance(args) -> tuple[object, list[str], int]:
    d = distance(Model(args.model), _perm_arg(args.perm),
                 limit=args.limit, cache_dir=args.cache_dir)
    return d, [str(d)], EXIT_OK


def _cmd_peg_distance(args) -> tuple[object, list[str], int]:
    d = distance_peg(Model(args.model), _peg_arg(args.pegperm),
                     limit=args.limit)
    return d, [str(d)], EXIT_OK


def _cmd_peg(args) -> tuple[object, list[str], int]:
    text = format_peg(peg_of(_perm_arg(args.perm)))
    return text, [text], EXIT_OK


def _cmd_generate(args) -> tuple[object, list[str], int]:
    gs = generating_set(Model(args.model), args.k)
    members = [format_peg(pp) for pp in gs.sorted_members()]
    return ({"members": members, "count": len(members)},
            members + [f"count={len(members)}"], EXIT_OK)


def _cmd_peg_basis(args) -> tuple[object, list[str], int]:
    basis = peg_basis(Model(args.model), args.k, k_limit=args.limit)
    members = [format_peg(pp) for pp in basis.sorted_members()]
    return ({"members": members, "count": len(members), "bound": basis.bound},
            members + [f"count={len(members)}"], EXIT_OK)


def _cmd_basis(args) -> tuple[object, list[str], int]:
    model = Model(args.model)
    pegs = peg_basis(model, args.k, k_limit=args.limit)
    fibers = {beta: m_set(model, beta, args.cap)
              for beta in pegs.sorted_members()}
    members = sorted(standard_basis(model, args.k, args.cap,
                                    k_limit=args.limit),
                     key=lambda p: (len(p), p))
    rows = []
    lines = []
    for p in members:
        sources = [format_peg(beta) for beta, ms in fibers.items()
                   if p in ms.members]
        rows.append({"perm": format_perm(p), "sources": sources})
        if sources:
            lines.append(f"{format_perm(p)}  [M: {', '.join(sources)}]")
        else:
            # found by the ball sweep; its peg contains a basis peg but no
            # M-set witness fits inside it
            lines.append(f"{format_perm(p)}  [sweep: peg "
                         f"{format_peg(peg_of(p))}]")
    lines.append(f"count={len(members)}")
    return {"members": rows, "count": len(members)}, lines, EXIT_OK


def _cmd_enumerate(args) -> tuple[object, list[str], int]:
    counts = sequence(Model(args.model), args.k, args.n_max,
                      _METHODS[args.method], limit=args.limit)
    return ({"counts": counts, "method": args.method},
            [" ".join(str(c) for c in counts)], EXIT_OK)


def _cmd_member(args) -> tuple[object, list[str], int]:
    model = Model(args.model)
    p = _perm_arg(args.perm)
    d = distance(model, p, limit=args.limit, cache_dir=args.cache_dir)
    if d <= args.k:
        witness = next((format_peg(g)
                        for g in generating_set(model, args.k).sorted_members()
                        if grid_member(g, p)), None)
        result = {"member": True, "distance": d, "witness": witness}
        lines = [f"member (distance {d}), inflation of {witness}"]
    else:
        basis = standard_basis(model, args.k, k_limit=args.limit)
        violated = next((format_perm(b)
                         for b in sorted(basis, key=lambda b: (len(b), b))
                         if contains_pattern(b, p)), None)
        result = {"member": False, "distance": d, "violated": violated}
        lines = [f"not a member (distance {d}), "
                 f"contains basis element {violated}"]
    return result, lines, EXIT_OK


def _cmd_grid_member(args) -> tuple[object, list[str], int]:
    inside = grid_member(_peg_arg(args.pegperm), _perm_arg(args.perm))
    return inside, ["yes" if inside else "no"], EXIT_OK


def _cmd_verify(args) -> tuple[object, list[str], int]:
    results = run_suites(args.suite, seed=args.seed)
    passed = sum(r.passed for r in results)
    lines = [r.line() for r in results]
    lines.append(f"passed {passed}/{len(results)}")
    payload = {"checks": [{"suite": r.suite, "name": r.name,
                           "passed": r.passed, "detail": r.detail}
                          for r in results],
               "passed": passed == len(results)}
    code = EXIT_OK if passed == len(results) else EXIT_VERIFY
    return payload, lines, code


_HANDLERS = {
    "distance": _cmd_distance,
    "peg-distance": _cmd_peg_distance,
    "peg": _cmd_peg,
    "generate": _cmd_generate,
    "peg-basis": _cmd_peg_basis,
    "basis": _cmd_basis,
    "enumerate": _cmd_enumerate,
    "member": _cmd_member,
    "grid-member": _cmd_grid_member,
    "verify": _cmd_verify,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.cache_dir:
        os.environ["PEGBALL_CACHE"] = args.cache_dir

    start = time.perf_counter()
    try:
        result, lines, code = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = round((time.perf_counter() - start) * 1000, 3)

    if args.json:
        envelope = {
            "command": args.command,
            "model": args.model,
            "k": getattr(args, "k", None),
            "result": result,
            "elapsed_ms": elapsed_ms,
            "limits": {"limit": args.limit, "cache_dir": args.cache_dir,
                       "threads": args.threads},
        }
        print(json.dumps(envelope))
    else:
        for line in lines:
            print(line)
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # argparse --help
        code = exc.code
        return code if isinstance(code, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
