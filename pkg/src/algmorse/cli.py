"""Command-line front end.

Exit status: 0 on success, 1 when an input fails validation (or the two
Morse computations disagree), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import io
from .complex import BasedComplex, validate_complex
from .errors import MorseError
from .homology import euler_characteristic, homology
from .matching import Matching, find_cycle, greedy_matching, linear_extension, validate_matching
from .morse import (
    DEFAULT_PATH_BUDGET,
    morse_boundary,
    reduce_by_elimination,
    verify_decomposition,
)
from .ring import RingSpec
from .simplicial import parse_facets, simplicial_to_complex


class UsageError(Exception):
    pass


def _emit(args, doc: dict[str, Any], text: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        print("\n".join(text))


def _load(args) -> BasedComplex:
    C = io.load_complex(args.complex)
    validate_complex(C)
    return C


def _matching(args, C: BasedComplex) -> Matching:
    if getattr(args, "greedy", False) and getattr(args, "matching", None):
        raise UsageError("--greedy and --matching are mutually exclusive")
    if getattr(args, "matching", None):
        return io.load_matching(args.matching)
    if getattr(args, "greedy", False):
        return greedy_matching(C)
    raise UsageError(f"{args.command} requires --matching FILE or --greedy")


def _chain_text(chain) -> str:
    if not chain:
        return "0"
    return " + ".join(f"{w}*{c}" for c, w in chain.terms.items())


def cmd_validate(args) -> int:
    C = _load(args)
    counts = [len(b) for b in C.bases]
    _emit(
        args,
        {"valid": True, "ring": str(C.ring), "cells_per_dim": counts},
        [f"valid chain complex over {C.ring}; cells per dimension: {counts}"],
    )
    return 0


def cmd_convert(args) -> int:
    with open(args.from_simplicial, encoding="utf-8") as fh:
        facets = parse_facets(fh.read())
    C = simplicial_to_complex(facets, RingSpec.parse(args.ring))
    doc = io.complex_to_json(C)
    if args.output:
        io.dump_json(doc, args.output)
    else:
        print(json.dumps(doc, indent=2))
    return 0


def cmd_match(args) -> int:
    C = _load(args)
    M = _matching(args, C)
    classes = validate_matching(C, M)
    cycle = find_cycle(C, M)
    crit = [c for c in C.ids if M.is_critical(c)]
    doc = {
        "pairs": io.matching_to_json(M)["pairs"],
        "acyclic": cycle is None,
        "cycle": cycle,
        "classification": {c: k.value for c, k in classes.items()},
        "critical": crit,
    }
    text = [f"{len(M)} matched pairs; {len(crit)} critical cells" + (": " + " ".join(crit) if crit else "")]
    text += [f"  {a} < {b}" for a, b in sorted(M.pairs)]
    text.append("acyclic" if cycle is None else "NOT acyclic; cycle through " + " -> ".join(cycle))
    _emit(args, doc, text)
    return 0 if cycle is None else 1


def cmd_extension(args) -> int:
    C = _load(args)
    M = _matching(args, C)
    validate_matching(C, M)
    L = linear_extension(C, M)
    _emit(args, {"order": list(L.order)}, [" ".join(L.order)])
    return 0


def cmd_reduce(args) -> int:
    C = _load(args)
    M = _matching(args, C)
    validate_matching(C, M)
    doc: dict[str, Any] = {"matching_size": len(M)}
    text = [f"matching of size {len(M)}"]
    by_paths = by_elim = None
    if args.method in ("paths", "both"):
        by_paths = morse_boundary(C, M, budget=args.path_budget)
        doc["morse_paths"] = io.morse_to_json(by_paths)
    if args.method in ("elimination", "both"):
        D = reduce_by_elimination(C, M)
        verify_decomposition(C, D)
        by_elim = D.morse
        doc["decomposition"] = io.decomposition_to_json(D)
        doc["atoms"] = len(D.atoms)
        doc["verified"] = True
        text.append(f"{len(D.atoms)} atoms split off; decomposition verified")
        if args.output:
            io.dump_json(io.decomposition_to_json(D), args.output)
    morse = by_elim if by_elim is not None else by_paths
    text.append(f"Morse complex on {len(morse.cells)} critical cells:")
    for cell in morse.cells:
        text.append(f"  d({cell.id}) = {_chain_text(morse.boundary_of(cell.id))}")
    status = 0
    if args.method == "both":
        agree = by_paths == by_elim
        doc["methods_agree"] = agree
        text.append("path sums and elimination agree" if agree else "MISMATCH between path sums and elimination")
        status = 0 if agree else 1
    _emit(args, doc, text)
    return status


def cmd_homology(args) -> int:
    C = _load(args)
    groups = homology(C)
    doc: dict[str, Any] = {"homology": io.homology_to_json(groups), "euler_characteristic": euler_characteristic(C)}
    text = [f"H_{g.dim} = {g}" for g in groups]
    status = 0
    if args.compare_with_morse:
        M = _matching(args, C) if (args.matching or args.greedy) else greedy_matching(C)
        morse = reduce_by_elimination(C, M).morse.complex
        other = homology(morse, max_dim=C.top_dim)
        equal = other == groups
        doc["morse_homology"] = io.homology_to_json(other)
        doc["critical_cells"] = len(morse)
        doc["equal"] = equal
        text.append(f"Morse complex ({len(morse)} critical cells):")
        text += [f"  H_{g.dim} = {g}" for g in other]
        text.append("homology preserved" if equal else "HOMOLOGY MISMATCH")
        status = 0 if equal else 1
    _emit(args, doc, text)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(prog="algmorse", description="Algebraic discrete Morse reduction of chain complexes")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a chain-complex file")
    p.add_argument("complex")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", parents=[common], help="build a chain complex from a facet list")
    p.add_argument("--from-simplicial", required=True, metavar="FACETS")
    p.add_argument("--ring", default="Z")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)

    def with_matching(p):
        p.add_argument("--matching", metavar="FILE")
        p.add_argument("--greedy", action="store_true")

    p = sub.add_parser("match", parents=[common], help="validate a matching and classify cells")
    p.add_argument("complex")
    with_matching(p)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("reduce", parents=[common], help="compute the Morse complex")
    p.add_argument("complex")
    with_matching(p)
    p.add_argument("--method", choices=("paths", "elimination", "both"), default="elimination")
    p.add_argument("--path-budget", type=int, default=DEFAULT_PATH_BUDGET)
    p.add_argument("-o", "--output", help="write the decomposition JSON here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("homology", parents=[common], help="homology via Smith normal form")
    p.add_argument("complex")
    p.add_argument("--compare-with-morse", action="store_true")
    with_matching(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("extension", parents=[common], help="print a linear extension for a matching")
    p.add_argument("complex")
    with_matching(p)
    p.set_defaults(func=cmd_extension)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"algmorse {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"algmorse {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (MorseError, json.JSONDecodeError) as exc:
        if args.json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        else:
            print(f"{type(exc).__name__}: {exc}")
        return 1


def main() -> None:
    try:
        code = run()
    except SystemExit as exc:
        code = exc.code
    sys.exit(code)


if __name__ == "__main__":
    main()
