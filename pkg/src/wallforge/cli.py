"""Command-line front end: ``wallforge <subcommand> ...``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 on
bad flags or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import abacus, crystal, examples, verify
from .affine import FAMILIES, affine_data
from .qseries import STRING_CASES, multiplicities, normalize_case, string_function
from .wall import Wall


class UsageError(Exception):
    pass


def _m_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range like 0..5, got {text!r}")


def _data_and_lam(args):
    try:
        data = affine_data(args.family, args.n)
    except ValueError as err:
        raise UsageError(str(err))
    lam = data.level1_weights[0] if args.lam is None else args.lam
    if lam not in data.level1_weights:
        raise UsageError(f"Lambda_{lam} is not a level-1 weight of {args.family}; choose from {data.level1_weights}")
    if getattr(args, "cross", False) and not (args.family == "B1" and lam in (0, 1)):
        raise UsageError("--cross needs --family B1 with --lam 0 or 1")
    return data, lam


def _read_json(path: Optional[str]):
    try:
        text = open(path).read() if path and path != "-" else sys.stdin.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read JSON input: {err}")


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_count(args, out) -> int:
    _, lam = _data_and_lam(args)
    try:
        counts = verify.METHODS[args.method](args.family, args.n, lam, args.m.stop - 1, args.cross)
    except ValueError as err:  # e.g. the oracle's block cap
        raise UsageError(str(err))
    out.write("m,count\n")
    for m in args.m:
        out.write(f"{m},{counts[m]}\n")
    return 0


def cmd_map(args, out) -> int:
    try:
        Y = Wall.from_json(_read_json(args.input))
        m, image = abacus.pi_forward(Y, args.cross)
    except (KeyError, ValueError) as err:
        raise UsageError(str(err))
    _dump({"m": m, "image": image.to_json()}, out)
    return 0


def cmd_invmap(args, out) -> int:
    obj = _read_json(args.input)
    try:
        data = affine_data(obj["family"], int(obj["n"]))
        Y = abacus.pi_inverse(data, int(obj["lam"]), abacus.TupleImage.from_json(obj["image"]))
    except (KeyError, ValueError) as err:
        raise UsageError(str(err))
    _dump(Y.to_json(), out)
    return 0


def cmd_reduce(args, out) -> int:
    try:
        Y = Wall.from_json(_read_json(args.input))
        red = abacus.reduce(Y)
    except (KeyError, ValueError) as err:
        raise UsageError(str(err))
    _dump({"reduced": red.wall.to_json(), "beads": red.config.to_json(),
           "moves": dict(sorted(red.moves.items())), "deltas": red.deltas}, out)
    return 0


def cmd_crystal(args, out) -> int:
    data, lam = _data_and_lam(args)
    if args.depth < 0:
        raise UsageError("--depth must be nonnegative")
    vertices, edges = crystal.crystal_graph(data, lam, args.depth)
    dot = crystal.to_dot(vertices, edges)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
        out.write(f"{len(vertices)} vertices, {len(edges)} edges written to {args.dot}\n")
    else:
        out.write(dot)
    return 0


def cmd_series(args, out) -> int:
    try:
        case = normalize_case(args.case)
    except ValueError as err:
        raise UsageError(str(err))
    family = "B1" if case.startswith("B-") else case.split("-")[0]
    try:
        coeffs = multiplicities(string_function(family, args.n, case), args.order)
    except ValueError as err:
        raise UsageError(str(err))
    out.write(",".join(map(str, coeffs)) + "\n")
    return 0


def _run_examples(out) -> bool:
    ok = True
    for ex, got, good in examples.replay():
        out.write(f"{'ok  ' if good else 'FAIL'} {ex.name}\n")
        if not good:
            ok = False
            out.write(f"     expected: {ex.expected}\n     got:      {got}\n")
    return ok


def cmd_verify(args, out) -> int:
    ok = True
    if args.suite in ("full", "counts"):
        for family, n, lam, cross in verify.standard_cases():
            for row in verify.three_way(family, n, lam, args.max_m, cross):
                if not row.ok:
                    ok = False
                    out.write(f"MISMATCH {row.describe()}\n")
        out.write(f"counts: {'all agree' if ok else 'mismatches found'}\n")
    if args.suite in ("full", "examples"):
        ok = _run_examples(out) and ok
    return 0 if ok else 1


def cmd_examples(args, out) -> int:
    return 0 if _run_examples(out) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wallforge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def weight_flags(sp, need_family=True):
        sp.add_argument("--family", required=need_family, choices=FAMILIES)
        sp.add_argument("--n", type=int, required=need_family)
        sp.add_argument("--lam", type=int, default=None, help="level-1 weight index (default: first admissible)")

    sp = sub.add_parser("count", help="weight multiplicities as CSV")
    weight_flags(sp)
    sp.add_argument("--m", type=_m_range, required=True, help="an integer or a range such as 0..5")
    sp.add_argument("--method", choices=sorted(verify.METHODS), default="bijection")
    sp.add_argument("--cross", action="store_true", help="B1 only: the weight space across Lambda_0/Lambda_1")
    sp.set_defaults(func=cmd_count)

    for name, func, text in (("map", cmd_map, "JSON wall -> tuple of partitions"),
                             ("invmap", cmd_invmap, "JSON tuple -> wall"),
                             ("reduce", cmd_reduce, "JSON wall -> reduced wall and move counts")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("--input", default="-", help="JSON file, default stdin")
        if name == "map":
            sp.add_argument("--cross", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("crystal", help="crystal graph in DOT format")
    weight_flags(sp)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--dot", help="output path (default stdout)")
    sp.set_defaults(func=cmd_crystal)

    sp = sub.add_parser("series", help="string-function coefficients")
    sp.add_argument("--case", required=True, help=f"one of {', '.join(STRING_CASES)}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--order", type=int, default=20)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("verify", help="three-way counts and worked examples")
    sp.add_argument("--suite", choices=("full", "counts", "examples"), default="full")
    sp.add_argument("--max-m", type=int, default=5)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("examples", help="replay the worked examples")
    sp.set_defaults(func=cmd_examples)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as err:
        sys.stderr.write(f"wallforge: {err}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

