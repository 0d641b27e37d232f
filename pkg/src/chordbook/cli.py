"""Command-line entry point.  Every subcommand reads JSON and prints canonical JSON."""

from __future__ import annotations

import argparse
import json
import sys

from .book_codec import booksum_from_json, booksum_to_json, dumps, skeleton_booksum
from .degree_one import linking_matrix
from .diagrams import skeleton_diagrams
from .kontsevich_numeric import (
    ORIENTS,
    TYPES,
    ConvergenceError,
    CrossingPath,
    complex_to_json,
    crossing_coefficient_closed,
    detect_integral_closed,
    detect_integral_numeric,
    profile_from_json,
    simplex_integral_numeric,
)
from .link_model import LinkSyntaxError, LinkValidationError, parse_morse_link
from .moves import (
    DimensionError,
    apply_matrix,
    band_sum_apply,
    band_sum_subtract,
    block_diag,
    d_pi_1_matrix,
    d_pi_2_apply,
    omega_1f_matrix,
    orientation_flip,
    strip_matrix,
)
from .oracle import booksum_of, oracle_band_sum
from .plat_recovery import Degree1Table, InconsistentParity, parity_matrix, plat_permutation
from .thread import infer_components, thread

EXIT_INPUT, EXIT_DIMENSION, EXIT_MISMATCH = 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _json(path: str):
    return json.loads(_read(path))


def _rational(x):
    return int(x) if x.denominator == 1 else [x.numerator, x.denominator]


def cmd_encode(args) -> dict:
    link = parse_morse_link(_read(args.link))
    lay = link.layout
    return {
        "q": link.q,
        "N": lay.N,
        "boundaries": [[b.numerator, b.denominator] for b in lay.boundaries],
        "booksum": booksum_to_json(skeleton_booksum(link)),
    }


def cmd_bandsum(args) -> dict:
    s = booksum_from_json(_json(args.booksum))
    op = band_sum_subtract if args.subtract else band_sum_apply
    return booksum_to_json(op(s, args.i, args.j))


def cmd_orient(args) -> dict:
    s = booksum_from_json(_json(args.booksum))
    return booksum_to_json(orientation_flip(s, args.r))


def cmd_reid(args) -> dict:
    s = booksum_from_json(_json(args.booksum))
    n, move = args.n, args.move
    if move.startswith("dpi1-"):
        variant = {"dpi1-hs": "hump_to_strand", "dpi1-sh": "strand_to_hump", "dpi1-hh": "hump_to_hump"}[move]
        out = apply_matrix(s, block_diag(d_pi_1_matrix(variant, n, s.N), s.q))
    elif move == "dpi2":
        out = d_pi_2_apply(s, n, args.comp)
    elif move == "o1f":
        out = apply_matrix(s, omega_1f_matrix(n, s.N, s.q, args.comp))
    else:
        kind = "add" if move == "strip-add" else "delete"
        out = apply_matrix(s, block_diag(strip_matrix(kind, n, s.N), s.q))
    return booksum_to_json(out)


def cmd_compare(args):
    link = parse_morse_link(_read(args.link))
    for k in (args.i, args.j):
        if not 1 <= k <= link.q:
            raise DimensionError(f"component {k} outside 1..{link.q}")
    ds = skeleton_diagrams(link)
    lhs = band_sum_apply(booksum_of(ds, link.q, link.layout.N), args.i, args.j)
    rhs = booksum_of(oracle_band_sum(ds, args.i, args.j), link.q, link.layout.N)
    return {"equal": lhs == rhs, "terms": len(lhs)}, (0 if lhs == rhs else EXIT_MISMATCH)


def cmd_linking(args):
    L = linking_matrix(parse_morse_link(_read(args.link)))
    return [[_rational(x) for x in row] for row in L.m]


def cmd_xcoeff(args) -> dict:
    p = CrossingPath(args.m, args.l, ORIENTS[args.orient], TYPES[args.type], args.path)
    z = simplex_integral_numeric(p, args.tol) if args.numeric else crossing_coefficient_closed(p)
    return complex_to_json(z)


def cmd_detect(args) -> dict:
    w, zp = profile_from_json(_json(args.profile))
    z = detect_integral_numeric(w, zp, args.tol) if args.numeric else detect_integral_closed(w, zp)
    return complex_to_json(z)


def cmd_thread(args) -> dict:
    s = booksum_from_json(_json(args.booksum))
    out = thread(s, args.steps)
    return {"components": infer_components(out, args.steps), "booksum": booksum_to_json(out)}


def cmd_plat(args) -> dict:
    obj = _json(args.table)
    table = Degree1Table.from_json(obj)
    strands = obj.get("strands") or max((max(a, b) for a, b in table.pairs), default=0)
    return {"permutation": list(plat_permutation(parity_matrix(table, strands)))}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chordbook", description="Book notation for tangle chord diagrams.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="strip layout and single-chord books of a link")
    p.add_argument("link")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("bandsum", help="band sum of component j into i")
    p.add_argument("booksum")
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-j", type=int, required=True)
    p.add_argument("--subtract", action="store_true")
    p.set_defaults(func=cmd_bandsum)

    p = sub.add_parser("orient", help="reverse component r")
    p.add_argument("booksum")
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("reid", help="apply a Reidemeister strip matrix")
    p.add_argument("booksum")
    p.add_argument("--move", required=True,
                   choices=["dpi1-hs", "dpi1-sh", "dpi1-hh", "dpi2", "o1f", "strip-add", "strip-del"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--comp", type=int, default=1, help="component for dpi2 and o1f")
    p.set_defaults(func=cmd_reid)

    p = sub.add_parser("compare-oracle", help="congruence vs diagrammatic band sum")
    p.add_argument("link")
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-j", type=int, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("linking", help="linking matrix of a link")
    p.add_argument("link")
    p.set_defaults(func=cmd_linking)

    p = sub.add_parser("xcoeff", help="crossing coefficient of degree m")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-l", type=float, default=1.0, help="scale lambda")
    p.add_argument("--type", choices=sorted(TYPES), default="plus")
    p.add_argument("--orient", choices=sorted(ORIENTS), default="same")
    p.add_argument("--path", choices=["loglinear", "smooth"], default="loglinear")
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_xcoeff)

    p = sub.add_parser("detect", help="winding-detection integral")
    p.add_argument("--profile", required=True)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("thread", help="embed along the thread")
    p.add_argument("booksum")
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_thread)

    p = sub.add_parser("plat", help="plat permutation from degree-one parities")
    p.add_argument("table")
    p.set_defaults(func=cmd_plat)
    return ap


def run_command(argv) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (DimensionError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (LinkSyntaxError, LinkValidationError, InconsistentParity, ConvergenceError,
            json.JSONDecodeError, KeyError, TypeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(dumps(result))
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
