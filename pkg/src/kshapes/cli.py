"""Command-line front end.

Every subcommand that emits objects writes one JSON document per line.
``--k`` is the shape-side k throughout, so pistols have height k - 1 and
every record carries both numbers.  The one exception is ``poly``, where
``--k`` indexes the polynomial family (Q_{2k}, F_k, Gamma_k, G_{2k}).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, List, Optional, TextIO, Tuple

from . import __version__
from .bijection import canonical_labels, classify_sites, phi, varphi
from .errors import KShapeError, ResourceError
from .harness import SUITES, format_table, run_suites
from .partition import Partition, is_irreducible, is_k_shape, k_boundary, render_partition, shape_stats
from .partial import PartialKShape
from .pistols import Pistol, enumerate_pistols, point_stats, render_pistol
from .poly import dumont_foata, gamma, gandhi, genocchi, poly_from_pistols, poly_from_shapes

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(out: TextIO, obj) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _pistol_record(f: Pistol, k: int, stats: bool) -> dict:
    rec = {"k": k, "height": f.height, "values": list(f.values)}
    if stats:
        rec["stats"] = point_stats(f).to_json()
    return rec


def _shape_record(p: Partition, k: int, stats: bool) -> dict:
    rec = {"k": k, "height": k - 1, "parts": list(p.parts)}
    if stats:
        rec["stats"] = shape_stats(p, k).to_json()
        rec["sites"] = classify_sites(p, k).to_json()
    return rec


def _read_records(inp: TextIO, err: TextIO) -> Iterator[Tuple[int, object]]:
    """Parsed JSON lines; malformed ones are reported on ``err`` and skipped."""
    for n, line in enumerate(inp, 1):
        if not line.strip():
            continue
        try:
            yield n, json.loads(line)
        except json.JSONDecodeError as exc:
            _emit(err, {"line": n, "error": f"malformed JSON: {exc.msg}"})


def _as_pistol(obj) -> Pistol:
    return Pistol.from_json(obj)


def _as_partition(obj) -> Partition:
    if isinstance(obj, dict) and "parts" not in obj:
        raise KShapeError("expected an object with a 'parts' field")
    return Partition.from_json(obj)


def _check_k(k: int, least: int) -> None:
    if k < least:
        raise UsageError(f"--k must be at least {least}, got {k}")


def cmd_pistols(args, out, err, inp) -> int:
    _check_k(args.k, 2)
    for f in enumerate_pistols(args.k - 1):
        _emit(out, _pistol_record(f, args.k, args.stats))
    return EXIT_OK


def cmd_shapes(args, out, err, inp) -> int:
    _check_k(args.k, 3)
    for f in enumerate_pistols(args.k - 1):
        rec = _shape_record(varphi(f), args.k, args.stats)
        rec["pistol"] = list(f.values)
        _emit(out, rec)
    return EXIT_OK


def _streaming(args, out, err, inp, handle) -> int:
    for n, obj in _read_records(inp, err):
        try:
            _emit(out, handle(obj))
        except (KShapeError, ValueError, TypeError, KeyError) as exc:
            _emit(err, {"line": n, "input": obj, "error": f"{type(exc).__name__}: {exc}"})
    return EXIT_OK


def cmd_map(args, out, err, inp) -> int:
    _check_k(args.k, 3)
    k = args.k

    def to_shape(obj):
        f = _as_pistol(obj)
        if f.height != k - 1:
            raise KShapeError(f"pistol has height {f.height}, expected {k - 1}")
        p = varphi(f)
        return {"k": k, "height": k - 1, "input": list(f.values), "parts": list(p.parts),
                "fix_vector": list(f.fix_vector()), "fr_vector": list(shape_stats(p, k).fr_vector)}

    def to_pistol(obj):
        p = _as_partition(obj)
        f = phi(p, k)
        return {"k": k, "height": k - 1, "input": list(p.parts), "values": list(f.values),
                "fr_vector": list(shape_stats(p, k).fr_vector), "fix_vector": list(f.fix_vector())}

    return _streaming(args, out, err, inp, to_shape if args.dir == "varphi" else to_pistol)


def cmd_stats(args, out, err, inp) -> int:
    _check_k(args.k, 3 if args.kind == "shape" else 2)
    k = args.k

    def pistol(obj):
        f = _as_pistol(obj)
        if f.height != k - 1:
            raise KShapeError(f"pistol has height {f.height}, expected {k - 1}")
        return _pistol_record(f, k, True)

    def shape(obj):
        p = _as_partition(obj)
        rec = {"k": k, "height": k - 1, "parts": list(p.parts),
               "k_shape": is_k_shape(p, k)}
        rec["irreducible"] = rec["k_shape"] and is_irreducible(p, k)
        if rec["irreducible"]:
            rec["stats"] = shape_stats(p, k).to_json()
            rec["sites"] = classify_sites(p, k).to_json()
        return rec

    return _streaming(args, out, err, inp, pistol if args.kind == "pistol" else shape)


def cmd_poly(args, out, err, inp) -> int:
    k, family, source = args.k, args.family, args.source
    if family == "genocchi":
        _check_k(k, 2)
        if source == "recursion":
            value = genocchi(k)
        elif source == "pistols":
            value = sum(1 for _ in enumerate_pistols(k - 1))
        else:
            raise UsageError("genocchi numbers come from --source recursion or pistols")
        if args.format == "json":
            _emit(out, {"family": family, "k": k, "value": str(value)})
        else:
            out.write(f"{value}\n")
        return EXIT_OK
    _check_k(k, 1)
    if source == "recursion":
        poly = {"gandhi": gandhi, "dumont-foata": dumont_foata, "gamma": gamma}[family](k)
    elif source == "pistols":
        weighting = {"gandhi": "gandhi", "gamma": "gamma",
                     "dumont-foata": "df-pro" if args.statistic == "pro" else "df-sur"}[family]
        poly = poly_from_pistols(k, weighting)
    else:
        if family != "dumont-foata":
            raise UsageError("--source shapes is only defined for the dumont-foata family")
        poly = poly_from_shapes(k)
    if args.format == "json":
        _emit(out, {"family": family, "k": k, "source": source, **poly.to_json()})
    else:
        out.write(f"{poly}\n")
    return EXIT_OK


def cmd_verify(args, out, err, inp) -> int:
    _check_k(args.k, 2)
    results = run_suites(args.k, args.suite, deep=args.deep)
    if args.format == "json":
        for r in results:
            _emit(out, {"k": args.k, "height": args.k - 1, **r.to_json()})
    else:
        out.write(format_table(results) + "\n")
    return EXIT_FAIL if any(r.failed for r in results) else EXIT_OK


def cmd_render(args, out, err, inp) -> int:
    def pistol(obj):
        return render_pistol(_as_pistol(obj))

    def shape(obj):
        p = _as_partition(obj)
        text = render_partition(p)
        if args.k is not None:
            s = k_boundary(p, args.k)
            labels = canonical_labels(p, args.k) if is_k_shape(p, args.k) else None
            text += f"\n{args.k}-boundary:\n" + PartialKShape(args.k, tuple(
                (h, b, lab) for (h, b), lab in zip(s.columns, labels or [1] * len(s.columns)))).render()
        return text

    handle = pistol if args.kind == "pistol" else shape
    first = True
    for n, obj in _read_records(inp, err):
        try:
            text = handle(obj)
        except (KShapeError, ValueError, TypeError, KeyError) as exc:
            _emit(err, {"line": n, "input": obj, "error": f"{type(exc).__name__}: {exc}"})
            continue
        if not first:
            out.write("\n")
        out.write(text + "\n")
        first = False
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="accepted for reproducible scripts; unused")

    parser = _Parser(prog="kshapes", description="Surjective pistols, irreducible k-shapes and their polynomials.",
                     parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pistols", parents=[common], help="enumerate surjective pistols of height k-1")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--stats", action="store_true", help="attach point statistics")
    p.set_defaults(func=cmd_pistols)

    p = sub.add_parser("shapes", parents=[common], help="enumerate irreducible k-shapes through varphi")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--stats", action="store_true", help="attach shape statistics and site classification")
    p.set_defaults(func=cmd_shapes)

    p = sub.add_parser("map", parents=[common], help="map JSON lines from stdin through phi or varphi")
    p.add_argument("--dir", choices=("phi", "varphi"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("stats", parents=[common], help="annotate JSON lines from stdin with statistics")
    p.add_argument("--kind", choices=("pistol", "shape"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("poly", parents=[common], help="print a polynomial or Genocchi number")
    p.add_argument("--family", choices=("gandhi", "genocchi", "dumont-foata", "gamma"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--source", choices=("recursion", "pistols", "shapes"), default="recursion")
    p.add_argument("--statistic", choices=("sur", "pro"), default="sur",
                   help="third statistic for dumont-foata pistol sums")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--deep", action="store_true", help="allow the k = 5 box enumeration")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="draw pistols or partitions read from stdin")
    p.add_argument("--kind", choices=("pistol", "shape"), required=True)
    p.add_argument("--k", type=int, default=None, help="also draw the labeled k-boundary of each shape")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None, inp: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    inp = inp or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out, err, inp)
    except UsageError as exc:
        err.write(f"kshapes: error: {exc}\n")
        return EXIT_USAGE
    except ResourceError as exc:
        err.write(f"kshapes: error: {exc}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
