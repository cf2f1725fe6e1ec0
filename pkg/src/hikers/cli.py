"""Command-line interface. JSON results go to stdout, diagnostics to stderr.

Exit codes: 0 success (negative answers included), 2 usage error,
3 budget exceeded, 4 input parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import pnumbers
from .coloring import Coloring, KrtFormatError, gen_coloring, parse_krt, write_krt
from .homogeneity import build_track_trie, extract_monochromatic, is_end_homogeneous, is_monochromatic
from .track import build_track, hiker_map

SCHEMA_VERSION = 1
EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_PARSE = 0, 2, 3, 4

log = logging.getLogger("hikers")


class UsageError(Exception):
    pass


def _emit(command: str, status: str, payload: dict, diagnostics: list[str] | None = None) -> None:
    doc = {
        "command": command,
        "version": SCHEMA_VERSION,
        "status": status,
        "payload": payload,
        "diagnostics": diagnostics or [],
    }
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _load(path: str) -> Coloring:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise KrtFormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_krt(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _variant(name: str) -> str:
    return "sequence" if name in ("seq", "sequence") else name


def cmd_gen(args) -> int:
    try:
        c = gen_coloring(args.kind, args.size, args.tuple, args.colors, value=args.const, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    Path(args.out).write_text(write_krt(c), encoding="utf-8", newline="\n")
    _emit("gen", "ok", {
        "kind": args.kind, "N": c.ground_size, "t": c.tuple_size, "r": c.num_colors,
        "seed": args.seed, "out": args.out,
    })
    return EXIT_OK


def cmd_track(args) -> int:
    c = _load(args.coloring)
    try:
        tr = build_track(c, args.dest)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fx = hiker_map(c, tr)
    _emit("track", "ok", {
        "destination": tr.destination, "points": list(tr.points), "delta": tr.delta,
        "arity": tr.arity, "map": {"delta": fx.delta, "arity": fx.arity, "entries": list(fx.entries)},
    })
    return EXIT_OK


def cmd_extract(args) -> int:
    c = _load(args.coloring)
    w = extract_monochromatic(c)
    check = is_monochromatic(c, w.members)
    _emit("extract", "ok", {
        "color": w.color, "members": list(w.members), "size": len(w.members),
        "verified": check.monochromatic and (check.vacuous or check.color == w.color),
    })
    return EXIT_OK


def cmd_check(args) -> int:
    c = _load(args.coloring)
    try:
        if args.seq is not None:
            res = is_end_homogeneous(c, _int_list(args.seq))
            payload = {"mode": "end-homogeneous", "holds": res.ok,
                       "violation": list(res.violation) if res.violation else None}
            status = "ok" if res.ok else "property-false"
        else:
            res = is_monochromatic(c, _int_list(args.set))
            payload = {"mode": "monochromatic", "holds": res.monochromatic, "color": res.color,
                       "vacuous": res.vacuous,
                       "violation": [list(s) for s in res.violation] if res.violation else None}
            status = "ok" if res.monochromatic else "property-false"
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit("check", status, payload)
    return EXIT_OK


def cmd_trie(args) -> int:
    c = _load(args.coloring)
    stats = build_track_trie(c)
    payload = {"depth": stats.depth, "node_count": stats.node_count,
               "distinct_maps_per_level": stats.distinct_maps_per_level}
    if args.dump:
        payload["trie"] = _stringify(stats.trie)
    _emit("trie", "ok", payload)
    return EXIT_OK


def _stringify(node: dict) -> dict:
    return {str(k): _stringify(v) for k, v in node.items()}


def cmd_pnum(args) -> int:
    rep = pnumbers.exact_p(args.k, args.r, args.n, _variant(args.variant), args.budget, args.workers, args.prune)
    log.info("p(%d,%d,%d) computed in %.1f ms", args.k, args.r, args.n, rep.elapsed * 1000)
    _emit("pnum", "ok", rep.to_row(timing=args.timing))
    return EXIT_OK


def cmd_bound(args) -> int:
    try:
        b = pnumbers.theorem9_bound(args.k, args.r, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit("bound", "ok", {"k": args.k, "r": args.r, "n": args.n, "bound": str(b)})
    return EXIT_OK


def cmd_grid(args) -> int:
    cells = []
    for cell in args.cells.split(","):
        parts = cell.split(":")
        if len(parts) != 3:
            raise UsageError(f"grid cell must look like k:r:n, got {cell!r}")
        cells.append(tuple(_int_list(",".join(parts))))
    code = EXIT_OK
    variant = _variant(args.variant)
    for k, r, n in cells:
        try:
            row = pnumbers.exact_p(k, r, n, variant, args.budget, args.workers, args.prune).to_row(timing=args.timing)
        except pnumbers.BudgetExceeded as exc:
            row = {"k": k, "r": r, "n": n, "variant": variant, "error": str(exc), "lower_bound": exc.lower_bound}
            code = EXIT_BUDGET
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        sys.stdout.write(json.dumps(row, sort_keys=True) + "\n")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hikers", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a KRT coloring")
    p.add_argument("--kind", choices=["constant", "parity", "random"], required=True)
    p.add_argument("--size", type=int, required=True, help="ground size N")
    p.add_argument("--tuple", type=int, required=True, help="colored subset size t")
    p.add_argument("--colors", type=int, required=True, help="number of colors r")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--const", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("track", help="hiker's track and map for one destination")
    p.add_argument("--coloring", required=True)
    p.add_argument("--dest", type=int, required=True)
    p.set_defaults(func=cmd_track)

    p = sub.add_parser("extract", help="monochromatic set via the track reduction")
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("check", help="check a sequence or set against a coloring")
    p.add_argument("--coloring", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--seq", help="end-homogeneity of an increasing sequence")
    g.add_argument("--set", help="monochromaticity of a point set")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("trie", help="prefix tree of all tracks")
    p.add_argument("--coloring", required=True)
    p.add_argument("--dump", action="store_true", help="include the full trie")
    p.set_defaults(func=cmd_trie)

    def search_opts(p):
        p.add_argument("--variant", choices=["track", "seq", "sequence"], default="track")
        p.add_argument("--budget", type=int, default=pnumbers.DEFAULT_BUDGET)
        p.add_argument("--workers", type=int, default=None, help="default: number of CPUs")
        p.add_argument("--no-prune", dest="prune", action="store_false",
                       help="search every coloring separately instead of settling shared prefixes")
        p.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-identical output)")

    p = sub.add_parser("pnum", help="exact p(k, r, n) by exhaustive search")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    search_opts(p)
    p.set_defaults(func=cmd_pnum)

    p = sub.add_parser("bound", help="exclusive upper bound on p(k, r, n)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("grid", help="exact p and bound for several cells, as JSON lines")
    p.add_argument("--cells", required=True, help="k:r:n[,k:r:n...]")
    search_opts(p)
    p.set_defaults(func=cmd_grid)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except pnumbers.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit(args.command, "error", {"required": exc.required, "budget": exc.budget,
                                      "lower_bound": exc.lower_bound}, [str(exc)])
        return EXIT_BUDGET
    except KrtFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
