"""Command-line interface: gen, detect, extract, verify, sweep.

Exit codes: 0 found/valid, 1 not found/invalid/unknown/precondition, 2 usage,
3 I/O or format error.  Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

from .errors import FormatError, PreconditionFailed, ResampleExhausted, UnavoidableError
from .exact import as_fraction
from .extract import ExtractorParams, extract_theorem1, extract_theorem2, pivot_clique
from .generators import (
    gen_p_pattern,
    gen_random_min_degree,
    gen_tightness,
    gen_uniform,
    spec_from_dict,
)
from .graph import BLUE, RED, Color, GraphColoring, decode, encode
from .patterns import verify_witness, witness_from_json, witness_to_json
from .search import (
    SearchBudget,
    Unknown,
    find_alt_blowup,
    find_any_mono_clique,
    find_induced_biclique,
    find_local_pattern,
    find_mono_clique,
    find_p_pattern,
)
from .sweep import SweepConfig, records_to_csv, run_sweep

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _IOFailure(Exception):
    pass


def _rational(text: str):
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _color(text: str) -> Color:
    try:
        return Color.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from None


def _load_graph(path: str) -> GraphColoring:
    return decode(_read(path))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


# --- subcommands ------------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        if args.family == "p-pattern":
            g = gen_p_pattern(args.m)[0]
        elif args.family == "tightness":
            g = gen_tightness(args.eps, args.t, args.recolor_p, args.seed)
        elif args.family == "random":
            g = gen_uniform(args.n, args.p, args.seed)
        elif args.family == "random-mindeg":
            g = gen_random_min_degree(args.n, args.delta, args.seed, args.max_repair_rounds)
        else:
            try:
                spec = spec_from_dict(json.loads(_read(args.spec)))
            except json.JSONDecodeError as exc:
                raise FormatError(f"bad spec JSON: {exc.msg}", exc.lineno, exc.colno) from None
            g = spec.build(args.seed)
    except (PreconditionFailed, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(args.output, encode(g))
    return EXIT_OK


def _detect(g: GraphColoring, args):
    t = args.t
    budget = SearchBudget(args.budget)
    pattern = args.pattern
    if pattern == "mono-clique":
        if args.mode == "heuristic":
            # pivot walk first, exhaustive only if it comes up short
            w = pivot_clique(g, g.full, t)
            if w is not None and (args.color is None or w.color is args.color):
                return w
        if args.color is None:
            return find_any_mono_clique(g, t, budget)
        return find_mono_clique(g, args.color, t, budget)
    if pattern == "induced-biclique":
        colors = (RED, BLUE) if args.color is None else (args.color,)
        unknown = None
        for c in colors:
            got = find_induced_biclique(g, c, t, budget)
            if got is not None and not isinstance(got, Unknown):
                return got
            unknown = unknown or got
        return unknown
    if pattern == "p-pattern":
        return find_p_pattern(g, t, budget)
    if pattern == "alt-c4":
        return find_alt_blowup(g, t, budget)
    return find_local_pattern(g, t, budget)


def cmd_detect(args) -> int:
    g = _load_graph(args.input)
    if args.mode == "heuristic" and args.budget == DEFAULT_NODES:
        args.budget = HEURISTIC_NODES
    try:
        got = _detect(g, args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if got is None:
        _emit({"result": "none"})
        return EXIT_NO
    if isinstance(got, Unknown):
        _emit({"result": "unknown", "nodes": got.nodes})
        return EXIT_NO
    assert verify_witness(g, got)
    sys.stdout.write(witness_to_json(got) + "\n")
    return EXIT_OK


_OVERRIDES = (
    "block_size",
    "clique_target",
    "sparse_threshold",
    "slack_exponent",
    "blowup_margin",
    "max_rounds",
    "oracle_cap",
    "resample_limit",
    "search_nodes",
)


def cmd_extract(args) -> int:
    g = _load_graph(args.input)
    over = {k: getattr(args, k) for k in _OVERRIDES if getattr(args, k) is not None}
    try:
        params = ExtractorParams(seed=args.seed, **over)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    run = extract_theorem1 if args.theorem == 1 else extract_theorem2
    try:
        res = run(g, args.eps, args.t, params)
    except (PreconditionFailed, ResampleExhausted) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        _emit({"result": "precondition_failed", "message": str(exc)})
        return EXIT_NO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.trace:
        _write(args.trace, res.trace.to_json() + "\n")
    if res.ok:
        assert verify_witness(g, res.witness, args.t)
        sys.stdout.write(witness_to_json(res.witness) + "\n")
        print(f"found via {res.via} after {res.rounds} round(s)", file=sys.stderr)
        return EXIT_OK
    sys.stdout.write(res.failure.to_json() + "\n")
    print(f"no witness: {res.failure.reason}", file=sys.stderr)
    return EXIT_NO


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    text = _read(args.witness)
    try:
        w = witness_from_json(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad witness JSON: {exc.msg}", exc.lineno, exc.colno) from None
    try:
        ok = verify_witness(g, w, args.t)
    except ValueError as exc:
        # structurally unusable against this graph: out-of-range vertex, overlap, size mismatch
        print(f"invalid: {exc}", file=sys.stderr)
        ok = False
    _emit({"valid": ok})
    return EXIT_OK if ok else EXIT_NO


def cmd_sweep(args) -> int:
    text = _read(args.config)
    try:
        cfg = SweepConfig.from_json(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad sweep config JSON: {exc.msg}", exc.lineno, exc.colno) from None
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = args.out if args.out is not None else cfg.out
    cfg = replace(cfg, out=None, workers=args.workers or cfg.workers)
    records = run_sweep(cfg)
    _write(out, records_to_csv(records))
    print(f"{len(records)} record(s)", file=sys.stderr)
    return EXIT_OK


DEFAULT_NODES = 50_000_000
HEURISTIC_NODES = 200_000


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unavoidable", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a colouring in UPC format")
    fam = gen.add_subparsers(dest="family", required=True)
    g1 = fam.add_parser("p-pattern")
    g1.add_argument("--m", type=int, required=True)
    g2 = fam.add_parser("tightness")
    g2.add_argument("--eps", type=_rational, required=True)
    g2.add_argument("--t", type=int, required=True)
    g2.add_argument("--recolor-p", type=_rational, default=None, help="default 3*eps")
    g2.add_argument("--seed", type=int, default=0)
    g3 = fam.add_parser("random", help="each pair red with probability p")
    g3.add_argument("--n", type=int, required=True)
    g3.add_argument("--p", type=_rational, default=_rational("1/2"))
    g3.add_argument("--seed", type=int, default=0)
    g4 = fam.add_parser("random-mindeg", help="uniform colouring repaired to min degree delta*n")
    g4.add_argument("--n", type=int, required=True)
    g4.add_argument("--delta", type=_rational, required=True)
    g4.add_argument("--seed", type=int, default=0)
    g4.add_argument("--max-repair-rounds", type=int, default=None)
    g5 = fam.add_parser("spec", help="generator spec JSON")
    g5.add_argument("--spec", required=True)
    g5.add_argument("--seed", type=int, default=None)
    for q in (g1, g2, g3, g4, g5):
        q.add_argument("-o", "--output", default="-")

    det = sub.add_parser("detect", help="search for a pattern")
    det.add_argument("--pattern", required=True,
                     choices=["mono-clique", "induced-biclique", "p-pattern", "alt-c4", "local"])
    det.add_argument("--t", type=int, required=True)
    det.add_argument("--color", type=_color, default=None)
    det.add_argument("--mode", choices=["oracle", "heuristic"], default="oracle")
    det.add_argument("--budget", type=int, default=DEFAULT_NODES, help="search node cap")
    det.add_argument("-i", "--input", required=True)

    ext = sub.add_parser("extract", help="run a theorem pipeline")
    ext.add_argument("--theorem", type=int, choices=[1, 2], required=True)
    ext.add_argument("--eps", type=_rational, required=True)
    ext.add_argument("--t", type=int, required=True)
    ext.add_argument("--seed", type=int, default=0)
    ext.add_argument("-i", "--input", required=True)
    ext.add_argument("--trace", default=None, help="write the step trace JSON here")
    for name in _OVERRIDES:
        typ = _rational if name == "sparse_threshold" else int
        ext.add_argument("--" + name.replace("_", "-"), dest=name, type=typ, default=None)

    ver = sub.add_parser("verify", help="check a witness against a colouring")
    ver.add_argument("-i", "--input", required=True)
    ver.add_argument("--witness", required=True)
    ver.add_argument("--t", type=int, default=None)

    sw = sub.add_parser("sweep", help="run an experiment grid to CSV")
    sw.add_argument("--config", required=True)
    sw.add_argument("--out", default=None)
    sw.add_argument("--workers", type=int, default=None)
    return p


_COMMANDS = {"gen": cmd_gen, "detect": cmd_detect, "extract": cmd_extract, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_IO
    except _IOFailure as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except UnavoidableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
