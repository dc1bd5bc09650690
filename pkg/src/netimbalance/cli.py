"""Command-line interface: ``netimb <command> ...``.

Generator specs (``--gen``)::

    complete:N   path:N   ring:N   star:N
    er:N:P       ba:N:M   ws:N:K:P
    dumbbell:S[:complete|ring|er[:P]]

Random models (er, ba, ws, dumbbell with er clusters) require ``--seed``.
Grids accept ``start:stop:count`` (inclusive, evenly spaced),
``logspace:lo:hi:count`` (decades) or a comma-separated list.

Exit codes: 0 success, 1 usage error, 2 input/parse/output error,
3 computation error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile

import numpy as np

from . import graph as gen
from .classical import compare as compare_metrics
from .errors import (
    ImbalanceError,
    InvalidParameter,
    NoCandidatesError,
    NotConnectedError,
    ParseError,
    UndefinedGradientError,
    UndefinedMetricError,
)
from .experiments import (
    DEFAULT_PROFILES,
    MODELS,
    SweepSpec,
    comparison_csv,
    run_sweep,
    ws_metric_comparison,
)
from .metric import QoSProfile, imbalance, phase_diagram, phase_diagram_csv
from .optimizer import greedy_edge_addition
from .paths import default_threads

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3

RANDOM_MODELS = {"er", "ba", "ws"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- parsing helpers -----------------------------------------------------------

def parse_grid(text: str) -> list[float]:
    parts = text.split(":")
    try:
        if parts[0] == "logspace" and len(parts) == 4:
            return np.logspace(float(parts[1]), float(parts[2]), int(parts[3])).tolist()
        if len(parts) == 3:
            return np.round(np.linspace(float(parts[0]), float(parts[1]), int(parts[2])), 12).tolist()
        return [float(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}") from None


def parse_profiles(text: str) -> list[QoSProfile]:
    """``"a,h0;a,h0;..."``."""
    out = []
    for chunk in text.split(";"):
        a, h0 = chunk.split(",")
        out.append(QoSProfile(float(a), float(h0)))
    return out


def _needs_seed(name: str, seed) -> int:
    if seed is None:
        raise UsageError(f"--seed is required for random model {name!r}")
    return seed


def graph_from_spec(spec: str, seed: int | None) -> gen.Graph:
    parts = spec.split(":")
    name, args = parts[0], parts[1:]
    try:
        if name in ("complete", "path", "ring", "star") and len(args) == 1:
            return getattr(gen, name)(int(args[0]))
        if name == "er" and len(args) == 2:
            return gen.erdos_renyi(int(args[0]), float(args[1]), _needs_seed(name, seed))
        if name == "ba" and len(args) == 2:
            return gen.barabasi_albert(int(args[0]), int(args[1]), _needs_seed(name, seed))
        if name == "ws" and len(args) == 3:
            return gen.watts_strogatz(int(args[0]), int(args[1]), float(args[2]), _needs_seed(name, seed))
        if name == "dumbbell" and 1 <= len(args) <= 3:
            topology = args[1] if len(args) > 1 else "er"
            p = float(args[2]) if len(args) > 2 else 0.15
            if topology == "er":
                seed = _needs_seed(name, seed)
            return gen.dumbbell(int(args[0]), topology, p, seed or 0)[0]
    except ValueError as exc:
        if isinstance(exc, InvalidParameter):
            raise
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from None
    raise UsageError(f"bad generator spec {spec!r}")


def load_graph(args) -> gen.Graph:
    if bool(args.gen) == bool(args.input):
        raise UsageError("give exactly one of --gen or --input")
    if args.gen:
        return graph_from_spec(args.gen, args.seed)
    return gen.read_edge_list(args.input)


def write_output(text: str, out: str | None) -> None:
    """Write to ``out`` atomically (temp file + rename), or to stdout."""
    if not out:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".netimb-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _profile(args, a="a", h0="h0") -> QoSProfile:
    try:
        return QoSProfile(getattr(args, a), getattr(args, h0))
    except InvalidParameter as exc:
        raise UsageError(str(exc)) from None


# -- commands -----------------------------------------------------------------

def cmd_compute(args) -> int:
    profile = _profile(args)
    g = load_graph(args)
    if g.n < 2:
        raise InvalidParameter(f"need n >= 2, got n={g.n}")
    report = imbalance(g, profile, threads=args.threads)
    if args.format == "csv":
        text = report.CSV_HEADER + "\n" + report.csv_row() + "\n"
    else:
        text = report.to_text()
    write_output(text, args.out)
    return EXIT_OK


def cmd_optimize(args) -> int:
    if args.budget < 1:
        raise UsageError("--budget must be >= 1")
    profile = _profile(args)
    also = None
    if args.also_profile:
        try:
            also = parse_profiles(args.also_profile)[0]
        except (ValueError, InvalidParameter) as exc:
            raise UsageError(f"bad --also-profile: {exc}") from None
    g = load_graph(args)
    result = greedy_edge_addition(g, profile, args.budget, workers=args.threads)
    if not result.chosen_edges:
        raise NoCandidatesError("no candidate edges: input graph is complete")
    lines = ["profile,a,h0,I_before,I_after"]
    lines.append(f"optimized,{profile.a!r},{profile.h0!r},{result.i_before!r},{result.i_after!r}")
    if also is not None:
        before = imbalance(g, also).I
        after = imbalance(result.graph, also).I
        lines.append(f"also,{also.a!r},{also.h0!r},{before!r},{after!r}")
    edges = " ".join(f"({g.label(u)},{g.label(v)})" for u, v in result.chosen_edges)
    sys.stderr.write(f"chosen edges: {edges}\n")
    if result.exhausted:
        sys.stderr.write("warning: candidates exhausted before budget\n")
    write_output("\n".join(lines) + "\n", args.out)
    if args.trace_out:
        write_output(result.trace_csv(), args.trace_out)
    return EXIT_OK


def cmd_phase_diagram(args) -> int:
    g = load_graph(args)
    a_grid, h0_grid = parse_grid(args.a_grid), parse_grid(args.h0_grid)
    if any(x <= 0 for x in a_grid + h0_grid):
        raise UsageError("grid values must be > 0")
    matrix = phase_diagram(g, a_grid, h0_grid, threads=args.threads)
    write_output(phase_diagram_csv(matrix, a_grid, h0_grid), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    grid = parse_grid(args.grid)
    try:
        profiles = parse_profiles(args.profiles) if args.profiles else list(DEFAULT_PROFILES)
    except (ValueError, InvalidParameter) as exc:
        raise UsageError(f"bad --profiles: {exc}") from None
    seed = _needs_seed(args.model, args.seed)
    spec = SweepSpec(args.model, args.n, grid, profiles, args.runs, seed, args.k)
    result = run_sweep(spec, workers=args.threads)
    write_output(result.to_csv(), args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    profile = _profile(args)
    if args.ws:
        seed = _needs_seed("ws", args.seed)
        grid = parse_grid(args.grid) if args.grid else None
        kwargs = {"p_grid": grid} if grid else {}
        rows = ws_metric_comparison(
            args.n, args.k, profile=profile, runs=args.runs, seed=seed, workers=args.threads, **kwargs
        )
        write_output(comparison_csv(rows), args.out)
        return EXIT_OK
    g = load_graph(args)
    if g.n < 2:
        raise InvalidParameter(f"need n >= 2, got n={g.n}")
    report = imbalance(g, profile)
    cmp = compare_metrics(g, profile)
    text = f"I,{cmp.CSV_HEADER}\n{report.I!r},{cmp.csv_row()}\n"
    write_output(text, args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.gen:
        g = graph_from_spec(args.gen, args.seed)
    else:
        model = args.model
        if model is None:
            raise UsageError("give --model or --gen")
        if model in RANDOM_MODELS or (model == "dumbbell" and args.topology == "er"):
            _needs_seed(model, args.seed)
        if model in ("complete", "path", "ring", "star"):
            g = getattr(gen, model)(args.n)
        elif model == "er":
            g = gen.erdos_renyi(args.n, args.p, args.seed)
        elif model == "ba":
            g = gen.barabasi_albert(args.n, args.m, args.seed)
        elif model == "ws":
            g = gen.watts_strogatz(args.n, args.k, args.p, args.seed)
        else:
            g = gen.dumbbell(args.n, args.topology, args.p, args.seed or 0)[0]
    write_output(gen.to_edge_list(g), args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _add_input(p):
    p.add_argument("--gen", help="generator spec, e.g. complete:50 or ws:50:4:0.1")
    p.add_argument("--input", help="edge-list file")
    p.add_argument("--seed", type=int, help="seed for random generators")


def _add_profile(p, a=None, h0=None):
    p.add_argument("--a", type=float, default=a, required=a is None, help="sigmoid steepness (> 0)")
    p.add_argument("--h0", type=float, default=h0, required=h0 is None, help="ideal hop threshold (> 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="netimb", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--config", help="JSON file whose keys provide defaults for the command's flags")
    parser.add_argument(
        "--threads", type=int, default=None,
        help="worker count (default: $NETIMB_THREADS or all cores); results do not depend on it",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="imbalance report for one graph")
    _add_input(p)
    _add_profile(p)
    p.add_argument("--format", choices=("csv", "json-text"), default="json-text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("optimize", help="greedy imbalance-minimising edge addition")
    _add_input(p)
    _add_profile(p, 2.0, 3.0)
    p.add_argument("--budget", type=int, default=1)
    p.add_argument("--also-profile", help="second profile 'a,h0' reported before/after")
    p.add_argument("--trace-out", help="CSV file for the per-round trace")
    p.add_argument("--out")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("phase-diagram", help="imbalance over an (h0, a) grid")
    _add_input(p)
    p.add_argument("--a-grid", required=True)
    p.add_argument("--h0-grid", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_phase_diagram)

    p = sub.add_parser("sweep", help="seeded random-model sweep")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--k", type=int, default=4, help="WS lattice degree")
    p.add_argument("--grid", required=True, help="model parameter grid")
    p.add_argument("--runs", type=int, default=20)
    p.add_argument("--seed", type=int)
    p.add_argument("--profiles", help="'a,h0;a,h0;...' (default: 1,4;2,3;0.5,6)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", help="classical metrics for one graph, or a WS comparison table")
    _add_input(p)
    _add_profile(p, 1.0, 4.0)
    p.add_argument("--ws", action="store_true", help="WS sweep comparison instead of one graph")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--grid", help="WS rewiring grid (default: 20 log-spaced points in [1e-3, 1])")
    p.add_argument("--runs", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("--model", choices=("complete", "path", "ring", "star", "er", "ba", "ws", "dumbbell"))
    p.add_argument("--gen", help="generator spec instead of --model flags")
    p.add_argument("--n", type=int, default=50, help="node count (cluster size for dumbbell)")
    p.add_argument("--p", type=float, default=0.15)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--topology", choices=("complete", "ring", "er"), default="er")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if known.config:
        try:
            with open(known.config, encoding="utf-8") as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {known.config}: {exc}") from None
        config = {k.replace("-", "_"): v for k, v in config.items()}
        subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
        command = next((tok for tok in rest if tok in subparsers.choices), None)
        if command is not None:
            sub = subparsers.choices[command]
            sub.set_defaults(**config)
            for action in sub._actions:
                if action.dest in config:
                    action.required = False
    return parser.parse_args(argv)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
    except UsageError as exc:
        print(f"netimb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # argparse exits on --help and on usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.threads is None:
        args.threads = default_threads()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"netimb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, InvalidParameter, OSError) as exc:
        print(f"netimb: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotConnectedError, NoCandidatesError, UndefinedMetricError, UndefinedGradientError, ImbalanceError) as exc:
        print(f"netimb: error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
