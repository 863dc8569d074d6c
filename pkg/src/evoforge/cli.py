"""Command-line front end: every experiment and utility as a subcommand.

Identical argv always produces byte-identical primary output (data on
stdout or ``--out``, logs on stderr).  Exit codes: 0 success, 1 bad usage
or input, 2 the solver hit its recursion cap.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import __version__
from .benchmarks import FUNCTIONS, get_function
from .forge import GraphEvolutionConfig, run as run_forge
from .graphs import EdgeListParseError, parse_edge_list
from .hamilton import Decision, decide
from .ppa import PpaParams, run_ppa
from .spfp import (
    SubsetSumInstance,
    brute_force_subset_sum,
    composite_uniform,
    evaluate_selection,
    lift,
    reduce_to_spfp,
)
from .sweep import SweepGrid, emit_csv, run_sweep, window_stats

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPPED = 2

# parameter window reported on stderr after a sweep (when it fits the grid)
REPORT_WINDOW_POP = (1, 4)
REPORT_WINDOW_NMAX = (1, 9)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for capped runs
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class CliError(Exception):
    """Input problem attributable to the caller; rendered on stderr, exit 1."""


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _int_range(text: str) -> tuple[int, ...]:
    """Parse '3' or 'LO..HI' into an inclusive integer range."""
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo_i < 1 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"range {text!r} must be ascending and positive")
    return tuple(range(lo_i, hi_i + 1))


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _write_output(args, text: str) -> None:
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _cmd_solve(args) -> int:
    try:
        with open(args.graph, "r", encoding="utf-8") as fh:
            graph = parse_edge_list(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {args.graph}: {exc.strerror}") from exc
    except EdgeListParseError as exc:
        raise CliError(f"{args.graph}: {exc}") from exc
    outcome = decide(graph, args.cap)
    payload = {
        "decision": outcome.decision.value,
        "witness": list(outcome.witness) if outcome.witness is not None else None,
        "recursions": outcome.recursions,
        "cap_hit": outcome.cap_hit,
    }
    _write_output(args, _json_text(payload))
    return EXIT_CAPPED if outcome.decision is Decision.ABORTED else EXIT_OK


def _cmd_evolve(args) -> int:
    try:
        config = GraphEvolutionConfig(
            algorithm=args.algo,
            vertex_count=args.vertices,
            initial_edges=args.edges,
            budget=args.budget,
            recursion_cap=args.cap,
            seed=args.seed,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    record = run_forge(config)
    _write_output(args, _json_text(record.to_json_dict()))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    try:
        get_function(args.function)
        grid = SweepGrid(
            pop_sizes=args.pop,
            n_maxes=args.nmax,
            runs_per_cell=args.runs,
            evals_per_run=args.evals,
            base_seed=args.seed,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    result = run_sweep(args.function, grid, jobs=args.jobs)
    buffer = io.StringIO()
    emit_csv(result, buffer)
    _write_output(args, buffer.getvalue())
    try:
        stats = window_stats(result, REPORT_WINDOW_POP, REPORT_WINDOW_NMAX)
    except ValueError:
        print("window summary: grid does not straddle the reporting window", file=sys.stderr)
    else:
        print(
            "window pop<=4, n_max<=9: "
            f"inside mean {stats.inside_mean:.6e} sd {stats.inside_sd:.6e} "
            f"({stats.inside_cells} cells) / outside mean {stats.outside_mean:.6e} "
            f"sd {stats.outside_sd:.6e} ({stats.outside_cells} cells)",
            file=sys.stderr,
        )
    if args.svg is not None:
        from .figures import render_sweep_heatmap

        render_sweep_heatmap(result, args.svg, (REPORT_WINDOW_POP, REPORT_WINDOW_NMAX))
    return EXIT_OK


def _cmd_optimize(args) -> int:
    try:
        function = get_function(args.function)
        params = PpaParams(pop_size=args.pop, n_max=args.nmax, eval_budget=args.evals)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    record = run_ppa(function, params, args.seed)
    _write_output(args, _json_text(record.to_json_dict()))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    try:
        instance = SubsetSumInstance(values=args.set, target=args.target)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    reduced = reduce_to_spfp(instance)
    solution = brute_force_subset_sum(instance)
    lines = [f"values: {' '.join(str(v) for v in instance.values)}", f"target: {instance.target}"]
    lines.append("polygon greyscale table (rows: polygons, columns: k-th pick):")
    for i, column in enumerate(reduced.polygon_table):
        lines.append(f"  v={instance.values[i]}: " + " ".join(str(g) for g in column))
    subset = " ".join(str(v) for v in solution.values) or "(empty)"
    lines.append(f"best subset: {{{subset}}} sum={solution.best_sum} exact={str(solution.exact).lower()}")
    pixel = evaluate_selection(reduced, solution.indices)
    lifted = lift(solution.indices, reduced)
    lines.append(f"selection pixel value: {pixel:g}")
    lines.append(f"lifted back: {' '.join(str(v) for v in lifted) or '(empty)'} sum={sum(lifted)}")
    check = "ok" if pixel == float(sum(lifted)) == float(solution.best_sum) else "MISMATCH"
    lines.append(f"round trip: {check}")
    _write_output(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_composite(args) -> int:
    try:
        value = composite_uniform(args.greys, args.alpha)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _write_output(args, f"{value:g}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    common.add_argument("--out", default=None, help="write primary output to a file instead of stdout")

    parser = _Parser(prog="evoforge", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="decide Hamiltonicity of an edge-list file")
    p.add_argument("--graph", required=True, help="edge-list file ('v e' header, one 'u w' per line)")
    p.add_argument("--cap", type=_positive_int, default=10**8, help="recursion cap (default 1e8)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("evolve", parents=[common], help="evolve a hard instance for the solver")
    p.add_argument("--algo", choices=("hc", "ppa"), required=True)
    p.add_argument("--vertices", type=_positive_int, required=True)
    p.add_argument("--edges", type=int, default=None, help="initial edges (default: transition density)")
    p.add_argument("--budget", type=_positive_int, default=500, help="solver evaluations (default 500)")
    p.add_argument("--cap", type=_positive_int, default=10**6, help="recursion cap (default 1e6)")
    p.set_defaults(func=_cmd_evolve)

    p = sub.add_parser("sweep", parents=[common], help="parameter sweep, CSV per grid cell")
    p.add_argument("--function", required=True, help=f"one of: {', '.join(sorted(FUNCTIONS))}")
    p.add_argument("--runs", type=_positive_int, default=10, help="runs per cell (default 10)")
    p.add_argument("--evals", type=_positive_int, default=10_000, help="evaluations per run (default 10000)")
    p.add_argument("--pop", type=_int_range, default=tuple(range(1, 41)), help="population sizes, LO..HI (default 1..40)")
    p.add_argument("--nmax", type=_int_range, default=tuple(range(1, 11)), help="offspring caps, LO..HI (default 1..10)")
    p.add_argument("--jobs", type=_positive_int, default=1, help="parallel worker processes (default 1)")
    p.add_argument("--svg", default=None, help="also render a heatmap figure to this path")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("optimize", parents=[common], help="one continuous optimization run, JSON record")
    p.add_argument("--function", required=True, help=f"one of: {', '.join(sorted(FUNCTIONS))}")
    p.add_argument("--pop", type=_positive_int, required=True, help="population size")
    p.add_argument("--nmax", type=_positive_int, required=True, help="max offspring per individual")
    p.add_argument("--evals", type=_positive_int, default=10_000, help="evaluation budget (default 10000)")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("reduce", parents=[common], help="subset-sum to pixel-stack reduction, verified")
    p.add_argument("--set", type=_int_list, required=True, help="comma-separated positive integers")
    p.add_argument("--target", type=_positive_int, required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("composite", parents=[common], help="fold a greyscale layer stack to a pixel value")
    p.add_argument("--greys", type=_float_list, required=True, help="comma-separated greyscales, drawing order")
    p.add_argument("--alpha", type=float, default=0.5, help="opacity of every layer (default 0.5)")
    p.set_defaults(func=_cmd_composite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"evoforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
