"""Command-line entry point tying the library into three workflows.

``clique``, ``stats``, and ``kcore`` analyze a static edge list (with the
usual cleanup: symmetrize or keep reciprocal pairs, drop self-loops, restrict
to the largest connected component). ``tscc`` reads timestamped contacts and
reports the largest temporal strong component. ``ub-sweep`` re-runs the exact
solver across a list of upper bounds and emits one CSV row per run, which is
the raw material for runtime-vs-ub plots.

Exit codes: 0 success (including an early stop at a requested upper bound),
1 bad flags, 2 unreadable or unparseable input, 3 time-limit truncation
(a partial result is still printed).

``CLIQUETOOLS_THREADS`` and ``CLIQUETOOLS_TIME_LIMIT`` supply defaults for
``--threads`` and ``--time-limit``; explicit flags win. A ``--time-limit`` of
zero or less disables the limit entirely.

The CLI itself is single-threaded plumbing. All parallelism happens inside
the solver calls and is controlled solely by ``--threads``.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Sequence

from ._kernels import backend_name
from .clique import (
    CliqueResult,
    SearchBounds,
    max_clique_exact,
    max_clique_heuristic,
)
from .graph import EdgeList, Graph, ParseError, build_graph, largest_component, parse_edge_list
from .metrics import GraphStats, core_decomposition, kcore_recall, stats
from .temporal import parse_temporal_edge_list, reach, strong_reachability

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_TIME_LIMIT = 3

THREADS_ENV = "CLIQUETOOLS_THREADS"
TIME_LIMIT_ENV = "CLIQUETOOLS_TIME_LIMIT"

DEFAULT_TIME_LIMIT = 3600.0
DEFAULT_REACH_CAP_MB = 4096

STATS_HEADER = "graph,|V|,|E|,d_max,d_avg,cc_mean,T,T_avg,sqrt2T,K,omega,gamma_K"
SWEEP_HEADER = "ub,wall_seconds,size,error"

_SUBCOMMANDS = ("clique", "tscc", "stats", "kcore", "ub-sweep")


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, resolved from flags and env vars."""

    subcommand: str
    path: Path
    fmt: str = "edges"
    directed: bool = False
    reciprocal: bool = False
    keep_components: bool = False
    bounds: SearchBounds = SearchBounds()
    threads: int = 1
    out: Path | None = None
    seed: int | None = None
    pretty: bool = False
    heuristic_only: bool = False
    with_clique: bool = False
    emit_reach: Path | None = None
    ub_values: tuple[int, ...] = ()
    reach_cap_mb: int = DEFAULT_REACH_CAP_MB

    def __post_init__(self):
        if self.subcommand not in _SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.subcommand == "ub-sweep":
            if not self.ub_values:
                raise ValueError("ub-sweep needs at least one ub value")
            if any(ub < 1 for ub in self.ub_values):
                raise ValueError("every ub value must be >= 1")


@dataclass(frozen=True)
class SweepRow:
    """One solver run of an ub sweep. ``error`` is empty on a clean run."""

    ub: int
    wall_seconds: float
    size: int | None
    error: str = ""


def ub_sweep(
    g: Graph,
    ub_values: Sequence[int],
    threads: int = 1,
    time_limit: float | None = None,
) -> list[SweepRow]:
    """Run the exact solver once per upper bound and tabulate the outcomes.

    A failing run (timeout or an unexpected error) is recorded in its row and
    the sweep continues with the next value.
    """
    if not ub_values:
        raise ValueError("ub_values must be nonempty")
    rows = []
    for ub in ub_values:
        if ub < 1:
            raise ValueError(f"ub values must be >= 1, got {ub}")
        start = time.perf_counter()
        try:
            res = max_clique_exact(
                g, SearchBounds(ub=ub, time_limit=time_limit), threads=threads
            )
        except Exception as exc:
            rows.append(SweepRow(ub, time.perf_counter() - start, None, repr(exc)))
            continue
        error = "time_limit" if res.timed_out else ""
        rows.append(SweepRow(ub, res.wall_time, res.size, error))
    return rows


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _ub_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one ub value")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("every ub value must be >= 1")
    return values


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1, not 2.

    Status 2 is reserved for input files that fail to parse.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cliquetools",
        description="Exact and heuristic maximum cliques, k-core bounds, "
        "and largest temporal strong components.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("path", type=Path, help="input edge list")
    common.add_argument(
        "--threads",
        type=_positive_int,
        default=os.environ.get(THREADS_ENV, 1),
        help=f"solver worker threads (default 1, or ${THREADS_ENV})",
    )
    common.add_argument(
        "--time-limit",
        type=float,
        default=os.environ.get(TIME_LIMIT_ENV, DEFAULT_TIME_LIMIT),
        metavar="S",
        help="wall-clock budget in seconds, <= 0 for none "
        f"(default {DEFAULT_TIME_LIMIT:.0f}, or ${TIME_LIMIT_ENV})",
    )
    common.add_argument("--seed", type=int, default=None, help="seed for generated fixtures")
    common.add_argument("--out", type=Path, default=None, help="write output to this file")

    static = _Parser(add_help=False)
    static.add_argument("--directed", action="store_true", help="input lists directed edges")
    static.add_argument(
        "--reciprocal",
        action="store_true",
        help="keep only reciprocated pairs of a directed input as undirected edges",
    )
    static.add_argument(
        "--no-lcc",
        action="store_true",
        help="analyze the whole graph instead of its largest connected component",
    )
    static.add_argument(
        "--format",
        choices=("edges", "temporal"),
        default="edges",
        dest="fmt",
        help="'temporal' reads timestamped contacts and aggregates them to a static graph",
    )

    p_clique = sub.add_parser(
        "clique",
        parents=[common, static],
        help="maximum clique of a static graph",
    )
    p_clique.add_argument("--lb", type=_nonnegative_int, default=0, help="known lower bound")
    p_clique.add_argument(
        "--ub", type=_positive_int, default=None, help="stop as soon as a clique this big is found"
    )
    p_clique.add_argument(
        "--heuristic", action="store_true", help="greedy search only, skip the exact solver"
    )

    p_stats = sub.add_parser(
        "stats",
        parents=[common, static],
        help="summary statistics row (CSV)",
    )
    p_stats.add_argument(
        "--with-clique",
        action="store_true",
        help="also solve for the clique number to fill the omega and gamma_K columns",
    )
    p_stats.add_argument("--pretty", action="store_true", help="aligned table instead of CSV")

    p_kcore = sub.add_parser(
        "kcore",
        parents=[common, static],
        help="core decomposition and degeneracy",
    )
    del p_kcore

    p_tscc = sub.add_parser(
        "tscc",
        parents=[common],
        help="largest temporal strong component of timestamped contacts",
    )
    p_tscc.add_argument(
        "--directed", action="store_true", help="contacts are one-way (default: both directions)"
    )
    p_tscc.add_argument("--lb", type=_nonnegative_int, default=0, help="known lower bound")
    p_tscc.add_argument(
        "--ub", type=_positive_int, default=None, help="stop as soon as a component this big is found"
    )
    p_tscc.add_argument(
        "--emit-reach",
        type=Path,
        default=None,
        metavar="FILE",
        help="write the strong reachability graph as an edge list (feed it back to clique/stats)",
    )
    p_tscc.add_argument(
        "--reach-cap-mb",
        type=_positive_int,
        default=DEFAULT_REACH_CAP_MB,
        metavar="MB",
        help="warn when the reachability bitsets would exceed this size "
        f"(default {DEFAULT_REACH_CAP_MB})",
    )

    p_sweep = sub.add_parser(
        "ub-sweep",
        aliases=["reach-sweep"],
        parents=[common, static],
        help="one exact run per upper bound, CSV of (ub, wall time, size)",
    )
    p_sweep.add_argument(
        "--ubs",
        type=_ub_list,
        required=True,
        metavar="N,N,...",
        help="comma-separated upper bounds, one solver run each",
    )
    p_sweep.add_argument("--pretty", action="store_true", help="aligned table instead of CSV")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Resolve a parsed namespace into a validated RunConfig."""
    time_limit = args.time_limit if args.time_limit and args.time_limit > 0 else None
    bounds = SearchBounds(
        lb=getattr(args, "lb", 0),
        ub=getattr(args, "ub", None),
        time_limit=time_limit,
    )
    subcommand = args.subcommand
    if subcommand == "reach-sweep":
        subcommand = "ub-sweep"
    return RunConfig(
        subcommand=subcommand,
        path=args.path,
        fmt=getattr(args, "fmt", "temporal" if subcommand == "tscc" else "edges"),
        directed=getattr(args, "directed", False),
        reciprocal=getattr(args, "reciprocal", False),
        keep_components=getattr(args, "no_lcc", False),
        bounds=bounds,
        threads=args.threads,
        out=args.out,
        seed=args.seed,
        pretty=getattr(args, "pretty", False),
        heuristic_only=getattr(args, "heuristic", False),
        with_clique=getattr(args, "with_clique", False),
        emit_reach=getattr(args, "emit_reach", None),
        ub_values=getattr(args, "ubs", ()),
        reach_cap_mb=getattr(args, "reach_cap_mb", DEFAULT_REACH_CAP_MB),
    )


def _fnum(x: float) -> str:
    return f"{x:.6g}"


def _fsec(x: float) -> str:
    return f"{x:.3f}"


def _load_static(config: RunConfig) -> Graph:
    if config.reciprocal and not config.directed:
        print("note: --reciprocal has no effect without --directed", file=sys.stderr)
    if config.fmt == "temporal":
        tg = parse_temporal_edge_list(config.path, directed=config.directed)
        edges = EdgeList(labels=tg.labels, src=tg.src, dst=tg.dst, directed=config.directed)
    else:
        edges = parse_edge_list(config.path, directed=config.directed)
    g = build_graph(edges, reciprocal_only=config.reciprocal)
    if not config.keep_components:
        g = largest_component(g)
    return g


def _sink(config: RunConfig) -> IO[str] | None:
    if config.out is None:
        return None
    return open(config.out, "w", encoding="utf-8")


def _emit(line: str, sink: IO[str] | None) -> None:
    if sink is None:
        print(line)
    else:
        print(line, file=sink)


def _write_witness(g: Graph, result: CliqueResult, config: RunConfig) -> None:
    labels = [g.labels[v] for v in result.vertices]
    if config.out is not None:
        with open(config.out, "w", encoding="utf-8") as handle:
            for label in labels:
                handle.write(label + "\n")
        return
    print("witness:")
    for label in labels:
        print(label)


def _run_clique(config: RunConfig) -> int:
    g = _load_static(config)
    heur_start = time.perf_counter()
    heur = max_clique_heuristic(g, threads=config.threads) if g.n else None
    heur_seconds = time.perf_counter() - heur_start

    if config.heuristic_only:
        result = heur if heur is not None else CliqueResult((), 0, False, 0, 0.0)
        search_seconds = None
    else:
        result = max_clique_exact(g, bounds=config.bounds, threads=config.threads)
        search_seconds = result.wall_time

    print(f"graph: {config.path.stem}")
    print(f"n: {g.n}")
    print(f"m: {g.m}")
    print(f"backend: {backend_name()}")
    print(f"threads: {config.threads}")
    if heur is not None:
        print(f"heuristic_size: {heur.size}")
    print(f"size: {result.size}")
    print(f"exact: {str(result.exact).lower()}")
    print(f"hit_ub: {str(result.hit_ub).lower()}")
    print(f"timed_out: {str(result.timed_out).lower()}")
    print(f"steps: {result.steps}")
    print(f"heuristic_seconds: {_fsec(heur_seconds)}")
    if search_seconds is not None:
        print(f"search_seconds: {_fsec(search_seconds)}")
    _write_witness(g, result, config)
    return EXIT_TIME_LIMIT if result.timed_out else EXIT_OK


def _stats_row(name: str, s: GraphStats) -> str:
    cells = [
        name,
        str(s.n),
        str(s.m),
        str(s.d_max),
        _fnum(s.d_avg),
        _fnum(s.mean_cc),
        str(s.T),
        _fnum(s.T_avg),
        str(s.sqrt_2T),
        str(s.K),
        "" if s.omega is None else str(s.omega),
        "" if s.gamma_K is None else _fnum(s.gamma_K),
    ]
    return ",".join(cells)


def _print_stats(name: str, s: GraphStats, config: RunConfig, sink: IO[str] | None) -> None:
    if config.pretty:
        names = STATS_HEADER.split(",")
        values = _stats_row(name, s).split(",")
        width = max(len(k) for k in names)
        for key, value in zip(names, values):
            _emit(f"{key:<{width}}  {value if value else '-'}", sink)
    else:
        _emit(STATS_HEADER, sink)
        _emit(_stats_row(name, s), sink)


def _run_stats(config: RunConfig) -> int:
    g = _load_static(config)
    start = time.perf_counter()
    row = stats(g)
    stats_seconds = time.perf_counter() - start

    status = EXIT_OK
    clique_seconds = None
    if config.with_clique:
        if g.n == 0:
            row = dataclasses.replace(row, omega=0, gamma_K=0.0)
            clique_seconds = 0.0
        else:
            res = max_clique_exact(g, bounds=config.bounds, threads=config.threads)
            gamma = kcore_recall(g, res.vertices) if res.vertices else 0.0
            row = dataclasses.replace(row, omega=res.size, gamma_K=gamma)
            clique_seconds = res.wall_time
            if res.timed_out:
                status = EXIT_TIME_LIMIT

    sink = _sink(config)
    try:
        _print_stats(config.path.stem, row, config, sink)
        prefix = "" if config.pretty else "# "
        _emit(f"{prefix}stats_seconds: {_fsec(stats_seconds)}", sink)
        if clique_seconds is not None:
            _emit(f"{prefix}clique_seconds: {_fsec(clique_seconds)}", sink)
            if status == EXIT_TIME_LIMIT:
                _emit(f"{prefix}omega_exact: false", sink)
    finally:
        if sink is not None:
            sink.close()
    return status


def _run_kcore(config: RunConfig) -> int:
    g = _load_static(config)
    start = time.perf_counter()
    decomp = core_decomposition(g)
    peel_seconds = time.perf_counter() - start

    print(f"graph: {config.path.stem}")
    print(f"n: {g.n}")
    print(f"m: {g.m}")
    print(f"degeneracy: {decomp.degeneracy}")
    print(f"max_core_size: {len(decomp.max_core_vertices)}")
    print(f"peel_seconds: {_fsec(peel_seconds)}")
    if config.out is not None:
        with open(config.out, "w", encoding="utf-8") as handle:
            for v in range(g.n):
                handle.write(f"{g.labels[v]} {int(decomp.core_number[v])}\n")
    return EXIT_OK


def _run_tscc(config: RunConfig) -> int:
    if not config.directed:
        print(
            "note: contacts treated as active in both directions; pass --directed for one-way edges",
            file=sys.stderr,
        )
    tg = parse_temporal_edge_list(config.path, directed=config.directed)

    words_per_row = (tg.n + 63) // 64
    reach_bytes = tg.n * words_per_row * 8
    if reach_bytes > config.reach_cap_mb * 2**20:
        print(
            f"warning: reachability bitsets need ~{reach_bytes / 2**20:.0f} MB "
            f"for n={tg.n}, above the {config.reach_cap_mb} MB cap",
            file=sys.stderr,
        )

    start = time.perf_counter()
    rg = strong_reachability(reach(tg))
    reach_seconds = time.perf_counter() - start

    if config.emit_reach is not None:
        with open(config.emit_reach, "w", encoding="utf-8") as handle:
            for u, v in rg.edge_pairs():
                handle.write(f"{rg.labels[u]} {rg.labels[v]}\n")

    result = max_clique_exact(rg, bounds=config.bounds, threads=config.threads)
    reach_row = stats(rg)

    print(f"graph: {config.path.stem}")
    print(f"n: {tg.n}")
    print(f"contacts: {tg.n_edges}")
    print(f"backend: {backend_name()}")
    print(f"threads: {config.threads}")
    print(f"reach_vertices: {rg.n}")
    print(f"reach_edges: {rg.m}")
    print(f"reach_K: {reach_row.K}")
    print(f"tscc_size: {result.size}")
    print(f"exact: {str(result.exact).lower()}")
    print(f"hit_ub: {str(result.hit_ub).lower()}")
    print(f"timed_out: {str(result.timed_out).lower()}")
    print(f"steps: {result.steps}")
    print(f"reach_seconds: {_fsec(reach_seconds)}")
    print(f"search_seconds: {_fsec(result.wall_time)}")
    _write_witness(rg, result, config)
    return EXIT_TIME_LIMIT if result.timed_out else EXIT_OK


def _run_ub_sweep(config: RunConfig) -> int:
    g = _load_static(config)
    rows = ub_sweep(
        g, config.ub_values, threads=config.threads, time_limit=config.bounds.time_limit
    )
    sink = _sink(config)
    try:
        if config.pretty:
            _emit(f"{'ub':>6}  {'wall_seconds':>12}  {'size':>6}  error", sink)
            for row in rows:
                size = "-" if row.size is None else str(row.size)
                _emit(
                    f"{row.ub:>6}  {_fsec(row.wall_seconds):>12}  {size:>6}  {row.error or '-'}",
                    sink,
                )
        else:
            _emit(SWEEP_HEADER, sink)
            for row in rows:
                size = "" if row.size is None else str(row.size)
                _emit(f"{row.ub},{_fsec(row.wall_seconds)},{size},{row.error}", sink)
    finally:
        if sink is not None:
            sink.close()
    return EXIT_OK


def run(config: RunConfig) -> int:
    """Execute one resolved configuration; returns the process exit status."""
    runner = {
        "clique": _run_clique,
        "stats": _run_stats,
        "kcore": _run_kcore,
        "tscc": _run_tscc,
        "ub-sweep": _run_ub_sweep,
    }[config.subcommand]
    return runner(config)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        print(f"cliquetools: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return run(config)
    except ParseError as exc:
        print(f"cliquetools: error: {config.path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cliquetools: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
