"""Main entry point."""

import argparse
import asyncio
import logging
import sys
from contextlib import contextmanager
from typing import IO, Iterator

import yaml
from tqdm import tqdm

from src.analysis import (
    Direction,
    ScanEvent,
    ScanManager,
    communicability_localization,
    correlations_report,
    find_candidates,
    rank_by_group,
    rank_records,
    read_records_csv,
    sweep,
)
from src.analysis.records import METRIC_FIELDS
from src.config import AnalysisConfig, load_config
from src.entropy import line_entropy_tensor_check, walk_entropy_tensor_check
from src.errors import Graph6Error, SpectralError, WalkEntropyError
from src.graphs import enumerate_graphs, parse_graph6, write_graph6
from src.regularity import (
    classify,
    is_edge_walk_regular,
    is_walk_regular,
    line_walk_regular_tensor_check,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NUMERICAL = 3

logger = logging.getLogger("walk-entropy")


class UsageError(Exception):
    """Bad command line."""


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise UsageError(message)


@contextmanager
def open_input(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as f:
            yield f


@contextmanager
def open_output(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            yield f


def run_scan(config: AnalysisConfig, input_path: str | None, show_progress: bool) -> ScanManager:
    """Run a scan with a progress bar on stderr."""
    bar: tqdm | None = None

    def on_event(event: ScanEvent) -> None:
        nonlocal bar
        if event.type == "start" and show_progress:
            bar = tqdm(total=event.total, unit="graph", file=sys.stderr)
        elif event.type in ("record", "numerical_error") and bar is not None:
            bar.update(1)
        elif event.type == "parse_error":
            logger.warning("line %d: %s", event.line, event.content)
        elif event.type == "numerical_error":
            logger.warning("line %d (%s): %s", event.line, event.graph6, event.content)
        elif event.type == "end" and bar is not None:
            bar.close()

    manager = ScanManager(config, on_event=on_event)
    with open_input(input_path) as f:
        asyncio.run(manager.run(f))
    if manager.summary.skipped:
        logger.info("Skipped %d disconnected graphs", manager.summary.skipped)
    return manager


def scan_exit_code(manager: ScanManager) -> int:
    if manager.summary.parse_errors:
        return EXIT_PARSE
    if manager.summary.numerical_errors:
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_scan(args: argparse.Namespace, config: AnalysisConfig) -> int:
    manager = run_scan(config, args.input, config.scan.progress)
    with open_output(args.output) as out:
        manager.save(out)
    return scan_exit_code(manager)


def cmd_sweep(args: argparse.Namespace, config: AnalysisConfig) -> int:
    g = parse_graph6(args.graph)
    s = config.sweep
    result = sweep(g, s.beta_min, s.beta_max, s.points, s.log_spacing, s.entropy)
    with open_output(args.output) as out:
        result.to_frame().to_csv(
            out, index=False, float_format=f"%.{config.scan.float_digits}g", lineterminator="\n"
        )
    spacing = "ratio" if result.log_spacing else "step"
    summary = f"shape={result.shape.value} grid {spacing}={result.resolution:.6g}"
    if result.argmin_beta is not None:
        summary += f" argmin_beta={result.argmin_beta:.6g}"
    print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, config: AnalysisConfig) -> int:
    with open_output(args.output) as out:
        for g in enumerate_graphs(args.n, connected=args.connected):
            out.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace, config: AnalysisConfig) -> int:
    manager = run_scan(config, args.input, config.scan.progress)
    records = manager.summary.records
    direction = Direction.MAX if args.max else Direction.MIN
    top = config.extremal.top
    with open_output(args.output) as out:
        out.write("group,rank,graph6,n,m,value\n")
        if args.group_by:
            groups = rank_by_group(records, args.metric, direction, top, args.group_by)
        else:
            groups = {"": rank_records(records, args.metric, direction, top)}
        for key, entries in groups.items():
            for rank, e in enumerate(entries, start=1):
                out.write(f"{key},{rank},{e.graph6},{e.n},{e.m},{e.value:.12g}\n")
    return scan_exit_code(manager)


def cmd_corr(args: argparse.Namespace, config: AnalysisConfig) -> int:
    with open_input(args.input) as f:
        report = correlations_report(read_records_csv(f))
    fmt = f"%.{config.scan.float_digits}g"
    with open_output(args.output) as out:
        if args.matrix:
            report.matrix.to_csv(out, float_format=fmt, lineterminator="\n")
        else:
            report.named_frame().to_csv(out, index=False, float_format=fmt, lineterminator="\n")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, config: AnalysisConfig) -> int:
    g = parse_graph6(args.graph)
    print(classify(g).value)
    if args.verbose_flags:
        print(f"walk_regular={is_walk_regular(g)}")
        if g.m:
            print(f"edge_walk_regular={is_edge_walk_regular(g)}")
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace, config: AnalysisConfig) -> int:
    manager = run_scan(config, args.input, config.scan.progress)
    candidates = find_candidates(manager.summary.records, config.conjecture.tol)
    with open_output(args.output) as out:
        out.write("graph6,n,class,s_walk,gap\n")
        for c in candidates:
            out.write(f"{c.graph6},{c.n},{c.graph_class.value},{c.s_walk:.12g},{c.gap:.6g}\n")
    total = len(manager.summary.records)
    print(f"{len(candidates)} candidates among {total} graphs", file=sys.stderr)
    return scan_exit_code(manager)


def cmd_localize(args: argparse.Namespace, config: AnalysisConfig) -> int:
    report = communicability_localization(parse_graph6(args.graph), config.entropy.beta)
    with open_output(args.output) as out:
        out.write("node,degree,G_pp\n")
        for node, (d, value) in enumerate(zip(report.degrees, report.diagonal)):
            out.write(f"{node},{d},{value:.12g}\n")
    summary = f"ratio={report.ratio:.6g}"
    if report.group_ratio is not None:
        summary += f" group_ratio={report.group_ratio:.6g}"
    print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_tensor(args: argparse.Namespace, config: AnalysisConfig) -> int:
    g, h = parse_graph6(args.g), parse_graph6(args.h)
    beta = config.entropy.beta
    node = walk_entropy_tensor_check(g, h, beta)
    print(f"S(g x h)={node.product_entropy:.12g}")
    print(f"S(g)+S(h)={node.sum_entropy:.12g}")
    print(f"difference={node.difference:.3e}")
    print(f"walk_regular g={node.g_walk_regular} h={node.h_walk_regular} "
          f"product={node.product_walk_regular}")
    if g.m and h.m:
        line = line_walk_regular_tensor_check(g, h)
        print(f"edge_walk_regular g={line.g_edge_walk_regular} h={line.h_edge_walk_regular} "
              f"product={line.product_edge_walk_regular} "
              f"line_of_product={line.line_of_product_walk_regular}")
        line_entropy = line_entropy_tensor_check(g, h, beta)
        print(f"S(L(L(g) x L(h)))={line_entropy.line_of_product_entropy:.12g}")
        print(f"S(L(g))+S(L(h))+1={line_entropy.predicted:.12g}")
        print(f"S(L(g) x L(h))={line_entropy.product_entropy:.12g}")
    return EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="walk-entropy", description="Walk entropies of graphs")
    parser.add_argument("--config", help="Path to the YAML configuration file")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--quiet", action="store_true", help="No progress bar")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("scan", help="Compute all metrics for a graph6 corpus (CSV)")
    p.add_argument("--input", help="graph6 file (default stdin)")
    p.add_argument("--output", help="CSV file (default stdout)")
    p.add_argument("--beta", type=float, help="Inverse temperature")
    p.add_argument("--vn-normalization", choices=["trace", "raw", "normalized"],
                   help="Von Neumann density matrix")
    p.add_argument("--workers", type=int, help="Graphs processed concurrently")
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("sweep", help="Entropy over an inverse-temperature grid (CSV)")
    p.add_argument("--graph", required=True, help="graph6 string")
    p.add_argument("--beta-min", type=float)
    p.add_argument("--beta-max", type=float)
    p.add_argument("--points", type=int)
    p.add_argument("--linear", action="store_true", help="Linear instead of log spacing")
    p.add_argument("--entropy", choices=["node", "edge"])
    p.add_argument("--output", help="CSV file (default stdout)")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("enumerate", help="All graphs on n nodes up to isomorphism (graph6)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true", help="Connected graphs only")
    p.add_argument("--output", help="graph6 file (default stdout)")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("extremal", help="Graphs minimizing or maximizing a metric")
    p.add_argument("--input", help="graph6 file (default stdin)")
    p.add_argument("--metric", required=True, choices=list(METRIC_FIELDS))
    direction = p.add_mutually_exclusive_group()
    direction.add_argument("--min", action="store_true", help="Smallest values first (default)")
    direction.add_argument("--max", action="store_true", help="Largest values first")
    p.add_argument("--top", type=int)
    p.add_argument("--group-by", choices=["n", "m"], help="Rank within groups")
    p.add_argument("--beta", type=float)
    p.add_argument("--output", help="CSV file (default stdout)")
    p.set_defaults(handler=cmd_extremal)

    p = sub.add_parser("corr", help="Pearson correlations of a scan CSV")
    p.add_argument("--input", help="CSV from scan (default stdin)")
    p.add_argument("--matrix", action="store_true", help="Full metric-metric matrix")
    p.add_argument("--output", help="CSV file (default stdout)")
    p.set_defaults(handler=cmd_corr)

    p = sub.add_parser("classify", help="WalkRegular, RegularNotWalkRegular or NonRegular")
    p.add_argument("--graph", required=True, help="graph6 string")
    p.add_argument("--flags", dest="verbose_flags", action="store_true",
                   help="Also print the individual regularity tests")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("conjecture", help="Maximal walk entropy without walk regularity")
    p.add_argument("--input", help="graph6 file (default stdin)")
    p.add_argument("--beta", type=float)
    p.add_argument("--tol", type=float)
    p.add_argument("--output", help="CSV file (default stdout)")
    p.set_defaults(handler=cmd_conjecture)

    p = sub.add_parser("localize", help="Diagonal communicabilities per node")
    p.add_argument("--graph", required=True, help="graph6 string")
    p.add_argument("--beta", type=float)
    p.add_argument("--output", help="CSV file (default stdout)")
    p.set_defaults(handler=cmd_localize)

    p = sub.add_parser("tensor", help="Walk entropy and regularity of tensor products")
    p.add_argument("--g", required=True, help="graph6 string of the first factor")
    p.add_argument("--h", required=True, help="graph6 string of the second factor")
    p.add_argument("--beta", type=float)
    p.set_defaults(handler=cmd_tensor)
    return parser


def apply_overrides(config: AnalysisConfig, args: argparse.Namespace) -> AnalysisConfig:
    """Command-line flags take precedence over the configuration file."""
    data = config.model_dump()
    overrides = {
        ("entropy", "beta"): getattr(args, "beta", None),
        ("entropy", "vn_normalization"): getattr(args, "vn_normalization", None),
        ("scan", "workers"): getattr(args, "workers", None),
        ("sweep", "beta_min"): getattr(args, "beta_min", None),
        ("sweep", "beta_max"): getattr(args, "beta_max", None),
        ("sweep", "points"): getattr(args, "points", None),
        ("sweep", "entropy"): getattr(args, "entropy", None),
        ("extremal", "top"): getattr(args, "top", None),
        ("conjecture", "tol"): getattr(args, "tol", None),
    }
    for (section, key), value in overrides.items():
        if value is not None:
            data[section][key] = value
    if getattr(args, "linear", False):
        data["sweep"]["log_spacing"] = False
    if args.quiet:
        data["scan"]["progress"] = False
    return AnalysisConfig(**data)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )

    try:
        config = load_config(args.config) if args.config else AnalysisConfig()
        config = apply_overrides(config, args)
        return args.handler(args, config)
    except Graph6Error as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (SpectralError, ArithmeticError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (WalkEntropyError, ValueError, OSError, yaml.YAMLError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
