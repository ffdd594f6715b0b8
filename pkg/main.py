#!/usr/bin/env python3
"""
Maximal Planar Graph Toolkit - Main Entry Point

Command-line interface for generating maximal planar graphs, computing
chromatic polynomials and 4-partitions, wheel operations, recursive (FWF)
graphs, and the verification audits.
"""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core.models.config import LogLevel, RunConfig
from core.models.errors import BadFormat, ConfigurationError, PlanarGraphError
from core.models.plane_graph import PlaneGraph
from core.models.report import ReportFormat
from core.models.workflow import RunStatus
from core.orchestration.verification_orchestrator import (
    PHASE_SELECTIONS,
    SELECTION_ALIASES,
    VerificationOrchestrator,
    resolve_selection,
)
from core.services.chrompoly_service import ChromaticPolynomialService
from core.services.coloring_service import ColoringService
from core.services.config_service import ConfigService
from core.services.corpus_service import STRATEGIES, CorpusService
from core.services.fwf_service import FwfService
from core.services.report_service import ReportService
from core.services.storage_service import StorageService
from core.services.triangulation_service import TriangulationService
from core.services.verification_service import VerificationService
from core.services.wheel_service import WheelService
from core.utils.constants import EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE, MIN_DEGREE_CHOICES
from core.utils.logger import LOG_FORMAT, configure_service_logs
from infrastructure.storage import graph_codecs


def setup_logging(verbose: bool = False, level: LogLevel = LogLevel.INFO) -> None:
    """Setup logging configuration."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, level.value),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


class UsageError(Exception):
    """Bad command-line usage detected after parsing."""


class CliArgumentParser(argparse.ArgumentParser):
    """Argument parser that exits with the usage code."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class Toolkit:
    """Services wired from one run configuration."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.storage = StorageService(
            base_directory=config.output_dir,
            corpus_directory=config.corpus_dir,
            golden_directory=config.golden_dir,
        )
        self.triangulations = TriangulationService()
        self.colorings = ColoringService(self.triangulations)
        self.polys = ChromaticPolynomialService(
            poly_order_cap=config.limits.poly_order_cap, precision_bits=config.precision_bits
        )
        self.wheels = WheelService(self.triangulations)
        self.fwf = FwfService(self.triangulations, self.colorings)
        self.corpus = CorpusService(
            self.triangulations, self.storage, workers=config.workers, max_order=config.limits.max_order
        )

    def verification(self) -> VerificationOrchestrator:
        service = VerificationService(
            self.corpus,
            self.storage,
            coloring_service=self.colorings,
            chrompoly_service=self.polys,
            wheel_service=self.wheels,
            fwf_service=self.fwf,
            limits=self.config.limits,
            seed=self.config.seed,
        )
        reports = ReportService(self.storage, suppress_timestamp=self.config.suppress_timestamp)
        return VerificationOrchestrator(self.config, self.corpus, service, reports)

    def load_graph(self, source: str) -> PlaneGraph:
        """A graph6 file (first graph), a JSON adjacency file, or an inline graph6 string."""
        path = Path(source)
        if path.is_file():
            text = path.read_text(encoding="ascii", errors="replace")
            if path.suffix == ".json":
                try:
                    return self.triangulations.from_json(json.loads(text))
                except json.JSONDecodeError as e:
                    raise BadFormat(f"{source}: {e}") from e
            lines = graph_codecs.read_graph6_lines(text)
            if not lines:
                raise BadFormat(f"{source} holds no graph6 line")
            return self.triangulations.decode_graph6(lines[0])
        return self.triangulations.decode_graph6(source)


def emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def parse_int_list(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"Expected comma-separated integers, got {text!r}")


# Command handlers

async def run_enumerate(toolkit: Toolkit, args: argparse.Namespace) -> int:
    corpus_slice = await toolkit.corpus.build_slice(args.order, args.min_degree, args.strategy)
    sequences: Dict[str, int] = {}
    for graph in corpus_slice:
        sequences[graph.degree_string] = sequences.get(graph.degree_string, 0) + 1
    if args.output:
        lines = sorted(graph_codecs.encode_graph6(g) for g in corpus_slice)
        toolkit.storage.write_export(args.output, b"".join(line + b"\n" for line in lines))
    emit({
        "order": args.order,
        "min_degree": args.min_degree,
        "strategy": args.strategy,
        "count": len(corpus_slice),
        "degree_sequences": sequences,
    })
    return EXIT_OK


async def run_poly(toolkit: Toolkit, args: argparse.Namespace) -> int:
    graph = toolkit.load_graph(args.graph)
    polynomial = toolkit.polys.chromatic_polynomial(graph)
    payload: Dict[str, Any] = {
        "order": graph.order,
        "polynomial": str(polynomial),
        "coefficients": polynomial.to_json(),
    }
    if args.at is not None:
        constants = toolkit.polys.constants
        named = {"tau2": constants.tau_squared, "golden": constants.tau_sqrt5}
        if args.at in named:
            payload["value"] = str(polynomial(named[args.at]))
        else:
            try:
                payload["value"] = str(polynomial(int(args.at)))
            except ValueError:
                raise UsageError(f"--at expects an integer, 'tau2' or 'golden', got {args.at!r}")
        payload["at"] = args.at
    emit(payload)
    return EXIT_OK


async def run_partitions(toolkit: Toolkit, args: argparse.Namespace) -> int:
    graph = toolkit.load_graph(args.graph)
    partitions = toolkit.colorings.enumerate_partitions(graph, args.k)
    emit({
        "order": graph.order,
        "k": args.k,
        "count": len(partitions),
        "colorings": partitions.coloring_count(),
        "partitions": partitions.to_json(),
    })
    return EXIT_OK


async def run_unique(toolkit: Toolkit, args: argparse.Namespace) -> int:
    graph = toolkit.load_graph(args.graph)
    emit({
        "order": graph.order,
        "uniquely_4_colorable": toolkit.colorings.is_uniquely_colorable(graph, 4),
        "fwf": toolkit.fwf.is_fwf(graph) is not None,
    })
    return EXIT_OK


async def run_fwf(toolkit: Toolkit, args: argparse.Namespace) -> int:
    if args.fwf_command == "check":
        graph = toolkit.load_graph(args.graph)
        peeling = toolkit.fwf.is_fwf(graph)
        emit({
            "order": graph.order,
            "fwf": peeling is not None,
            "peeling": peeling,
            "two_two": toolkit.fwf.is_two_two(graph),
            "greedy_agrees": toolkit.fwf.peeling_agrees(graph),
        })
    elif args.fwf_command == "from-seq":
        graph, coloring = toolkit.fwf.fwf22_from_color_sequence(args.sequence)
        if args.export == "dot":
            labels = {v: f"{v + 1}:{args.sequence[v]}" for v in range(graph.order)}
            sys.stdout.write(graph_codecs.to_dot(graph, labels=labels))
        elif args.export == "graph6":
            print(graph_codecs.encode_graph6(graph).decode("ascii"))
        else:
            emit({
                "sequence": args.sequence,
                "graph6": graph_codecs.encode_graph6(graph).decode("ascii"),
                "coloring": coloring.to_dict(),
            })
    else:
        emit(toolkit.fwf.enumerate_fwf22(args.n).to_dict())
    return EXIT_OK


async def run_wheel(toolkit: Toolkit, args: argparse.Namespace) -> int:
    graph = toolkit.load_graph(args.graph)
    if args.wheel_command == "contract":
        result, step = toolkit.wheels.contract_wheel(graph, args.vertex, args.k)
        emit({"graph6": graph_codecs.encode_graph6(result).decode("ascii"), "step": step.to_dict()})
    elif args.wheel_command == "extend":
        result, step = toolkit.wheels.extend_wheel(graph, parse_int_list(args.site), args.k)
        emit({"graph6": graph_codecs.encode_graph6(result).decode("ascii"), "step": step.to_dict()})
    else:
        emit(toolkit.wheels.reduce_to_k3(graph).to_dict())
    return EXIT_OK


async def run_verify(toolkit: Toolkit, args: argparse.Namespace) -> int:
    orchestrator = toolkit.verification()
    selection = resolve_selection(args.selection)
    run_result, bundle = await orchestrator.run(selection)
    report_format = ReportFormat(args.format) if args.format else None
    path = await orchestrator.save(bundle, selection, report_format)
    print(f"{path} ({len(bundle.reports)} claims, mismatch_count {bundle.mismatch_count})")
    return EXIT_COMPUTATION if run_result.status == RunStatus.FAILED else EXIT_OK


async def run_export(toolkit: Toolkit, args: argparse.Namespace) -> int:
    graph = toolkit.load_graph(args.graph)
    if args.export_format == "dot":
        content = graph_codecs.to_dot(graph)
    elif args.export_format == "graph6":
        content = graph_codecs.encode_graph6(graph).decode("ascii") + "\n"
    else:
        content = graph_codecs.to_adjacency_json(graph) + "\n"
    if args.output:
        toolkit.storage.write_export(args.output, content)
    else:
        sys.stdout.write(content)
    return EXIT_OK


HANDLERS = {
    "enumerate": run_enumerate,
    "poly": run_poly,
    "partitions": run_partitions,
    "unique": run_unique,
    "fwf": run_fwf,
    "wheel": run_wheel,
    "verify": run_verify,
    "export": run_export,
}


def parse_arguments(argv: Optional[list] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = CliArgumentParser(
        description='Maximal planar graph toolkit - 4-colorings, chromatic polynomials and audits',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # All triangulations of order 10 with minimum degree 4
  python main.py enumerate --order 10 --min-degree 4

  # Chromatic polynomial of the octahedron, evaluated at tau^2
  python main.py poly octahedron.g6 --at tau2

  # (2,2)-FWF graph from a color sequence, as DOT
  python main.py fwf from-seq ygbrybgyg --export dot

  # Full audit, text report without timestamp
  python main.py verify all --format text --no-timestamp
        """
    )

    # Configuration options
    parser.add_argument('--config', default=None, help='Path to configuration file (default: config/default.yml)')
    parser.add_argument('--max-order', type=int, help='Corpus order cap')
    parser.add_argument('--workers', type=int, help='Worker processes for generation')
    parser.add_argument('--precision-bits', type=int, help='Precision of golden-ratio evaluations')
    parser.add_argument('--seed', type=int, help='Seed for sampled checks')
    parser.add_argument('--output-dir', help='Directory for checkpoints and reports')
    parser.add_argument('--no-timestamp', action='store_true', help='Omit the report timestamp')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose logging')

    commands = parser.add_subparsers(dest='command', required=True, parser_class=CliArgumentParser)

    enumerate_parser = commands.add_parser('enumerate', help='Generate all triangulations of one order')
    enumerate_parser.add_argument('--order', type=int, required=True)
    enumerate_parser.add_argument('--min-degree', type=int, default=3, choices=MIN_DEGREE_CHOICES)
    enumerate_parser.add_argument('--strategy', choices=STRATEGIES, default='operators')
    enumerate_parser.add_argument('--output', help='Write the slice as graph6 lines')

    poly_parser = commands.add_parser('poly', help='Chromatic polynomial of a graph')
    poly_parser.add_argument('graph')
    poly_parser.add_argument('--at', help="Evaluation point: integer, 'tau2' or 'golden'")

    partitions_parser = commands.add_parser('partitions', help='All k-partitions of a graph')
    partitions_parser.add_argument('graph')
    partitions_parser.add_argument('--k', type=int, default=4)

    unique_parser = commands.add_parser('unique', help='Unique 4-colorability test')
    unique_parser.add_argument('graph')

    fwf_parser = commands.add_parser('fwf', help='Recursive (FWF) graphs')
    fwf_commands = fwf_parser.add_subparsers(dest='fwf_command', required=True, parser_class=CliArgumentParser)
    fwf_check = fwf_commands.add_parser('check')
    fwf_check.add_argument('graph')
    fwf_seq = fwf_commands.add_parser('from-seq')
    fwf_seq.add_argument('sequence')
    fwf_seq.add_argument('--export', choices=['dot', 'graph6'])
    fwf_enum = fwf_commands.add_parser('enumerate22')
    fwf_enum.add_argument('n', type=int)

    wheel_parser = commands.add_parser('wheel', help='Wheel contraction and extension')
    wheel_commands = wheel_parser.add_subparsers(dest='wheel_command', required=True, parser_class=CliArgumentParser)
    wheel_contract = wheel_commands.add_parser('contract')
    wheel_contract.add_argument('graph')
    wheel_contract.add_argument('--vertex', type=int, required=True)
    wheel_contract.add_argument('--k', type=int, choices=[2, 3, 4, 5])
    wheel_extend = wheel_commands.add_parser('extend')
    wheel_extend.add_argument('graph')
    wheel_extend.add_argument('--site', required=True, help='Comma-separated site vertices')
    wheel_extend.add_argument('--k', type=int, required=True, choices=[2, 3, 4, 5])
    wheel_reduce = wheel_commands.add_parser('reduce')
    wheel_reduce.add_argument('graph')

    verify_parser = commands.add_parser('verify', help='Audit published counts, listings and theorems')
    verify_parser.add_argument('selection', choices=list(PHASE_SELECTIONS) + list(SELECTION_ALIASES))
    verify_parser.add_argument('--format', choices=[f.value for f in ReportFormat])

    export_parser = commands.add_parser('export', help='Write a graph as DOT, graph6 or JSON')
    export_parser.add_argument('export_format', choices=['dot', 'graph6', 'json'])
    export_parser.add_argument('graph')
    export_parser.add_argument('--output')

    return parser.parse_args(argv)


def apply_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    """CLI flags win over file and environment values."""
    config.subcommand = args.command
    if args.max_order is not None:
        config.limits.max_order = args.max_order
        for name in ("cross_check_order", "sweep_order", "monotonicity_order",
                     "partition_table_order", "oracle_order", "lemma_order"):
            setattr(config.limits, name, min(getattr(config.limits, name), args.max_order))
    if args.workers is not None:
        config.workers = args.workers
    if args.precision_bits is not None:
        config.precision_bits = args.precision_bits
    if args.seed is not None:
        config.seed = args.seed
    if args.output_dir is not None:
        config.output_dir = args.output_dir
    if args.no_timestamp:
        config.suppress_timestamp = True
    return config


async def main(argv: Optional[list] = None) -> int:
    """Main entry point."""
    args = parse_arguments(argv)
    setup_logging(args.verbose)
    logger = logging.getLogger(__name__)

    try:
        config_service = ConfigService()
        config = apply_overrides(await config_service.load_config(args.config), args)
        setup_logging(args.verbose, config.log_level)
        errors = config.validate()
        if errors:
            for error in errors:
                print(f"Configuration error: {error}", file=sys.stderr)
            return EXIT_USAGE
        configure_service_logs(config)
        return await HANDLERS[args.command](Toolkit(config), args)

    except UsageError as e:
        print(f"Usage error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigurationError as e:
        print(f"Configuration error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except PlanarGraphError as e:
        logger.debug("Computation failed", exc_info=True)
        print(f"Error: {type(e).__name__}: {str(e)}", file=sys.stderr)
        return EXIT_COMPUTATION
    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(asyncio.run(main()))
