"""Raman composite gates command line.

Run with: raman-cp <command> [options]   (or: python main.py <command> ...)

Every numeric option accepts ``pi`` expressions such as ``2pi/3`` or ``pi/sqrt(2)``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from pydantic import ValidationError

from src.components.common import CommandResult, Status, load_entry, parse_shape
from src.components.reports import cmd_catalog, cmd_oracle_check, cmd_order, cmd_propagate
from src.components.sweep import cmd_sweep
from src.config import DEFAULT_EPSILON_RANGE, DEFAULT_STEPS, LOG_LEVEL
from src.errors import RamanCPError
from src.models.target import Alignment
from src.physics.oracle import IntegratorConfig, Method
from src.utils.analysis import Engine
from src.utils.expressions import parse_list, parse_number, parse_range

logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _number(text: str) -> float:
    try:
        return parse_number(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _numbers(text: str) -> list[float]:
    try:
        return parse_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _range(text: str) -> tuple[float, float, float]:
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors still end stdout with a SUMMARY line."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        command = self.prog.partition(" ")[2] or "none"
        result = CommandResult(
            command=command, status=Status.ERROR, fields={"error": "ArgumentError"}
        )
        sys.stdout.write(result.render())
        self.exit(2)


def _add_sequence_options(parser: argparse.ArgumentParser, *, engine: bool = True) -> None:
    parser.add_argument(
        "--sequence", required=True, help="catalog label (see 'catalog') or a .json sequence file"
    )
    parser.add_argument("--gate", help="target override: x, hadamard, rotation:<θ>, phase:<η>")
    parser.add_argument(
        "--align", choices=[a.value for a in Alignment], help="override the default alignment"
    )
    parser.add_argument("--eta", type=_number, help="phase-gate phase η for F labels (π/4)")
    parser.add_argument("--shape", help="rectangular (default), gaussian or gaussian:<width>")
    if engine:
        parser.add_argument(
            "--engine", choices=[e.value for e in Engine], default=Engine.ANALYTIC.value
        )


def _add_integrator_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--steps", type=int, default=DEFAULT_STEPS, help="oracle steps per pulse (%(default)s)"
    )
    parser.add_argument(
        "--method", choices=[m.value for m in Method], default=Method.RK4.value, help="oracle rule"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="raman-cp",
        description="Composite Raman pulse sequences in three-level Λ systems: catalog, "
        "propagators, infidelity sweeps and integrator cross-checks.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=LOG_LEVEL,
        help="logging level (%(default)s)",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("catalog", help="list catalog sequences")
    p.add_argument("--filter", default="", help="case-insensitive label substring")
    p.add_argument("--delta-t", type=_number, default=0.0, help="ΔT for detuned variants")
    p.add_argument("--shape", help="rectangular (default), gaussian or gaussian:<width>")

    p = commands.add_parser("propagate", help="print the propagator and its infidelity")
    _add_sequence_options(p)
    _add_integrator_options(p)
    p.add_argument("--epsilon", type=_number, default=0.0, help="relative pulse-area error")
    p.add_argument("--delta-t", type=_number, default=0.0, help="detuning × pulse duration")

    p = commands.add_parser("sweep", help="infidelity over an ε grid, written as CSV")
    _add_sequence_options(p)
    _add_integrator_options(p)
    p.add_argument(
        "--epsilon-range",
        type=_range,
        default=DEFAULT_EPSILON_RANGE,
        help="a:b:step, use --epsilon-range=a:b:step when a is negative "
        f"(default {':'.join(map(str, DEFAULT_EPSILON_RANGE))})",
    )
    p.add_argument(
        "--delta-t",
        type=_numbers,
        default=[0.0],
        help="comma-separated ΔT values; -delta variants are built for the largest |ΔT|",
    )
    p.add_argument("--out", type=Path, help="CSV path (stdout when omitted)")
    p.add_argument("--plot-script", type=Path, help="write a standalone plot script")
    p.add_argument("--plot-html", type=Path, help="write the figure as HTML")
    p.add_argument("--threshold", type=_number, help="report the half-width where D < threshold")
    p.add_argument("--workers", type=int, help="sweep worker threads")

    p = commands.add_parser("oracle-check", help="closed form vs integrated propagator")
    _add_sequence_options(p, engine=False)
    _add_integrator_options(p)
    p.add_argument("--epsilon", type=_number, default=0.0)
    p.add_argument("--delta-t", type=_number, default=0.0)

    p = commands.add_parser("order", help="log-log robustness slope")
    _add_sequence_options(p)
    p.add_argument("--n", type=int, help="expected composite order N (slope 2N)")
    return parser


def configure_logging(level: str, verbose: bool = False) -> None:
    logging.basicConfig(
        format=_LOG_FORMAT,
        level=logging.DEBUG if verbose else level,
        stream=sys.stderr,
        force=True,
    )


def _design_delta_t(args: argparse.Namespace) -> float:
    value = getattr(args, "delta_t", 0.0)
    if isinstance(value, list):
        return max(value, key=abs, default=0.0)
    return float(value)


def run(args: argparse.Namespace) -> CommandResult:
    """Dispatch parsed arguments to the command implementations."""
    shape = parse_shape(args.shape) if args.shape else None
    if args.command == "catalog":
        return cmd_catalog(name_filter=args.filter, delta_t=args.delta_t, shape=shape)

    entry = load_entry(
        args.sequence,
        gate=args.gate,
        align=Alignment(args.align) if args.align else None,
        delta_t=_design_delta_t(args),
        eta=args.eta,
        shape=shape,
    )
    engine = Engine(getattr(args, "engine", Engine.ANALYTIC.value))
    cfg = None
    if hasattr(args, "steps"):
        cfg = IntegratorConfig(steps_per_pulse=args.steps, method=Method(args.method))

    match args.command:
        case "propagate":
            return cmd_propagate(
                entry, epsilon=args.epsilon, delta_t=args.delta_t, engine=engine, cfg=cfg
            )
        case "sweep":
            return cmd_sweep(
                entry,
                epsilon_range=args.epsilon_range,
                delta_ts=args.delta_t,
                engine=engine,
                cfg=cfg,
                out=args.out,
                plot_script=args.plot_script,
                plot_html=args.plot_html,
                threshold=args.threshold,
                workers=args.workers,
            )
        case "oracle-check":
            return cmd_oracle_check(entry, epsilon=args.epsilon, delta_t=args.delta_t, cfg=cfg)
        case "order":
            return cmd_order(entry, engine=engine, expected_n=args.n)
    raise ValueError(f"Unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns 0 when every requested check passes, 1 on failure, 2 on error."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level, args.verbose)
    try:
        result = run(args)
    except (RamanCPError, ValidationError, ValueError, OSError) as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        result = CommandResult(
            command=args.command, status=Status.ERROR, fields={"error": type(exc).__name__}
        )
    sys.stdout.write(result.render())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
