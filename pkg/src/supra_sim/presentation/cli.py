"""Command-line interface: subcommands, global flags and exit codes.

Exit codes: 0 success, 1 runtime failure, 2 stability violation, 3 configuration error.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from pydantic import ValidationError

from ..application.use_cases.check_stability import CheckStabilityUseCase
from ..application.use_cases.radial_scan import RadialScanUseCase
from ..application.use_cases.run_simulation import RunSimulationUseCase
from ..application.use_cases.supra_sweep import SupraSweepUseCase
from ..application.use_cases.transmit_bits import TransmitBitsUseCase
from ..config import Settings
from ..domain.exceptions import ConfigError, SimulationError
from ..domain.models.reports import ExperimentResult
from ..domain.services.damping import peak_damping
from ..infrastructure.factories import create_writer
from ..infrastructure.persistence.csv_writer import write_series_csv
from ..infrastructure.persistence.snapshot import dump_slice_csv
from .schemas.config_doc import ConfigDoc, effective_config_json, load_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_UNSTABLE = 2
EXIT_CONFIG = 3

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as configuration errors."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise ConfigError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON run document")
    common.add_argument("--threads", type=int, help="worker processes for sweeps and scans")
    common.add_argument(
        "--strict", action="store_true", help="fail on a violated stability condition"
    )
    common.add_argument("--out", type=Path, help="output directory")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = _Parser(prog="supra-sim", description="Energy-consistent nonlinear wave simulator")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    commands.add_parser("check", parents=[common], help="evaluate the stability conditions")
    commands.add_parser("simulate", parents=[common], help="run one Cartesian simulation")
    commands.add_parser("sweep", parents=[common], help="amplitude sweep with jump detector")
    commands.add_parser("scan-radial", parents=[common], help="radial (omega, A) energy scan")
    commands.add_parser("transmit", parents=[common], help="transmit a bit sequence")

    dump = commands.add_parser("snapshot-dump", parents=[common], help="snapshot plane to CSV")
    dump.add_argument("snapshot", type=Path, help="NLW3 snapshot file")
    dump.add_argument("--axis", type=int, default=2, choices=(0, 1, 2))
    dump.add_argument("--index", type=int, default=None, help="layer along the axis")
    return parser


def configure_logging(settings: Settings, verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


def _require_config(args: argparse.Namespace) -> ConfigDoc:
    if args.config is None:
        raise ConfigError(f"{args.command} requires --config PATH")
    return load_config(args.config)


def _out_dir(args: argparse.Namespace, doc: ConfigDoc | None, settings: Settings) -> Path:
    if args.out is not None:
        return Path(args.out)
    if doc is not None and doc.output.dir is not None:
        return doc.output.dir
    return settings.output_dir


def _write_effective(out_dir: Path, doc: ConfigDoc) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "effective_config.json").write_text(effective_config_json(doc), encoding="utf-8")


def _write_result(result: ExperimentResult, out_dir: Path, doc: ConfigDoc) -> Path:
    path = create_writer().write_result(result, out_dir / doc.output.result_csv)
    meta = out_dir / (Path(doc.output.result_csv).stem + "_meta.json")
    meta.write_text(json.dumps(result.metadata, indent=2, default=str), encoding="utf-8")
    return path


def _cmd_check(args: argparse.Namespace, settings: Settings) -> int:
    doc = _require_config(args)
    radial = doc.radial_params() if doc.radial is not None else None
    reports = CheckStabilityUseCase().execute(
        doc.medium,
        doc.grid,
        doc.time.dt,
        radial_dr=radial.dr if radial is not None else None,
        radial_dt=doc.radial_dt() if radial is not None else None,
        radial_gamma=(
            peak_damping(radial.damping, radial.medium.gamma, radial.outer_radius)
            if radial is not None
            else None
        ),
    )
    summary = {
        name: {
            "lhs": r.lhs,
            "rhs": r.rhs,
            "satisfied": r.satisfied,
            "margin": r.margin,
            "r_sq": r.r_sq,
            "corollary_lhs": r.corollary_lhs,
            "note": r.note,
        }
        for name, r in reports.items()
    }
    print(json.dumps(summary, indent=2))
    return EXIT_OK if all(r.satisfied for r in reports.values()) else EXIT_UNSTABLE


def _cmd_simulate(args: argparse.Namespace, settings: Settings) -> int:
    doc = _require_config(args)
    out_dir = _out_dir(args, doc, settings)
    _write_effective(out_dir, doc)
    spec = doc.run_spec(settings.newton_settings())
    output = RunSimulationUseCase(strict=args.strict or settings.strict, out_dir=out_dir).execute(
        spec
    )
    path = write_series_csv(output.rows, out_dir / doc.output.series_csv)
    print(f"series: {path} (site integral {output.series.integral:.17g})")
    return EXIT_OK


def _threads(args: argparse.Namespace, settings: Settings) -> int:
    threads = args.threads if args.threads is not None else settings.threads
    if threads < 1:
        raise ConfigError(f"--threads must be at least 1, got {threads}")
    return threads


def _cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    doc = _require_config(args)
    out_dir = _out_dir(args, doc, settings)
    _write_effective(out_dir, doc)
    use_case = SupraSweepUseCase(_threads(args, settings), args.strict or settings.strict)
    result = use_case.execute(doc.sweep_spec(settings.newton_settings()))
    path = _write_result(result, out_dir, doc)
    print(
        f"sweep: {path} (max ratio {result.metadata['max_ratio']}, "
        f"jumps {result.metadata['jump_count']})"
    )
    return EXIT_OK


def _cmd_scan(args: argparse.Namespace, settings: Settings) -> int:
    doc = _require_config(args)
    out_dir = _out_dir(args, doc, settings)
    _write_effective(out_dir, doc)
    use_case = RadialScanUseCase(_threads(args, settings), args.strict or settings.strict)
    result = use_case.execute(doc.scan_spec(settings.newton_settings()))
    path = _write_result(result, out_dir, doc)
    print(f"scan: {path}")
    return EXIT_OK


def _cmd_transmit(args: argparse.Namespace, settings: Settings) -> int:
    doc = _require_config(args)
    out_dir = _out_dir(args, doc, settings)
    _write_effective(out_dir, doc)
    use_case = TransmitBitsUseCase(strict=args.strict or settings.strict, out_dir=out_dir)
    result = use_case.execute(doc.bit_spec(settings.newton_settings()))
    path = _write_result(result, out_dir, doc)
    print(f"transmit: {path} ({result.metadata['count']} peaks)")
    return EXIT_OK


def _cmd_snapshot_dump(args: argparse.Namespace, settings: Settings) -> int:
    out_dir = _out_dir(args, None, settings)
    target = out_dir / f"{args.snapshot.stem}_axis{args.axis}.csv"
    path = dump_slice_csv(args.snapshot, target, axis=args.axis, index=args.index)
    print(f"slice: {path}")
    return EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "simulate": _cmd_simulate,
    "sweep": _cmd_sweep,
    "scan-radial": _cmd_scan,
    "transmit": _cmd_transmit,
    "snapshot-dump": _cmd_snapshot_dump,
}


def cli_dispatch(argv: Sequence[str] | None = None) -> int:
    """Run one CLI invocation and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except ConfigError as e:
        print(e.message, file=sys.stderr)
        return EXIT_CONFIG
    except SystemExit as e:
        return int(e.code or 0)

    settings = Settings()
    configure_logging(settings, args.verbose)
    try:
        return COMMANDS[args.command](args, settings)
    except SimulationError as e:
        logger.error(e.message)
        print(e.message, file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"Invalid configuration:\n{e}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as e:
        logger.error(f"I/O error: {e}")
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_FAILURE
