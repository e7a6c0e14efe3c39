"""Command line entry point: run a sweep config and write CSV.

Exit codes: 0 success, 1 config error, 2 numerical or I/O error, 3 `--check`
found a mismatch against the closed forms.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from dirac_correlations import __version__
from dirac_correlations._logger import _logger_sweep as _logger
from dirac_correlations._logger import set_verbosity
from dirac_correlations.exceptions import ConfigError, NumericalError
from dirac_correlations.sweep import check_rows, emit_csv, parse_config, run_sweep
from dirac_correlations.sweep.engine import CHECK_OUTPUTS

__all__ = ["FIGURES_DIR", "list_figures", "figure_path", "build_parser", "main"]

FIGURES_DIR = Path(__file__).parent / "figures"

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2
EXIT_CHECK = 3

_STDOUT = ("-", "stdout")


def list_figures() -> List[str]:
    """names of the bundled figure configs"""
    return sorted(p.stem for p in FIGURES_DIR.glob("*.conf"))


def figure_path(name: str) -> Path:
    path = FIGURES_DIR / f"{name}.conf"
    if not path.is_file():
        raise ConfigError(f"no bundled figure `{name}` (available: {', '.join(list_figures())})")
    return path


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac-correlations",
        description="Sweep external-field configurations of the Dirac Hamiltonian and write correlation measures as CSV.",
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", type=Path, help="sweep config file")
    source.add_argument("--figure", help="bundled figure config, e.g. fig2")
    source.add_argument("--list-figures", action="store_true", help="print the bundled figure names and exit")
    parser.add_argument("--output", default="-", help="CSV destination, `-` or `stdout` for stdout (default)")
    parser.add_argument("--threads", type=int, default=0, help="worker threads, 0 = auto, 1 = serial")
    parser.add_argument("--oracle", action="store_true", help="append closed-form oracle columns")
    parser.add_argument(
        "--check",
        action="store_true",
        help="compare against the closed forms and exit with 3 on a mismatch (implies --oracle)",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _read_config(args: argparse.Namespace) -> str:
    path = args.config if args.config is not None else figure_path(args.figure)
    _logger.info("reading config %s", path)
    return path.read_text(encoding="utf-8")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_verbosity(logging.DEBUG if args.verbose > 1 else logging.INFO)
    if args.list_figures:
        print("\n".join(list_figures()))
        return EXIT_OK
    if args.threads < 0:
        _logger.error("--threads must be non-negative")
        return EXIT_CONFIG

    oracle = args.oracle or args.check
    try:
        spec = parse_config(_read_config(args))
        rows = run_sweep(
            spec,
            oracle=oracle,
            threads=args.threads,
            extra_outputs=CHECK_OUTPUTS if args.check else (),
        )
        if args.output in _STDOUT:
            emit_csv(rows, sys.stdout)
        else:
            with open(args.output, "w", encoding="utf-8", newline="") as sink:
                emit_csv(rows, sink)
    except ConfigError as e:
        _logger.error("config error: %s", e)
        return EXIT_CONFIG
    except (NumericalError, OSError) as e:
        _logger.error("%s: %s", type(e).__name__, e)
        return EXIT_NUMERICAL

    if args.check:
        failures = check_rows(rows)
        for message in failures:
            _logger.error("check: %s", message)
        if failures:
            return EXIT_CHECK
        _logger.info("check passed")
    return EXIT_OK
