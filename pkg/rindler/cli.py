"""rindler-eqp: command-line runner for the spectrum, comparison, NC-shift and algebra checks.

Exit codes: 0 ok, 2 invalid configuration, 3 solver failure, 4 failed verification.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from typing import Any

from dotenv import load_dotenv

from rindler import __version__
from rindler.classical_dynamics import EQP_CLASSICAL_COLUMNS, TRAJECTORY_COLUMNS, eqp_classical_report
from rindler.config_loader import OUTPUT_FORMATS, RunConfig, get_config_loader
from rindler.errors import ConfigError, ConvergenceError, ParameterError, QuadratureError
from rindler.gravity_spectrum import EQP_COLUMNS, eqp_deviation_report
from rindler.nc_shift import NC_COLUMNS, shift_report
from rindler.numeric_solver import CONVERGENCE_COLUMNS, convergence_study, energy_from_sigma, make_grid
from rindler.operator_algebra import AlgebraVerifier
from rindler.results import ResultsManager
from rindler.rindler_spectrum import SPECTRUM_COLUMNS, spectrum_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_VERIFICATION = 4

LOG_FORMAT = "%(asctime)s : %(levelname)s : %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

NUMERIC_COLUMNS = ("sigma_numeric", "energy_numeric", "abs_error")
SUMMARY_COLUMNS = ("system", "spacing_stddev", "max_relative_variation", "strictly_decreasing")
ALGEBRA_COLUMNS = ("check", "N", "residual", "tolerance", "passed")
CONVERGENCE_REFINEMENTS = 3


def _configure_logging(level: str) -> None:
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)
    logging.getLogger("rindler").setLevel(level)


def _print_summary(title: str, values: dict[str, Any]) -> None:
    print(f"\n{title}")
    print("-" * len(title))
    for key, value in values.items():
        print(f"  {key}: {value}")


def cmd_spectrum(config: RunConfig, results: ResultsManager) -> int:
    """Analytic levels, and with ``numeric`` the SL solver levels plus a convergence table."""
    rows = spectrum_table(config.params, config.levels)
    columns = list(SPECTRUM_COLUMNS)
    study = None

    if config.numeric:
        base = config.grid_points
        coarsest = base >> CONVERGENCE_REFINEMENTS
        if base % (1 << CONVERGENCE_REFINEMENTS) or coarsest < 50:
            raise ConfigError(f"--numeric needs grid_points divisible by 8 and >= 400, got {base}")
        grids = [make_grid(config.zeta_max, base >> shift) for shift in range(CONVERGENCE_REFINEMENTS, -1, -1)]
        study = convergence_study(config.params, config.levels, grids)

        finest = [row for row in study.rows if row.h == grids[-1].h]
        for row, numeric in zip(rows, finest):
            row["sigma_numeric"] = numeric.sigma_numeric
            row["energy_numeric"] = energy_from_sigma(config.params, numeric.sigma_numeric)
            row["abs_error"] = numeric.abs_error
        columns.extend(NUMERIC_COLUMNS)

    if config.format == "json":
        document: dict[str, Any] = {"spectrum": rows}
        if study is not None:
            document["convergence"] = {
                "rows": [row.to_dict() for row in study.rows],
                "max_errors": [{"h": h, "max_abs_error": error} for h, error in study.max_errors],
                "orders": list(study.orders),
                "truncation_limited": study.truncation_limited,
            }
        results.write_json("spectrum.json", document)
    else:
        results.write_csv("spectrum.csv", columns, rows)
        if study is not None:
            results.write_csv("convergence.csv", CONVERGENCE_COLUMNS, [row.to_dict() for row in study.rows])

    summary: dict[str, Any] = {"levels": config.levels, "spacing": rows[0]["spacing"]}
    if study is not None:
        summary["max_abs_error"] = max(row["abs_error"] for row in rows)
        summary["observed_orders"] = ", ".join(f"{order:.3f}" for order in study.orders)
    _print_summary("Rindler spectrum", summary)
    return EXIT_OK


def cmd_compare(config: RunConfig, results: ResultsManager) -> int:
    """Quantum (spacing profiles) and classical (effective acceleration) equivalence comparisons."""
    if config.levels < 3:
        raise ConfigError(f"compare needs at least 3 levels, got {config.levels}")

    loader = get_config_loader()
    params = config.params
    momenta = [float(q) * params.m * params.c for q in loader.get_classical_setting("transverse_momenta", [0.0, 0.1, 0.2])]
    duration = float(loader.get_classical_setting("duration", 1.0))
    step = float(loader.get_classical_setting("step", 1e-3))

    quantum = eqp_deviation_report(params, config.levels)
    classical = eqp_classical_report(params, momenta, duration, step)

    summary_rows = [{"system": system, **values} for system, values in quantum.summary().items()]
    classical_rows = [row.to_dict() for row in classical.rows]

    if config.format == "json":
        results.write_json(
            "compare.json",
            {
                "quantum": {"rows": quantum.rows(), "summary": summary_rows},
                "classical": {"rows": classical_rows, "summary": classical.summary()},
            },
        )
    else:
        results.write_csv("eqp_quantum.csv", EQP_COLUMNS, quantum.rows())
        results.write_csv("eqp_summary.csv", SUMMARY_COLUMNS, summary_rows)
        results.write_csv("eqp_classical.csv", EQP_CLASSICAL_COLUMNS, classical_rows)
        for index, trajectory in enumerate(classical.trajectories):
            name = f"trajectory_{trajectory.variant.value}_{index // 2}.csv"
            results.write_csv(name, TRAJECTORY_COLUMNS, trajectory.rows())

    _print_summary(
        "Equivalence comparison",
        {
            "rindler spacing stddev": quantum.rindler.spacing_stddev,
            "bouncer spacings strictly decreasing": quantum.bouncer.strictly_decreasing,
            "NLO acceleration spread": classical.nlo_spread,
            "gravity acceleration spread": classical.gravity_spread,
        },
    )
    return EXIT_OK


def cmd_nc(config: RunConfig, results: ResultsManager) -> int:
    report = shift_report(config.params)
    if config.format == "json":
        results.write_json("nc_shift.json", report.to_dict())
    else:
        results.write_csv("nc_shift.csv", NC_COLUMNS, [report.to_dict()])
    _print_summary("Noncommutative ground-state shift", report.to_dict())
    return EXIT_OK


def cmd_verify_algebra(config: RunConfig, results: ResultsManager) -> int:
    params = config.params
    verifier = AlgebraVerifier(tolerance=config.tolerance)
    rows = verifier.run(hbar=params.hbar, theta=params.theta, m=params.m, g=params.alpha)
    table = [row.to_dict() for row in rows]

    if config.format == "json":
        results.write_json("algebra.json", {"checks": table, "all_passed": all(row.passed for row in rows)})
    else:
        results.write_csv("algebra.csv", ALGEBRA_COLUMNS, table)

    failed = [row for row in rows if not row.passed]
    if failed:
        logger.error(f"❌ {len(failed)} operator identities exceed tolerance")
        for row in failed:
            print(f"  FAIL {row.check} N={row.N}: residual {row.residual:.3e} > {row.tolerance:.1e}")
        return EXIT_VERIFICATION
    logger.info(f"✅ All {len(rows)} operator identities within tolerance")
    return EXIT_OK


COMMANDS: dict[str, Callable[[RunConfig, ResultsManager], int]] = {
    "spectrum": cmd_spectrum,
    "compare": cmd_compare,
    "nc": cmd_nc,
    "verify-algebra": cmd_verify_algebra,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Flat JSON run configuration")
    common.add_argument("--out", dest="output_dir", help="Output directory (default: results)")
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Data file format (default: csv)")
    common.add_argument("--numeric", action="store_true", default=None, help="Also run the numerical SL solver")
    common.add_argument("--levels", type=int, help="Number of levels k")
    common.add_argument("--grid-points", type=int, help="SL grid points")
    common.add_argument("--zeta-max", type=float, help="SL domain cutoff")
    common.add_argument("--tolerance", type=float, help="Residual threshold for verify-algebra (default: 1e-9)")
    common.add_argument("--alpha", type=float, help="Acceleration (overrides the config file)")
    common.add_argument("--theta", type=float, help="Noncommutativity parameter (overrides the config file)")
    common.add_argument("--p-y", type=float, help="Transverse momentum p_y (overrides the config file)")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(
        prog="rindler-eqp",
        description="Rindler-frame spectrum and equivalence-principle checks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    subparsers.add_parser("spectrum", parents=[common], help="Analytic (and numeric) spectrum")
    subparsers.add_parser("compare", parents=[common], help="Rindler vs uniform-gravity comparison")
    subparsers.add_parser("nc", parents=[common], help="Noncommutative ground-state shift")
    subparsers.add_parser("verify-algebra", parents=[common], help="Operator identity checks")
    return parser


def _overrides(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "output_dir": args.output_dir,
        "format": args.format,
        "numeric": args.numeric,
        "levels": args.levels,
        "grid_points": args.grid_points,
        "zeta_max": args.zeta_max,
        "tolerance": args.tolerance,
        "alpha": args.alpha,
        "theta": args.theta,
        "p_y": args.p_y,
        "log_level": args.log_level,
    }


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_OK

    try:
        config = get_config_loader().load_run_config(args.config, _overrides(args))
    except ConfigError as e:
        _configure_logging("INFO")
        logger.error(f"❌ Invalid configuration: {e}")
        return EXIT_CONFIG

    _configure_logging(config.log_level)
    logger.info(f"🔍 Running {args.command} (format={config.format}, output={config.output_dir})")

    results: ResultsManager | None = None
    try:
        results = ResultsManager(config.output_dir)
        exit_code = COMMANDS[args.command](config, results)
    except (ConfigError, ParameterError) as e:
        logger.error(f"❌ Invalid configuration: {e}")
        exit_code = EXIT_CONFIG
    except (ConvergenceError, QuadratureError) as e:
        logger.error(f"❌ Solver failure: {e}")
        exit_code = EXIT_SOLVER

    if results is not None:
        results.save_manifest(args.command, config.to_dict(), exit_code)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
