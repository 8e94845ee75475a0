"""
Command-line interface.

Subcommands: spectrum, compare, sweep, estimate, figure3.  Exit codes:
0 success, 2 configuration or validation problem, 3 numerical failure
(zero intensity, non-monotone or out-of-range inversion), 4 output I/O
failure.  Diagnostics go to stderr; machine-readable output goes to files
or stdout only.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from ._version import __version__
from .config import load_scenario
from .engine import (
    SchemeKind,
    compare_schemes,
    discrepancy_from_results,
    mean_shift_analytic,
    postselected_spectrum,
    postselection_probability,
)
from .errors import (
    IoError,
    NearOrthogonalPostselection,
    NonMonotonicCalibration,
    OutOfRangeObservation,
    ParseError,
    PhiOutOfRange,
    ValidationError,
    ZeroTotalIntensity,
)
from .estimation import calibration_curve, estimate_omega_analytic, estimate_omega_numeric
from .output import (
    build_run_record,
    write_results_json,
    write_spectrum_csv,
    write_table_csv,
)
from .sagnac import coupling_chain
from .spectrum import normalize, ProbeSpectrum

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

#: the two rotation rates the figure3 spectra are evaluated at, rad/s
FIGURE3_OMEGAS = (1.0e-9, 1.9e-8)
#: sweep used by the figure3 ratio and probability panels, rad/s
FIGURE3_SWEEP = (1e-10, 1.9e-8, 25)

FIGURE3_FILES = (
    "spectra_omega_1.0e-09.csv",
    "spectra_omega_1.9e-08.csv",
    "sensitivity_ratio_sweep.csv",
    "postselection_probability_sweep.csv",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sagnac-wva",
        description=(
            "Simulate weak-value amplified rotation sensing in a polarization "
            "Sagnac loop and estimate rotation rates from spectral shifts."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="write probe and post-selected spectra as CSV")
    sp.add_argument("--config", required=True, help="scenario JSON file")
    sp.add_argument("--out", required=True, help="output CSV path")
    sp.add_argument(
        "--scheme",
        choices=("swm", "bwm"),
        help="override the scenario scheme (required there if the scenario says 'both')",
    )

    cp = sub.add_parser("compare", help="run both schemes and write a JSON run record")
    cp.add_argument("--config", required=True)
    cp.add_argument("--out", required=True, help="output JSON path")

    sw = sub.add_parser("sweep", help="tabulate delta_lambda versus Omega as CSV")
    sw.add_argument("--config", required=True)
    sw.add_argument("--omega-min", type=float, required=True)
    sw.add_argument("--omega-max", type=float, required=True)
    sw.add_argument("--points", type=int, required=True)
    sw.add_argument("--mode", choices=("numeric", "analytic"), required=True)
    sw.add_argument("--out", required=True, help="output CSV path")

    es = sub.add_parser("estimate", help="invert an observed wavelength shift to Omega")
    es.add_argument("--config", required=True)
    es.add_argument("--delta-lambda-m", type=float, required=True, help="observed shift, m")
    es.add_argument("--method", choices=("analytic", "numeric"), required=True)
    es.add_argument("--omega-min", type=float, default=1e-10, help="numeric calibration range")
    es.add_argument("--omega-max", type=float, default=1e-8)
    es.add_argument("--points", type=int, default=10)

    fg = sub.add_parser(
        "figure3", help="emit the four-panel summary datasets (spectra, ratio, probability)"
    )
    fg.add_argument("--config", required=True)
    fg.add_argument("--out", required=True, help="output directory")

    return parser


def _resolved_scheme(config, override: str | None) -> SchemeKind:
    name = override or config.scheme
    if name == "both":
        raise ValidationError(
            "scheme", "this subcommand needs a single scheme; pass --scheme swm|bwm"
        )
    return SchemeKind(name)


def _post_spectrum(config, scheme: SchemeKind, omega: float | None = None):
    probe = config.probe()
    g = coupling_chain(config.sagnac(omega=omega)).g
    bias = config.bias() if scheme is SchemeKind.BWM else None
    spec = postselected_spectrum(
        probe, g, config.phi_rad, bias, paper_literal=config.paper_literal
    )
    return probe, spec


def _cmd_spectrum(args) -> int:
    config = load_scenario(args.config)
    scheme = _resolved_scheme(config, args.scheme)
    probe, spec = _post_spectrum(config, scheme)
    write_spectrum_csv(args.out, probe, spec)
    return EXIT_OK


def _cmd_compare(args) -> int:
    config = load_scenario(args.config)
    results = compare_schemes(config)
    record = build_run_record(config, results, discrepancy_from_results(results))
    write_results_json(args.out, record)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    config = load_scenario(args.config)
    schemes = (
        (SchemeKind.SWM, SchemeKind.BWM)
        if config.scheme == "both"
        else (SchemeKind(config.scheme),)
    )
    curves = [
        calibration_curve(
            config.with_scheme(s.value), args.omega_min, args.omega_max, args.points, args.mode
        )
        for s in schemes
    ]
    columns = [curves[0].omega_values] + [c.delta_lambda_values for c in curves]
    if len(curves) == 1:
        header = "omega_rad_per_s,delta_lambda_m"
    else:
        header = "omega_rad_per_s,delta_lambda_swm_m,delta_lambda_bwm_m"
    write_table_csv(args.out, header, columns)
    return EXIT_OK


def _cmd_estimate(args) -> int:
    config = load_scenario(args.config)
    scheme = _resolved_scheme(config, None)
    if args.method == "analytic":
        estimate = estimate_omega_analytic(args.delta_lambda_m, scheme, config)
    else:
        curve = calibration_curve(
            config, args.omega_min, args.omega_max, args.points, mode="numeric"
        )
        estimate = estimate_omega_numeric(args.delta_lambda_m, curve)
    payload = {
        "omega_hat_rad_per_s": estimate.omega_hat,
        "method": estimate.method,
        "residual_m": estimate.residual,
        "scheme": scheme.value,
    }
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _cmd_figure3(args) -> int:
    config = load_scenario(args.config)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoError(f"cannot create {out_dir}: {exc}") from exc

    # panels A and B: probe plus normalized post-selected spectra, both schemes
    for omega, name in zip(FIGURE3_OMEGAS, FIGURE3_FILES[:2]):
        probe, swm = _post_spectrum(config, SchemeKind.SWM, omega=omega)
        _, bwm = _post_spectrum(config, SchemeKind.BWM, omega=omega)
        swm_n = normalize(ProbeSpectrum(swm.p_grid, swm.intensity, swm.p0, swm.sigma_p))
        bwm_n = normalize(ProbeSpectrum(bwm.p_grid, bwm.intensity, bwm.p0, bwm.sigma_p))
        write_table_csv(
            out_dir / name,
            "p_inv_m,lambda_m,intensity_probe,intensity_post_swm,intensity_post_bwm",
            [
                probe.p_grid,
                2.0 * np.pi / probe.p_grid,
                probe.intensity,
                swm_n.intensity,
                bwm_n.intensity,
            ],
        )

    # panel C: analytic shifts of both schemes and their ratio across Omega
    lo, hi, n = FIGURE3_SWEEP
    omegas = np.geomspace(lo, hi, n)
    probe = config.probe()
    swm_shift = np.empty(n)
    bwm_shift = np.empty(n)
    for k, omega in enumerate(omegas):
        g = coupling_chain(config.sagnac(omega=omega)).g
        swm_shift[k] = mean_shift_analytic(
            SchemeKind.SWM, g, probe, config.phi_rad,
            config.delta_lambda_means, config.paper_literal,
        ).delta_lambda
        bwm_shift[k] = mean_shift_analytic(
            SchemeKind.BWM, g, probe, config.phi_rad,
            config.delta_lambda_means, config.paper_literal,
        ).delta_lambda
    write_table_csv(
        out_dir / FIGURE3_FILES[2],
        "omega_rad_per_s,delta_lambda_swm_analytic_m,delta_lambda_bwm_analytic_m,bwm_to_swm_ratio",
        [omegas, swm_shift, bwm_shift, bwm_shift / swm_shift],
    )

    # panel D: survival probabilities across the same sweep
    prob_swm = np.empty(n)
    prob_bwm = np.empty(n)
    point_swm = np.empty(n)
    point_bwm = np.empty(n)
    for k, omega in enumerate(omegas):
        g = coupling_chain(config.sagnac(omega=omega)).g
        _, swm = _post_spectrum(config, SchemeKind.SWM, omega=omega)
        _, bwm = _post_spectrum(config, SchemeKind.BWM, omega=omega)
        prob_swm[k] = postselection_probability(swm)
        prob_bwm[k] = postselection_probability(bwm)
        point_swm[k] = np.sin(g * probe.p0 + config.phi_rad) ** 2
        point_bwm[k] = np.sin(g * probe.p0) ** 2
    write_table_csv(
        out_dir / FIGURE3_FILES[3],
        "omega_rad_per_s,prob_swm_numeric,prob_bwm_numeric,prob_swm_pointform,prob_bwm_pointform",
        [omegas, prob_swm, prob_bwm, point_swm, point_bwm],
    )
    return EXIT_OK


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
    "estimate": _cmd_estimate,
    "figure3": _cmd_figure3,
}


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage/help; fold its exit status through
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (ValidationError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (
        ZeroTotalIntensity,
        NonMonotonicCalibration,
        OutOfRangeObservation,
        NearOrthogonalPostselection,
        PhiOutOfRange,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except IoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
