"""
Rotation-rate estimation from an observed wavelength shift.

Two inverters are provided.  The analytic one inverts the same closed-form
shift expression the forward analytic model uses (so the pair round-trips
to rounding).  The numeric one bisects the exact spectral forward model;
because the biased scheme's numeric response need not be monotone in Omega,
a calibration curve must be built first and inversion is refused outright
when the curve is not strictly monotone or the observation falls outside
the calibrated range.  No silent extrapolation, ever.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import (
    SchemeKind,
    mean_shift_analytic,
    mean_shift_numeric,
    postselected_spectrum,
)
from .errors import NonMonotonicCalibration, OutOfRangeObservation, ValidationError
from .sagnac import coupling_chain

#: bisection stops when the bracket shrinks below this relative width in Omega
BISECTION_REL_TOL = 1e-6
BISECTION_MAX_ITER = 60

MODES = ("numeric", "analytic")


@dataclass(frozen=True)
class OmegaEstimate:
    omega_hat: float  # rad/s
    method: str  # "analytic-closed-form" | "numeric-bisection"
    residual: float  # |predicted - observed| wavelength shift, m


@dataclass(frozen=True)
class CalibrationCurve:
    """Forward-model samples delta_lambda(omega) on a fixed omega ladder."""

    omega_values: np.ndarray
    delta_lambda_values: np.ndarray
    scheme: SchemeKind
    mode: str  # "numeric" | "analytic"
    monotone_flag: bool
    config: object  # scenario the curve was built from; reused by the inverter


def _single_scheme(config) -> SchemeKind:
    if config.scheme not in ("swm", "bwm"):
        raise ValidationError("scheme", "estimation needs a single scheme, not 'both'")
    return SchemeKind(config.scheme)


def _forward_delta_lambda(config, scheme: SchemeKind, probe, omega: float, mode: str) -> float:
    """Predicted wavelength shift at the given rotation rate."""
    g = coupling_chain(config.sagnac(omega=omega)).g
    if mode == "analytic":
        shift = mean_shift_analytic(
            scheme, g, probe, config.phi_rad, config.delta_lambda_means, config.paper_literal
        )
        return shift.delta_lambda
    bias = config.bias() if scheme is SchemeKind.BWM else None
    spec = postselected_spectrum(
        probe, g, config.phi_rad, bias, paper_literal=config.paper_literal
    )
    return mean_shift_numeric(spec, probe).delta_lambda


def calibration_curve(
    config,
    omega_min: float,
    omega_max: float,
    n_points: int,
    mode: str = "numeric",
    spacing: str = "log",
) -> CalibrationCurve:
    """Sample the forward model on a log- (default) or linearly-spaced ladder.

    The monotone flag records whether the sampled shifts are strictly
    monotone (either direction); the numeric inverter requires it.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if spacing not in ("log", "linear"):
        raise ValueError(f"spacing must be 'log' or 'linear', got {spacing!r}")
    if not 0.0 <= omega_min < omega_max:
        raise ValueError(f"need 0 <= omega_min < omega_max, got [{omega_min}, {omega_max}]")
    if n_points < 2:
        raise ValueError(f"n_points must be >= 2, got {n_points}")
    if spacing == "log":
        if omega_min <= 0.0:
            raise ValueError("log spacing requires omega_min > 0")
        omegas = np.geomspace(omega_min, omega_max, n_points)
    else:
        omegas = np.linspace(omega_min, omega_max, n_points)

    scheme = _single_scheme(config)
    probe = config.probe()
    values = np.array(
        [_forward_delta_lambda(config, scheme, probe, om, mode) for om in omegas]
    )
    diffs = np.diff(values)
    monotone = bool(np.all(diffs > 0.0) or np.all(diffs < 0.0))
    return CalibrationCurve(
        omega_values=omegas,
        delta_lambda_values=values,
        scheme=scheme,
        mode=mode,
        monotone_flag=monotone,
        config=config,
    )


def estimate_omega_analytic(delta_lambda_obs: float, scheme: SchemeKind, config) -> OmegaEstimate:
    """Invert the closed-form shift expression (linear in Omega).

    The coefficient is taken from the forward analytic model itself, so the
    inversion matches whatever cot-vs-1/phi and width-reading conventions
    the scenario selects, and forward-then-invert round-trips to rounding.
    """
    probe = config.probe()
    coefficient = _forward_delta_lambda(config, scheme, probe, 1.0, "analytic")
    omega_hat = delta_lambda_obs / coefficient
    residual = abs(coefficient * omega_hat - delta_lambda_obs)
    return OmegaEstimate(omega_hat=omega_hat, method="analytic-closed-form", residual=residual)


def estimate_omega_numeric(delta_lambda_obs: float, curve: CalibrationCurve) -> OmegaEstimate:
    """Bisect the numeric forward model against an observed shift.

    Requires a strictly monotone calibration curve bracketing the
    observation.  Stops at a relative bracket width of BISECTION_REL_TOL in
    Omega or after BISECTION_MAX_ITER halvings, whichever comes first.

    Raises
    ------
    NonMonotonicCalibration
        If the curve's monotone flag is down.
    OutOfRangeObservation
        If the observed shift lies outside the calibrated shift range.
    """
    if not curve.monotone_flag:
        raise NonMonotonicCalibration(
            f"{curve.scheme.value} {curve.mode} calibration on "
            f"[{curve.omega_values[0]:.3e}, {curve.omega_values[-1]:.3e}] rad/s is "
            f"not strictly monotone; refusing to invert"
        )
    lo_val = float(curve.delta_lambda_values[0])
    hi_val = float(curve.delta_lambda_values[-1])
    vmin, vmax = min(lo_val, hi_val), max(lo_val, hi_val)
    if not vmin <= delta_lambda_obs <= vmax:
        raise OutOfRangeObservation(
            f"observed shift {delta_lambda_obs:.6e} m outside calibrated range "
            f"[{vmin:.6e}, {vmax:.6e}] m"
        )

    config = curve.config
    probe = config.probe()
    increasing = hi_val > lo_val

    def forward(om: float) -> float:
        return _forward_delta_lambda(config, curve.scheme, probe, om, curve.mode)

    a = float(curve.omega_values[0])
    b = float(curve.omega_values[-1])
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (a + b)
        if (b - a) <= BISECTION_REL_TOL * abs(mid):
            break
        value = forward(mid)
        # keep the sub-bracket whose endpoint values still straddle the target
        if (value < delta_lambda_obs) == increasing:
            a = mid
        else:
            b = mid
    omega_hat = 0.5 * (a + b)
    residual = abs(forward(omega_hat) - delta_lambda_obs)
    return OmegaEstimate(omega_hat=omega_hat, method="numeric-bisection", residual=residual)
