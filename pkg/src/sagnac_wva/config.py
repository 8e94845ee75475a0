"""
Scenario configuration: JSON loading, strict validation, and construction of
the derived physics objects (probe, rotation scenario, bias delay).

A scenario file is a single JSON object.  Units are encoded in the key
names; unknown keys anywhere are rejected so typos cannot silently fall
back to defaults.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import GridTooNarrow, ParseError, ValidationError
from .sagnac import SagnacConfig, BiasConfig, bias_phase
from .spectrum import GridSpec, ProbeSpectrum, gaussian_probe

SCHEMES = ("swm", "bwm", "both")
WIDTH_READINGS = ("fwhm", "sigma")

_TOP_LEVEL_KEYS = {
    "lambda0_nm",
    "fwhm_nm",
    "area_m2",
    "phi_rad",
    "omega_rad_per_s",
    "scheme",
    "bias_order_m",
    "delta_lambda_means",
    "paper_literal",
    "grid",
}
_GRID_KEYS = {"half_width_sigmas", "points"}
_REQUIRED_KEYS = ("lambda0_nm", "fwhm_nm", "area_m2", "phi_rad", "omega_rad_per_s", "scheme")


def _is_real(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


@dataclass(frozen=True)
class ExperimentConfig:
    """One validated scenario.  Field names carry the units."""

    lambda0_nm: float
    fwhm_nm: float
    area_m2: float
    phi_rad: float
    omega_rad_per_s: float
    scheme: str
    bias_order_m: int = 0
    delta_lambda_means: str = "fwhm"
    paper_literal: bool = False
    grid: GridSpec = field(default_factory=GridSpec)

    def __post_init__(self):
        for name in ("lambda0_nm", "fwhm_nm", "area_m2"):
            value = getattr(self, name)
            if not _is_real(value) or not math.isfinite(value) or value <= 0.0:
                raise ValidationError(name, f"must be a finite number > 0, got {value!r}")
        if not _is_real(self.phi_rad) or not 0.0 < self.phi_rad < math.pi / 2.0:
            raise ValidationError(
                "phi_rad", f"must lie strictly inside (0, pi/2), got {self.phi_rad!r}"
            )
        if not _is_real(self.omega_rad_per_s) or not math.isfinite(self.omega_rad_per_s):
            raise ValidationError(
                "omega_rad_per_s", f"must be a finite number, got {self.omega_rad_per_s!r}"
            )
        if self.scheme not in SCHEMES:
            raise ValidationError("scheme", f"must be one of {SCHEMES}, got {self.scheme!r}")
        if isinstance(self.bias_order_m, bool) or not isinstance(self.bias_order_m, int):
            raise ValidationError(
                "bias_order_m", f"must be an integer, got {self.bias_order_m!r}"
            )
        if self.delta_lambda_means not in WIDTH_READINGS:
            raise ValidationError(
                "delta_lambda_means",
                f"must be one of {WIDTH_READINGS}, got {self.delta_lambda_means!r}",
            )
        if not isinstance(self.paper_literal, bool):
            raise ValidationError(
                "paper_literal", f"must be a boolean, got {self.paper_literal!r}"
            )
        if not isinstance(self.grid, GridSpec):
            raise ValidationError("grid", f"must be a GridSpec, got {self.grid!r}")

    # -- derived quantities ------------------------------------------------

    def lambda0_m(self) -> float:
        return self.lambda0_nm * 1e-9

    def fwhm_m(self) -> float:
        return self.fwhm_nm * 1e-9

    def probe(self) -> ProbeSpectrum:
        return gaussian_probe(self.lambda0_m(), self.fwhm_m(), self.grid)

    def sagnac(self, omega: float | None = None) -> SagnacConfig:
        return SagnacConfig(
            omega=self.omega_rad_per_s if omega is None else omega,
            area=self.area_m2,
            lambda0=self.lambda0_m(),
        )

    def bias(self) -> BiasConfig:
        return bias_phase(self.phi_rad, self.lambda0_m(), self.bias_order_m)

    def with_omega(self, omega: float) -> "ExperimentConfig":
        return replace(self, omega_rad_per_s=omega)

    def with_scheme(self, scheme: str) -> "ExperimentConfig":
        return replace(self, scheme=scheme)

    def to_dict(self) -> dict:
        """Canonical plain-dict form with every default made explicit."""
        return {
            "lambda0_nm": float(self.lambda0_nm),
            "fwhm_nm": float(self.fwhm_nm),
            "area_m2": float(self.area_m2),
            "phi_rad": float(self.phi_rad),
            "omega_rad_per_s": float(self.omega_rad_per_s),
            "scheme": self.scheme,
            "bias_order_m": int(self.bias_order_m),
            "delta_lambda_means": self.delta_lambda_means,
            "paper_literal": self.paper_literal,
            "grid": {
                "half_width_sigmas": float(self.grid.half_width_sigmas),
                "points": int(self.grid.points),
            },
        }


def _grid_from_dict(raw: dict) -> GridSpec:
    unknown = sorted(set(raw) - _GRID_KEYS)
    if unknown:
        raise ValidationError(f"grid.{unknown[0]}", "unknown key")
    spec = {}
    if "points" in raw:
        points = raw["points"]
        if isinstance(points, bool) or not isinstance(points, int):
            raise ValidationError("grid.points", f"must be an integer, got {points!r}")
        spec["points"] = points
    if "half_width_sigmas" in raw:
        hw = raw["half_width_sigmas"]
        if not _is_real(hw) or not math.isfinite(hw):
            raise ValidationError(
                "grid.half_width_sigmas", f"must be a finite number, got {hw!r}"
            )
        spec["half_width_sigmas"] = float(hw)
    try:
        return GridSpec(**spec)
    except GridTooNarrow as exc:
        raise ValidationError("grid.half_width_sigmas", str(exc)) from exc
    except ValueError as exc:
        fld = "grid.points" if "points" in str(exc) else "grid.half_width_sigmas"
        raise ValidationError(fld, str(exc)) from exc


def config_from_dict(raw) -> ExperimentConfig:
    """Validate a plain dict (parsed JSON) into an ExperimentConfig."""
    if not isinstance(raw, dict):
        raise ValidationError("$", f"scenario must be a JSON object, got {type(raw).__name__}")
    unknown = sorted(set(raw) - _TOP_LEVEL_KEYS)
    if unknown:
        raise ValidationError(unknown[0], "unknown key")
    for key in _REQUIRED_KEYS:
        if key not in raw:
            raise ValidationError(key, "missing required key")
    grid_raw = raw.get("grid", {})
    if not isinstance(grid_raw, dict):
        raise ValidationError("grid", f"must be an object, got {grid_raw!r}")
    kwargs = {k: v for k, v in raw.items() if k != "grid"}
    return ExperimentConfig(grid=_grid_from_dict(grid_raw), **kwargs)


def load_scenario(path) -> ExperimentConfig:
    """Read, parse and validate a scenario JSON file.

    Raises FileNotFoundError for a missing file, ParseError for invalid
    JSON (with line/column), and ValidationError naming the first offending
    field otherwise.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            lineno=exc.lineno,
            colno=exc.colno,
        ) from exc
    return config_from_dict(raw)
