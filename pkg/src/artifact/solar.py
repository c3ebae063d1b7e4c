"""Synthetic true-sun model, qi-table generation and precision sweeps.

Longitudes are in du.  The sun sweeps ``DU_PER_YEAR`` du in one year, so the
mean sun moves about 1 du per day.  The true sun adds a single sine term of
amplitude ``amplitude`` du (a first-order equation of center).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np
from scipy import optimize

from .errors import InvalidModelError, NumericalFailure, ValidationError
from .piecewise import (
    N_QI,
    PiecewiseParabola,
    QiInterval,
    TropicalYearTable,
    build_piecewise,
    build_piecewise_linear,
    eval_piecewise_many,
)

DU_PER_YEAR = 365.25
DU_PER_QI = DU_PER_YEAR / N_QI
BOUNDARY_TOL = 1e-9
MAX_BISECTIONS = 200

__all__ = [
    "DU_PER_YEAR",
    "DU_PER_QI",
    "SolarModel",
    "QiDivisionMode",
    "SweepResult",
    "true_longitude",
    "mean_longitude",
    "equation_of_center",
    "true_deviation",
    "ding_boundaries",
    "table_start",
    "make_qi_table",
    "error_sweep",
    "compare_methods",
    "du_to_degrees",
    "degrees_to_du",
]


@dataclass(frozen=True)
class SolarModel:
    year_length: float = 365.25
    amplitude: float = 0.0
    phase: float = 0.0

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.year_length, self.amplitude, self.phase)):
            raise InvalidModelError("solar model parameters must be finite")
        if self.year_length <= 0:
            raise InvalidModelError(f"year_length must be positive, got {self.year_length!r}")
        if self.amplitude < 0:
            raise InvalidModelError(f"amplitude must be non-negative, got {self.amplitude!r}")

    @property
    def mean_rate(self) -> float:
        """Mean solar motion, du/day."""
        return DU_PER_YEAR / self.year_length

    @property
    def amplitude_limit(self) -> float:
        """Amplitudes at or above this make the true longitude non-monotonic.

        ``dL/dt = mean_rate + amplitude * 2*pi/year * cos(...)`` stays positive
        iff ``amplitude < mean_rate * year / (2*pi)``.
        """
        return self.mean_rate * self.year_length / (2.0 * math.pi)


class QiDivisionMode(str, Enum):
    PING = "ping"  # equal time
    DING = "ding"  # equal ecliptic arc


class SweepResult(NamedTuple):
    max_abs: float
    mean_abs: float


def _time(t):
    return float(t) if np.ndim(t) == 0 else np.asarray(t, dtype=np.float64)


def mean_longitude(model: SolarModel, t):
    return model.mean_rate * _time(t)


def equation_of_center(model: SolarModel, t):
    t = _time(t)
    out = model.amplitude * np.sin(2.0 * math.pi * (t - model.phase) / model.year_length)
    return float(out) if np.ndim(out) == 0 else out


def true_longitude(model: SolarModel, t):
    """Mean longitude plus the sine equation of center, du."""
    return mean_longitude(model, t) + equation_of_center(model, t)


def true_deviation(model: SolarModel, t, start: float = 0.0):
    """True minus mean longitude, accumulated from ``start`` over ``t`` days."""
    return equation_of_center(model, start + _time(t)) - equation_of_center(model, start)


def _solve_longitude(model: SolarModel, target: float) -> float:
    rate = model.mean_rate
    lo = (target - model.amplitude) / rate - 1.0
    hi = (target + model.amplitude) / rate + 1.0

    def residual(t):
        return true_longitude(model, t) - target

    try:
        t = optimize.bisect(residual, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=MAX_BISECTIONS)
    except (RuntimeError, ValueError) as exc:
        raise NumericalFailure(f"bisection for longitude {target!r} du failed: {exc}") from exc
    if abs(residual(t)) > BOUNDARY_TOL:
        raise NumericalFailure(f"longitude {target!r} du only reached to {residual(t):.3g} du")
    return t


def ding_boundaries(model: SolarModel) -> list[float]:
    """Times at which the true sun reaches ``k * DU_PER_QI`` du, ``k = 0..24``."""
    if model.amplitude >= model.amplitude_limit:
        raise InvalidModelError(
            f"amplitude {model.amplitude!r} du >= {model.amplitude_limit:.12g} du: "
            "true longitude is not strictly increasing"
        )
    return [_solve_longitude(model, k * DU_PER_QI) for k in range(N_QI + 1)]


def table_start(model: SolarModel, mode: QiDivisionMode | str) -> float:
    """Model time at which the first qi of a ``mode`` table begins."""
    if QiDivisionMode(mode) is QiDivisionMode.PING:
        return 0.0
    return ding_boundaries(model)[0]


def make_qi_table(model: SolarModel, mode: QiDivisionMode | str = QiDivisionMode.PING) -> TropicalYearTable:
    """Divide one year into 24 qi and record each qi's accumulated deviation.

    ``ping`` splits the year into equal times starting at ``t = 0``.  ``ding``
    splits the ecliptic into equal arcs starting where the true longitude is
    0 du, so its qi lengths vary through the year.
    """
    mode = QiDivisionMode(mode)
    if mode is QiDivisionMode.PING:
        n = model.year_length / N_QI
        bounds = [k * n for k in range(N_QI + 1)]
        lengths = [n] * N_QI
    else:
        bounds = ding_boundaries(model)
        lengths = [b - a for a, b in zip(bounds, bounds[1:])]
    eoc = [equation_of_center(model, b) for b in bounds]
    intervals = tuple(
        QiInterval(i + 1, lengths[i], eoc[i + 1] - eoc[i]) for i in range(N_QI)
    )
    return TropicalYearTable(intervals, start=bounds[0], strict_closure=True)


def error_sweep(model: SolarModel, pp: PiecewiseParabola, samples: int) -> SweepResult:
    """Max and mean absolute error of ``pp`` against the model's deviation.

    Samples sit at ``k * year / samples`` for ``k = 0..samples-1`` in table
    time; ``pp.start`` maps table time to model time.
    """
    if samples < 1:
        raise ValidationError(f"samples must be >= 1, got {samples!r}")
    t = np.arange(samples, dtype=np.float64) * (pp.year_length / samples)
    err = np.abs(eval_piecewise_many(pp, t) - true_deviation(model, t, start=pp.start))
    return SweepResult(float(err.max()), float(err.mean()))


def compare_methods(
    model: SolarModel, mode: QiDivisionMode | str = QiDivisionMode.PING, samples: int = 10_000
) -> dict[str, SweepResult]:
    """Sweep the integrated-step (linear) and parabolic interpolants."""
    table = make_qi_table(model, mode)
    return {
        "linear": error_sweep(model, build_piecewise_linear(table), samples),
        "parabolic": error_sweep(model, build_piecewise(table), samples),
    }


def du_to_degrees(v: float) -> float:
    return v * 360.0 / DU_PER_YEAR


def degrees_to_du(v: float) -> float:
    return v * DU_PER_YEAR / 360.0
