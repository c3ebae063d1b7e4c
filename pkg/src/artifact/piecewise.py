"""Year-long piecewise parabolic interpolation over 24 qi."""

from __future__ import annotations

import bisect
import logging
import math
from dataclasses import dataclass, field
from itertools import accumulate
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import OutOfDomainError, ValidationError
from .interpolation import QiPiece, QuadraticPoly, coefficients

log = logging.getLogger(__name__)

N_QI = 24

__all__ = [
    "N_QI",
    "QiInterval",
    "TropicalYearTable",
    "PiecewiseParabola",
    "ContinuityRow",
    "build_piecewise",
    "build_piecewise_linear",
    "eval_piecewise",
    "eval_piecewise_many",
    "continuity_report",
]


@dataclass(frozen=True)
class QiInterval:
    index: int
    n: float
    delta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.n) and math.isfinite(self.delta)):
            raise ValidationError(f"qi {self.index}: length and deviation must be finite")
        if self.n <= 0:
            raise ValidationError(f"qi {self.index}: length must be positive, got {self.n!r}")


@dataclass(frozen=True)
class TropicalYearTable:
    """Exactly 24 qi intervals, indices 1..24 in order.

    ``start`` is the model time (days) at which the first qi begins; it only
    matters when comparing against a reference model.  If the deviations do
    not sum to zero within ``closure_tol`` the table is rejected, or merely
    logged as a warning when ``strict_closure`` is false.
    """

    intervals: tuple[QiInterval, ...]
    start: float = 0.0
    closure_tol: float = 1e-9
    strict_closure: bool = False
    year_length: float = field(init=False)

    def __post_init__(self) -> None:
        intervals = tuple(self.intervals)
        object.__setattr__(self, "intervals", intervals)
        if len(intervals) != N_QI:
            raise ValidationError(f"expected {N_QI} qi intervals, got {len(intervals)}")
        for expected, qi in enumerate(intervals, start=1):
            if qi.index != expected:
                raise ValidationError(f"qi index {qi.index} at position {expected}, expected {expected}")
        object.__setattr__(self, "year_length", list(accumulate(qi.n for qi in intervals))[-1])
        residual = self.closure_residual
        if abs(residual) > self.closure_tol:
            msg = f"deviations sum to {residual:.12g} du, not 0 (tolerance {self.closure_tol:g})"
            if self.strict_closure:
                raise ValidationError(msg)
            log.warning(msg)

    @classmethod
    def from_columns(cls, lengths: Sequence[float], deltas: Sequence[float], **kw) -> TropicalYearTable:
        if len(lengths) != len(deltas):
            raise ValidationError("lengths and deltas differ in size")
        intervals = tuple(
            QiInterval(i, float(n), float(d)) for i, (n, d) in enumerate(zip(lengths, deltas), start=1)
        )
        return cls(intervals, **kw)

    @property
    def lengths(self) -> list[float]:
        return [qi.n for qi in self.intervals]

    @property
    def deltas(self) -> list[float]:
        return [qi.delta for qi in self.intervals]

    @property
    def closure_residual(self) -> float:
        return math.fsum(self.deltas)


@dataclass(frozen=True)
class PiecewiseParabola:
    breakpoints: tuple[float, ...]
    pieces: tuple[QuadraticPoly, ...]
    offsets: tuple[float, ...]
    total: float
    cyclic: bool = True
    start: float = 0.0

    def __post_init__(self) -> None:
        bp = self.breakpoints
        if len(bp) != len(self.pieces) + 1 or len(self.offsets) != len(self.pieces):
            raise ValidationError("breakpoints, pieces and offsets have inconsistent sizes")
        if any(b <= a for a, b in zip(bp, bp[1:])):
            raise ValidationError("breakpoints must be strictly increasing")

    @property
    def year_length(self) -> float:
        return self.breakpoints[-1]

    def coeff_array(self) -> np.ndarray:
        return np.array([p.as_tuple() for p in self.pieces], dtype=np.float64)

    def __call__(self, t):
        if np.ndim(t) == 0:
            return eval_piecewise(self, float(t))
        return eval_piecewise_many(self, t)


def _assemble(table: TropicalYearTable, pieces: list[QuadraticPoly], cyclic: bool) -> PiecewiseParabola:
    breakpoints = (0.0, *accumulate(table.lengths))
    prefix = (0.0, *accumulate(table.deltas))
    return PiecewiseParabola(
        breakpoints=breakpoints,
        pieces=tuple(pieces),
        offsets=prefix[:-1],
        total=prefix[-1],
        cyclic=cyclic,
        start=table.start,
    )


def build_piecewise(table: TropicalYearTable, cyclic: bool = True) -> PiecewiseParabola:
    """One parabola per qi, each built from that qi and its successor.

    The 24th qi pairs with qi 1 of the next year when ``cyclic``; otherwise
    it is paired with itself, which makes the last piece linear.
    """
    qis = table.intervals
    pieces = []
    for i, qi in enumerate(qis):
        if i + 1 < len(qis):
            nxt = qis[i + 1]
        else:
            nxt = qis[0] if cyclic else qi
        pieces.append(coefficients(QiPiece(qi.n, nxt.n, qi.delta, nxt.delta)))
    return _assemble(table, pieces, cyclic)


def build_piecewise_linear(table: TropicalYearTable, cyclic: bool = True) -> PiecewiseParabola:
    """Integrated step speeds: constant slope ``delta/n`` on each qi."""
    pieces = [QuadraticPoly(0.0, qi.delta / qi.n, 0.0) for qi in table.intervals]
    return _assemble(table, pieces, cyclic)


def _reduce(pp: PiecewiseParabola, t: float, cyclic: bool) -> tuple[float, float]:
    """Split ``t`` into whole-year carry (du) and an in-year time."""
    year = pp.year_length
    if not math.isfinite(t):
        raise OutOfDomainError(f"t must be finite, got {t!r}")
    if 0.0 <= t <= year:
        return 0.0, t
    if not cyclic:
        raise OutOfDomainError(f"t={t!r} outside [0, {year!r}]")
    k = math.floor(t / year)
    r = t - k * year
    if r < 0.0:
        r = 0.0
    elif r > year:
        r = year
    return k * pp.total, r


def eval_piecewise(pp: PiecewiseParabola, t: float, cyclic: bool | None = None) -> float:
    """Accumulated deviation (du) at time ``t`` days from the table start.

    Pieces cover ``[t_i, t_{i+1})``; ``t == year_length`` yields the total.
    Cyclic evaluation (the default for cyclic builds) wraps ``t`` and carries
    the yearly total so that ``f(t + year) - f(t)`` is constant.
    """
    carry, r = _reduce(pp, t, pp.cyclic if cyclic is None else cyclic)
    bp = pp.breakpoints
    if r == bp[-1]:
        return carry + pp.total
    i = bisect.bisect_right(bp, r) - 1
    return carry + pp.offsets[i] + pp.pieces[i](r - bp[i])


def eval_piecewise_many(pp: PiecewiseParabola, t, cyclic: bool | None = None) -> np.ndarray:
    """Vectorised :func:`eval_piecewise` backed by the batch kernel."""
    cyclic = pp.cyclic if cyclic is None else cyclic
    t = np.asarray(t, dtype=np.float64)
    if not np.all(np.isfinite(t)):
        raise OutOfDomainError("t must be finite")
    year = pp.year_length
    inside = (t >= 0.0) & (t <= year)
    if np.all(inside):
        return kernels.piecewise_eval(pp.breakpoints, pp.coeff_array(), pp.offsets, pp.total, t)
    if not cyclic:
        raise OutOfDomainError(f"t outside [0, {year!r}]")
    k = np.where(inside, 0.0, np.floor(t / year))
    r = np.clip(np.where(inside, t, t - k * year), 0.0, year)
    vals = kernels.piecewise_eval(pp.breakpoints, pp.coeff_array(), pp.offsets, pp.total, r)
    return k * pp.total + vals


class ContinuityRow(NamedTuple):
    breakpoint: float
    value_jump: float
    slope_jump: float


def continuity_report(pp: PiecewiseParabola) -> list[ContinuityRow]:
    """Value and slope jumps (right minus left) at each piece boundary.

    Interior breakpoints are always reported; a cyclic build also reports the
    year wrap, comparing the end of the last piece with the start of the
    first piece one year on.
    """
    bp = pp.breakpoints
    rows = []
    last = len(pp.pieces) - 1
    for i in range(1, len(pp.pieces) + (1 if pp.cyclic else 0)):
        left = pp.pieces[i - 1]
        n_left = bp[i] - bp[i - 1]
        left_value = pp.offsets[i - 1] + left(n_left)
        if i <= last:
            right, right_value = pp.pieces[i], pp.offsets[i]
        else:
            right, right_value = pp.pieces[0], pp.total + pp.offsets[0]
        rows.append(
            ContinuityRow(
                breakpoint=bp[i],
                value_jump=right_value + right(0.0) - left_value,
                slope_jump=right.derivative(0.0) - left.derivative(n_left),
            )
        )
    return rows
