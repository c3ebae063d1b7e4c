"""Quadratic interpolation over two consecutive qi intervals.

A piece is described by the lengths ``n1``, ``n2`` (days) of two consecutive
qi and the accumulated deviations ``d1``, ``d2`` (du) of the true sun from the
mean sun over each of them.  The interpolant passes through
``(0, 0)``, ``(n1, d1)`` and ``(n1 + n2, d1 + d2)``.

Two independent routes lead to the same parabola:

* the closed form :func:`eval_dayan`, written with the weighted second
  difference :func:`second_difference`;
* :func:`construct_from_speed_line`, which lets the solar speed vary linearly
  (or day by day as an arithmetic sequence) and integrates it.

:func:`lagrange_quadratic` and :func:`newton_quadratic` are generic oracles
that know nothing about either route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import InvalidNodesError, NumericalFailure, OutOfDomainError, ValidationError

__all__ = [
    "QiPiece",
    "QuadraticPoly",
    "SpeedLine",
    "second_difference",
    "eval_dayan",
    "eval_huangji",
    "coefficients",
    "derivative_at",
    "lagrange_quadratic",
    "newton_quadratic",
    "construct_from_speed_line",
]


def _check_finite(**values: float) -> None:
    for name, v in values.items():
        if not math.isfinite(v):
            raise ValidationError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class QiPiece:
    """Lengths and deviations of two consecutive qi."""

    n1: float
    n2: float
    d1: float
    d2: float

    def __post_init__(self) -> None:
        _check_finite(n1=self.n1, n2=self.n2, d1=self.d1, d2=self.d2)
        if self.n1 <= 0 or self.n2 <= 0:
            raise ValidationError(
                f"qi lengths must be positive, got n1={self.n1!r}, n2={self.n2!r}"
            )


@dataclass(frozen=True)
class QuadraticPoly:
    """``a0 + a1*x + a2*x**2``."""

    a0: float
    a1: float
    a2: float

    def __post_init__(self) -> None:
        _check_finite(a0=self.a0, a1=self.a1, a2=self.a2)

    def __call__(self, x: float) -> float:
        return self.a0 + x * (self.a1 + x * self.a2)

    def derivative(self, x: float) -> float:
        return self.a1 + 2.0 * self.a2 * x

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a0, self.a1, self.a2)


@dataclass(frozen=True)
class SpeedLine:
    """Solar speed ``a + d*t`` in du/day, ``t`` in days from the piece start."""

    a: float
    d: float

    def __post_init__(self) -> None:
        _check_finite(a=self.a, d=self.d)

    def __call__(self, t: float) -> float:
        return self.a + self.d * t


def second_difference(piece: QiPiece) -> float:
    """Weighted second difference of the two deviations.

    Equal to ``d1 - d2`` when ``n1 == n2``.
    """
    n1, n2 = piece.n1, piece.n2
    return (2.0 * n1 * n2 / (n1 + n2)) * (piece.d1 / n1 - piece.d2 / n2)


def _check_domain(x: float, n1: float, strict: bool) -> None:
    if not math.isfinite(x):
        raise OutOfDomainError(f"x must be finite, got {x!r}")
    if strict and not (0.0 <= x < n1):
        raise OutOfDomainError(f"x={x!r} outside the half-open interval [0, {n1!r})")


def eval_dayan(piece: QiPiece, x: float, strict: bool = False) -> float:
    """Accumulated deviation ``x`` days into the first qi of ``piece``.

    By default any finite ``x`` is accepted, which lets callers check the
    nodes at ``n1`` and ``n1 + n2``.  With ``strict=True`` only
    ``0 <= x < n1`` is allowed.
    """
    _check_domain(x, piece.n1, strict)
    n1 = piece.n1
    return (x / n1) * piece.d1 + (1.0 - x / n1) * (x / (2.0 * piece.n2)) * second_difference(piece)


def eval_huangji(n: float, d1: float, d2: float, x: float, strict: bool = False) -> float:
    """Equal-interval form: ``n1 == n2 == n`` and second difference ``d1 - d2``."""
    QiPiece(n, n, d1, d2)
    _check_domain(x, n, strict)
    return (x / n) * d1 + (1.0 - x / n) * (x / (2.0 * n)) * (d1 - d2)


def coefficients(piece: QiPiece) -> QuadraticPoly:
    """Expanded power-basis coefficients of :func:`eval_dayan`."""
    sd = second_difference(piece)
    a1 = piece.d1 / piece.n1 + sd / (2.0 * piece.n2)
    a2 = -sd / (2.0 * piece.n1 * piece.n2)
    return QuadraticPoly(0.0, a1, a2)


def derivative_at(piece: QiPiece, x: float) -> float:
    """Instantaneous solar speed excess (du/day) at ``x``."""
    return coefficients(piece).derivative(x)


def _distinct(x0, x1, x2) -> bool:
    return not (np.any(x0 == x1) or np.any(x0 == x2) or np.any(x1 == x2))


def lagrange_quadratic(x0, y0, x1, y1, x2, y2, x):
    """Value at ``x`` of the parabola through three points, Lagrange form.

    Works elementwise on floats, numpy arrays or :class:`fractions.Fraction`.
    """
    if not _distinct(x0, x1, x2):
        raise InvalidNodesError(f"interpolation nodes must be distinct: {x0!r}, {x1!r}, {x2!r}")
    l0 = (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2))
    l1 = (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2))
    l2 = (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1))
    return y0 * l0 + y1 * l1 + y2 * l2


def newton_quadratic(x0, y0, x1, y1, x2, y2, x):
    """Same parabola as :func:`lagrange_quadratic`, via divided differences."""
    if not _distinct(x0, x1, x2):
        raise InvalidNodesError(f"interpolation nodes must be distinct: {x0!r}, {x1!r}, {x2!r}")
    f01 = (y1 - y0) / (x1 - x0)
    f12 = (y2 - y1) / (x2 - x1)
    f012 = (f12 - f01) / (x2 - x0)
    return y0 + (x - x0) * (f01 + (x - x1) * f012)


def _solve2(a11, a12, a21, a22, b1, b2):
    det = a11 * a22 - a12 * a21
    if det == 0:
        raise NumericalFailure("singular speed-line system")
    return (b1 * a22 - a12 * b2) / det, (a11 * b2 - a21 * b1) / det


def construct_from_speed_line(
    piece: QiPiece, mode: Literal["continuous", "discrete"] = "continuous"
) -> tuple[SpeedLine, QuadraticPoly]:
    """Rebuild the parabola by integrating a linearly changing solar speed.

    ``continuous``: the speed ``v(t) = a + d*t`` integrates to ``d1`` over
    ``[0, n1]`` and to ``d2`` over ``[n1, n1 + n2]``; the returned polynomial
    is ``F(x) = a*x + d*x**2/2``.

    ``discrete``: the daily speeds ``a + k*d`` (``k = 0, 1, ...``) sum to
    ``d1`` over the first ``n1`` days and to ``d2`` over the next ``n2``
    days; the returned polynomial is the partial sum
    ``S(x) = a*x + d*x*(x - 1)/2``.  Requires integer day counts.
    """
    n1, n2 = piece.n1, piece.n2
    if mode == "continuous":
        # integral of t over [n1, n1 + n2] is n2*(2*n1 + n2)/2
        a, d = _solve2(n1, n1 * n1 / 2.0, n2, n2 * (2.0 * n1 + n2) / 2.0, piece.d1, piece.d2)
        return SpeedLine(a, d), QuadraticPoly(0.0, a, d / 2.0)
    if mode == "discrete":
        if n1 != int(n1) or n2 != int(n2):
            raise ValidationError(f"discrete construction needs whole days, got n1={n1!r}, n2={n2!r}")
        m1, m2 = int(n1), int(n2)
        # sum_{k=0}^{m-1} k = m(m-1)/2
        tri1 = m1 * (m1 - 1) // 2
        tri12 = (m1 + m2) * (m1 + m2 - 1) // 2
        a, d = _solve2(m1, tri1, m2, tri12 - tri1, piece.d1, piece.d2)
        return SpeedLine(a, d), QuadraticPoly(0.0, a - d / 2.0, d / 2.0)
    raise ValidationError(f"unknown construction mode {mode!r}")
