"""Double-gnomon island survey.

Two gnomons of equal height ``h`` stand ``separation`` apart on a line
pointing at the island; the front one is nearer.  Sighting the island summit
from ground level past each gnomon tip fixes the two shadow-like lengths
``front_shadow`` (AE) and ``rear_shadow`` (CF).  Then::

    height   = h + h * separation / (CF - AE)
    distance = AE * separation / (CF - AE)

with ``distance`` measured from the front gnomon to the island base.

All functions use plain arithmetic, so passing :class:`fractions.Fraction`
fields gives exact results.  No length unit is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from numbers import Real

from .errors import DegenerateSightlinesError, ValidationError

__all__ = [
    "GnomonSurvey",
    "IslandScene",
    "island_height",
    "island_distance",
    "simulate_shadows",
    "verify_by_coordinates",
]


def _require_positive(obj) -> None:
    for f in fields(obj):
        v = getattr(obj, f.name)
        if not isinstance(v, Real) or not v > 0:
            raise ValidationError(f"{f.name} must be a positive number, got {v!r}")


@dataclass(frozen=True)
class GnomonSurvey:
    """Measured quantities.  ``rear_shadow > front_shadow`` is checked lazily
    by the solvers, which report a degenerate configuration otherwise."""

    gnomon_height: Real
    separation: Real
    front_shadow: Real
    rear_shadow: Real

    def __post_init__(self) -> None:
        _require_positive(self)

    def scaled(self, factor: Real) -> GnomonSurvey:
        return GnomonSurvey(*(getattr(self, f.name) * factor for f in fields(self)))


@dataclass(frozen=True)
class IslandScene:
    height: Real
    distance: Real
    gnomon_height: Real
    separation: Real

    def __post_init__(self) -> None:
        _require_positive(self)


def _shadow_gap(survey: GnomonSurvey):
    gap = survey.rear_shadow - survey.front_shadow
    if gap <= 0:
        raise DegenerateSightlinesError(
            f"rear shadow {survey.rear_shadow!r} must exceed front shadow {survey.front_shadow!r}; "
            "sightlines are parallel or diverge"
        )
    return gap


def island_height(survey: GnomonSurvey):
    h = survey.gnomon_height
    return h + h * survey.separation / _shadow_gap(survey)


def island_distance(survey: GnomonSurvey):
    return survey.front_shadow * survey.separation / _shadow_gap(survey)


def simulate_shadows(scene: IslandScene) -> GnomonSurvey:
    """Forward model: the shadows a surveyor would measure for ``scene``."""
    h, big_h = scene.gnomon_height, scene.height
    if big_h <= h:
        raise ValidationError(f"island height {big_h!r} must exceed gnomon height {h!r}")
    rise = big_h - h
    return GnomonSurvey(
        gnomon_height=h,
        separation=scene.separation,
        front_shadow=h * scene.distance / rise,
        rear_shadow=h * (scene.distance + scene.separation) / rise,
    )


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def verify_by_coordinates(survey: GnomonSurvey) -> tuple[Fraction, Fraction]:
    """Intersect the two sightlines exactly and return ``(height, distance)``.

    Frame: the front gnomon foot is the origin and ``x`` grows away from the
    island.  Eye points sit on the ground at ``E = (AE, 0)`` and
    ``F = (AC + CF, 0)``; gnomon tips at ``B = (0, h)`` and ``D = (AC, h)``.
    The summit is the intersection of lines EB and FD; it lies at negative
    ``x``, so the distance is ``-x``.  Inputs are converted to
    :class:`~fractions.Fraction` (floats exactly, via their binary value).
    """
    h = Fraction(survey.gnomon_height)
    ac = Fraction(survey.separation)
    ae = Fraction(survey.front_shadow)
    cf = Fraction(survey.rear_shadow)

    e, b = (ae, Fraction(0)), (Fraction(0), h)
    f, d = (ac + cf, Fraction(0)), (ac, h)
    r = (b[0] - e[0], b[1] - e[1])
    s = (d[0] - f[0], d[1] - f[1])
    denom = _cross(r[0], r[1], s[0], s[1])
    if denom == 0:
        raise DegenerateSightlinesError("sightlines are parallel")
    # E + u*r = F + v*s
    u = _cross(f[0] - e[0], f[1] - e[1], s[0], s[1]) / denom
    x, y = e[0] + u * r[0], e[1] + u * r[1]
    if y <= 0 or x >= 0:
        raise DegenerateSightlinesError("sightlines meet behind the surveyors, not at an island")
    return y, -x
