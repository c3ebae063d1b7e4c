"""Piecewise parabolic interpolation of solar deviation tables and the
double-gnomon island survey, with independent checks for both."""

from .errors import (
    ArtifactError,
    DegenerateSightlinesError,
    InvalidModelError,
    InvalidNodesError,
    NumericalFailure,
    OutOfDomainError,
    TableFormatError,
    ValidationError,
)
from .haidao import (
    GnomonSurvey,
    IslandScene,
    island_distance,
    island_height,
    simulate_shadows,
    verify_by_coordinates,
)
from .interpolation import (
    QiPiece,
    QuadraticPoly,
    SpeedLine,
    coefficients,
    construct_from_speed_line,
    derivative_at,
    eval_dayan,
    eval_huangji,
    lagrange_quadratic,
    newton_quadratic,
    second_difference,
)
from .kernels import BACKEND
from .piecewise import (
    PiecewiseParabola,
    QiInterval,
    TropicalYearTable,
    build_piecewise,
    build_piecewise_linear,
    continuity_report,
    eval_piecewise,
    eval_piecewise_many,
)
from .solar import (
    QiDivisionMode,
    SolarModel,
    compare_methods,
    degrees_to_du,
    du_to_degrees,
    error_sweep,
    make_qi_table,
    true_longitude,
)
from .tableio import parse_qi_table, write_qi_table

__version__ = "0.1.0"
