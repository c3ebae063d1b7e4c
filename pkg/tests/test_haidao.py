from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact import (
    DegenerateSightlinesError,
    GnomonSurvey,
    IslandScene,
    ValidationError,
    island_distance,
    island_height,
    simulate_shadows,
    verify_by_coordinates,
)

positive = st.fractions(min_value=Fraction(1, 100), max_value=1000, max_denominator=1000)


@st.composite
def scenes(draw):
    h = draw(positive)
    return IslandScene(h + draw(positive), draw(positive), h, draw(positive))


@st.composite
def surveys(draw):
    front = draw(positive)
    return GnomonSurvey(draw(positive), draw(positive), front, front + draw(positive))


SEA_ISLAND = GnomonSurvey(5, 1000, 123, 127)
UNIT = GnomonSurvey(1, 1, 1, 2)


class TestFormula:
    def test_sea_island(self):
        assert island_height(SEA_ISLAND) == 1255
        assert island_distance(SEA_ISLAND) == 30750

    def test_unit(self):
        assert island_height(UNIT) == 2
        assert island_distance(UNIT) == 1

    @pytest.mark.parametrize("front, rear", [(127, 127), (128, 127)])
    def test_degenerate(self, front, rear):
        s = GnomonSurvey(5, 1000, front, rear)
        with pytest.raises(DegenerateSightlinesError):
            island_height(s)
        with pytest.raises(DegenerateSightlinesError):
            island_distance(s)
        with pytest.raises(DegenerateSightlinesError):
            verify_by_coordinates(s)

    @pytest.mark.parametrize("bad", [(0, 1, 1, 2), (1, -1, 1, 2), (1, 1, 0, 2), (1, 1, 1, "2")])
    def test_invalid_survey(self, bad):
        with pytest.raises(ValidationError):
            GnomonSurvey(*bad)


class TestCoordinates:
    def test_sea_island(self):
        assert verify_by_coordinates(SEA_ISLAND) == (Fraction(1255), Fraction(30750))

    def test_unit(self):
        assert verify_by_coordinates(UNIT) == (Fraction(2), Fraction(1))

    def test_float_inputs_are_exact_binary(self):
        h, d = verify_by_coordinates(GnomonSurvey(0.5, 2.0, 1.0, 1.25))
        assert (h, d) == (Fraction(9, 2), Fraction(8))

    @given(surveys())
    def test_formula_matches_intersection_exactly(self, survey):
        assert verify_by_coordinates(survey) == (island_height(survey), island_distance(survey))


class TestSimulate:
    def test_sea_island(self):
        s = simulate_shadows(IslandScene(1255, 30750, 5, 1000))
        assert (s.front_shadow, s.rear_shadow) == (123, 127)

    def test_double_height(self):
        s = simulate_shadows(IslandScene(Fraction(10), Fraction(7), Fraction(5), Fraction(3)))
        assert s.front_shadow == 7

    def test_island_not_above_gnomon(self):
        with pytest.raises(ValidationError):
            simulate_shadows(IslandScene(5, 100, 5, 10))

    @given(scenes())
    def test_roundtrip_exact(self, scene):
        s = simulate_shadows(scene)
        assert s.rear_shadow > s.front_shadow
        assert island_height(s) == scene.height
        assert island_distance(s) == scene.distance

    @given(scenes())
    def test_roundtrip_float(self, scene):
        fs = IslandScene(*(float(getattr(scene, k)) for k in ("height", "distance", "gnomon_height", "separation")))
        assert island_height(simulate_shadows(fs)) == pytest.approx(float(scene.height), rel=1e-9)


class TestProperties:
    @given(surveys(), st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50))
    def test_scale_invariance(self, survey, lam):
        scaled = survey.scaled(lam)
        assert island_height(scaled) == lam * island_height(survey)
        assert island_distance(scaled) == lam * island_distance(survey)

    @given(surveys(), positive)
    def test_height_decreases_with_shadow_gap(self, survey, extra):
        wider = GnomonSurvey(survey.gnomon_height, survey.separation, survey.front_shadow, survey.rear_shadow + extra)
        assert island_height(wider) < island_height(survey)
