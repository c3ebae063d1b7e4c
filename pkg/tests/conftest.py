import numpy as np
import pytest
from hypothesis import strategies as st

from artifact import QiPiece

lengths = st.floats(min_value=0.5, max_value=40.0, allow_nan=False, allow_infinity=False)
deviations = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def pieces(draw):
    return QiPiece(draw(lengths), draw(lengths), draw(deviations), draw(deviations))


def random_pieces(count, seed):
    """Plain-RNG pieces for the fixed-size sweeps."""
    rng = np.random.default_rng(seed)
    n = rng.uniform(0.5, 40.0, size=(count, 2))
    d = rng.uniform(-10.0, 10.0, size=(count, 2))
    return [QiPiece(*map(float, (a, b, c, e))) for (a, b), (c, e) in zip(n, d)]


def rel_close(actual, expected, tol):
    """|actual - expected| <= tol * max(1, |expected|)."""
    return abs(actual - expected) <= tol * max(1.0, abs(expected))


_acceptance_lines = []


@pytest.fixture
def acceptance_report():
    def record(number, name, ok, detail=""):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {name}  {detail}".rstrip())
        assert ok, f"criterion {number} ({name}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
