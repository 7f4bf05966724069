import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from derivrecon.multiindex import enumerate_indices  # noqa: E402
from derivrecon.polyring import HomPoly  # noqa: E402

small_fraction = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def hompolys(draw, max_n=3, max_d=6, min_d=0):
    n = draw(st.integers(0, max_n))
    d = draw(st.integers(min_d, max_d))
    basis = enumerate_indices(n, d)
    chosen = draw(st.lists(st.sampled_from(basis), max_size=len(basis), unique=True))
    return HomPoly(n, d, {I: draw(small_fraction) for I in chosen})


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
