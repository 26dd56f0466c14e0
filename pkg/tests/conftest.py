import pytest

from qsymp.autos import OpTri, Tri
from qsymp.reps import act_word, cm_point

from helpers import necklace

ACCEPTANCE_LINES = []


@pytest.fixture
def sample_point():
    """A fixed n=2 fiber point with v_2 and w_2 both nonzero."""
    base = cm_point(2, 1, [0, 1], [1, 2])
    return act_word([OpTri(necklace({"a*b*": 1}, starred=True)), Tri(necklace({"ab": 1}))], base)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
