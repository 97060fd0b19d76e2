import numpy as np
import pytest

from helpers import ACCEPTANCE_RESULTS, complete, cycle, path

def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {number:>2}. {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture
def P2():
    return path(2)


@pytest.fixture
def P3():
    return path(3)


@pytest.fixture
def P4():
    return path(4)


@pytest.fixture
def K3():
    return complete(3)


@pytest.fixture
def C4():
    return cycle(4)


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(20240611))
