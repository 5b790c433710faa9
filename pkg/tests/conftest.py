import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lambshift.constants import PhysicalConstants, atom_from_constants  # noqa: E402
from lambshift.radiative import RadiativeModel  # noqa: E402


@pytest.fixture(scope="session")
def constants():
    return PhysicalConstants()


@pytest.fixture(scope="session")
def hydrogen(constants):
    return atom_from_constants(constants, "H")


@pytest.fixture(scope="session")
def deuterium(constants):
    return atom_from_constants(constants, "D")


@pytest.fixture(scope="session")
def model(constants):
    return RadiativeModel.build(constants.alpha)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
