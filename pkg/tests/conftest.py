import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from weylbott import RootSystem, Subsystem, get_preset
from weylbott.parabolic import make_setup


@pytest.fixture(scope="session")
def e6():
    return RootSystem(get_preset("E6-paper"))


@pytest.fixture(scope="session")
def e6_full(e6):
    return Subsystem.full(6)


@pytest.fixture(scope="session")
def e6_levi():
    return Subsystem.levi(6, 1)


@pytest.fixture(scope="session")
def cayley(e6):
    return make_setup(e6, 1)


@pytest.fixture(scope="session")
def cayley27_report():
    from weylbott.verify import builtin_collection, verify_strong_exceptional

    return verify_strong_exceptional(builtin_collection("cayley27"))


@pytest.fixture(scope="session")
def b4():
    return RootSystem(get_preset("B4"))


@pytest.fixture(scope="session")
def quadric7(b4):
    return make_setup(b4, 1)
