from pathlib import Path

import pytest

from jensen.group import closure_from_generators, load_group_file, symmetric_group
from jensen.perm import parse_cycles

DATA = Path(__file__).parent / "data"

# (criterion number, description, outcome) collected from test_acceptance
ACCEPTANCE: list[tuple[int, str, str]] = []


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def klein4():
    return closure_from_generators([parse_cycles("(1 2)(3 4)"), parse_cycles("(1 3)(2 4)")], name="klein4")


@pytest.fixture(scope="session")
def c4():
    return closure_from_generators([parse_cycles("(1 2 3 4)")], name="C4")


@pytest.fixture(scope="session")
def z2xz4():
    return load_group_file(DATA / "z2xz4.grp")


@pytest.fixture(scope="session")
def quaternion():
    # regular representation of Q8 inside S8
    return closure_from_generators(
        [parse_cycles("(1 2 4 7)(3 6 8 5)"), parse_cycles("(1 3 4 8)(2 5 7 6)")], name="Q8"
    )


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    ACCEPTANCE.append((number, text, outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{outcome}] criterion {number}: {text}")
