import pytest

from etalab.catalog import load_catalog_group
from etalab.table import character_table

# filled by test_acceptance.py; printed one line per criterion at the end
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def record_acceptance(number: int, passed: bool, detail: str):
    ACCEPTANCE_RESULTS[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[number]
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] criterion {number}: {detail}")


@pytest.fixture(scope="session")
def d8():
    return load_catalog_group("d8")


@pytest.fixture(scope="session")
def q8():
    return load_catalog_group("q8")


@pytest.fixture(scope="session")
def es27():
    return load_catalog_group("es27")


@pytest.fixture(scope="session")
def d8_table(d8):
    return character_table(d8)


@pytest.fixture(scope="session")
def es27_table(es27):
    return character_table(es27)
