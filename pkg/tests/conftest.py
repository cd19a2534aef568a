import pytest

from conalign import parse_instance
from conalign.constructions import SINGLE_C4, chain

CHAIN2 = """\
g1 v0 v1
g1 v1 v2
g2 a1 b1
g2 a2 b2
sim v0 a1
sim v1 b1
sim v1 a2
sim v2 b2
"""

# acceptance criterion id -> summary line, filled by test_acceptance.py
ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def single():
    return parse_instance(SINGLE_C4)


@pytest.fixture
def chain2():
    return parse_instance(CHAIN2)


@pytest.fixture
def chain3():
    return chain(3)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(ACCEPTANCE[key])
