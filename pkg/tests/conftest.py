import sys
from pathlib import Path

import pytest

from jetdet.algebra import MonomialOrder, Polynomial, VariableTable

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = []


@pytest.fixture
def xy():
    """Q[x, y] with x > y."""
    order = MonomialOrder(VariableTable.from_names(["x", "y"]))
    return order, Polynomial.variable(order, "x"), Polynomial.variable(order, "y")


@pytest.fixture
def record_criterion():
    def record(label, ok, detail=""):
        CRITERIA.append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
