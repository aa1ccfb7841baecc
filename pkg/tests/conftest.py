import pytest

from erings.carriers import RATIONALS, make_function_carrier, make_matrix_carrier


@pytest.fixture
def z2():
    return make_function_carrier(2)


@pytest.fixture
def z3():
    return make_function_carrier(3)


@pytest.fixture
def q2g4():
    return make_function_carrier(2, RATIONALS, 4)


@pytest.fixture
def m2():
    return make_matrix_carrier(2)


ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        verdict, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {verdict}  {title}")
