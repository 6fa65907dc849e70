import io

import pytest

from mereovc.tables import DecisionSystem, load_decision_system

# Filled by the acceptance tests; echoed after the run so the per-criterion
# verdict lines survive pytest's output capture.
ACCEPTANCE_VERDICTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)


def load_csv(text: str, **kwargs) -> DecisionSystem:
    return load_decision_system(io.StringIO(text), **kwargs)


@pytest.fixture
def toy_system() -> DecisionSystem:
    """Three objects over three features; consistent; decisions 4, 5, 7."""
    return load_csv(
        "color,shape,size,d\n"
        "red,round,small,4\n"
        "red,square,small,5\n"
        "blue,round,large,7\n"
    )


@pytest.fixture
def inconsistent_system() -> DecisionSystem:
    """Objects 0 and 1 share every feature value but disagree on d."""
    return load_csv(
        "f1,f2,d\n"
        "1,a,4\n"
        "1,a,5\n"
        "2,b,4\n"
    )
