from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from pombasis.parser import read_ideal

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "pombasis" / "fixtures"

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# filled by test_acceptance.py, printed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def load(name: str):
    return read_ideal(FIXTURES / f"{name}.ideal")


@pytest.fixture
def fixture_ideal():
    return load


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
