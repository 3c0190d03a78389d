import pytest
from hypothesis import HealthCheck, settings

from jacobson.arith import GF, QQ

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=[QQ, GF(101), GF(5)], ids=["Q", "F101", "F5"])
def field(request):
    return request.param
