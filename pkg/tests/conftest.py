import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

_acceptance_lines: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance verdict line; printed in the terminal summary."""

    def record(number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
        status = "PASS" if ok and elapsed < limit else "FAIL"
        line = f"{status} criterion {number}: {title} [{elapsed:.1f}s / {limit:.0f}s]"
        if detail:
            line += f" {detail}"
        _acceptance_lines.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
