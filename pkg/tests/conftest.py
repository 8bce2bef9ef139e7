import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "qec",
    max_examples=int(os.environ.get("QEC_EXAMPLES", "60")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("qec")

import pytest

VERDICTS = pytest.StashKey[list]()


@pytest.fixture
def verdict(request):
    """Record and print one PASS/FAIL line for an acceptance criterion."""
    log = request.config.stash.setdefault(VERDICTS, [])

    def record(number: int, title: str, ok: bool) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
        print(line)
        log.append(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
