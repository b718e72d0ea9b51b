import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        verdict = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{verdict}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else ""))
        print(ACCEPTANCE_LINES[-1])
        assert passed, ACCEPTANCE_LINES[-1]

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
