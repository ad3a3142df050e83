import pytest

_CRITERIA: list[str] = []


class CriterionLog:
    """Records one PASS/FAIL line per acceptance check, shown in the terminal summary."""

    def check(self, label: str, value: float, target: float, tol: float) -> bool:
        ok = abs(value - target) <= tol
        line = f"{'PASS' if ok else 'FAIL'}  {label}: got {value:.6g}, want {target:g} +- {tol:g}"
        _CRITERIA.append(line)
        print(line)
        return ok

    def record(self, label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f": {detail}" if detail else "")
        _CRITERIA.append(line)
        print(line)
        return ok


@pytest.fixture
def criteria():
    return CriterionLog()


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
