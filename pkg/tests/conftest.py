import pytest

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a criterion's outcome for the acceptance summary.

    Usage: ``criterion("AC3 star group axioms", ok, detail)``; the call also
    asserts ``ok`` so the test fails with the same detail.
    """

    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS[name] = (ok, detail)
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda n: int(n.split()[0][2:])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
