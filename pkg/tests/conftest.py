import contextlib

import pytest

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Context manager recording one acceptance criterion as PASS or FAIL."""

    @contextlib.contextmanager
    def record(name, detail=""):
        info = {"detail": detail}
        try:
            yield info
        except BaseException:
            _criteria.append((name, False, info["detail"]))
            raise
        _criteria.append((name, True, info["detail"]))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
