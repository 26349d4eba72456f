import pytest

_RESULTS: dict[int, tuple[str, bool, str]] = {}


class AcceptanceRecorder:
    def __call__(self, number: int, title: str, passed: bool, detail: str = "") -> None:
        _RESULTS[number] = (title, bool(passed), detail)
        line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {title}"
        print(line + (f" [{detail}]" if detail else ""))


@pytest.fixture
def acceptance() -> AcceptanceRecorder:
    return AcceptanceRecorder()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, passed, detail = _RESULTS[number]
        line = f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {title}"
        terminalreporter.write_line(line + (f" [{detail}]" if detail else ""))
