import time

import pytest

_LINES: list[str] = []


class Criterion:
    """Times one acceptance criterion and records a PASS/FAIL line.

    The line is printed immediately and repeated in the terminal summary.
    Exceeding ``limit`` seconds fails the criterion.
    """

    def __init__(self, number: int, title: str, limit: float):
        self.number = number
        self.title = title
        self.limit = limit
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        in_time = elapsed <= self.limit
        ok = exc_type is None and in_time
        reason = "" if exc_type is None else f" | error: {exc_type.__name__}: {str(exc).splitlines()[0][:160]}"
        line = (
            f"{'PASS' if ok else 'FAIL'}  [{self.number:>2}] {self.title}: {self.detail}"
            f" ({elapsed:.1f} s, limit {self.limit:g} s){reason}"
        )
        _LINES.append(line)
        print("\n" + line)
        if exc_type is None and not in_time:
            raise AssertionError(f"criterion {self.number} took {elapsed:.1f} s > {self.limit} s")
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
