import sys
import time
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE: list[str] = []


@contextmanager
def criterion(number: int, title: str, budget: float | None = None):
    """Record one PASS/FAIL line for an acceptance criterion."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if ok and budget is not None and elapsed >= budget:
            ok = False
            title += f" (over the {budget:g} s budget)"
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  [{elapsed:.2f} s]"
        ACCEPTANCE.append(line)
        print(line)
    if not ok:
        raise AssertionError(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
