import time
from contextlib import contextmanager

import pytest

from higher_catalan import gluing, series

_results = {}


def _clear_caches():
    series.solve_z.cache_clear()
    gluing._oracle_serial.cache_clear()
    gluing._matching_block.cache_clear()


@pytest.fixture
def criterion():
    """Run a block as numbered acceptance criterion with a wall-clock limit."""

    @contextmanager
    def run(number, title, limit):
        _clear_caches()
        _results[number] = (title, limit, None, False)
        start = time.perf_counter()
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < limit
        _results[number] = (title, limit, elapsed, ok)
        assert ok, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, limit, elapsed, ok = _results[number]
        took = "n/a" if elapsed is None else f"{elapsed:.2f}s"
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {number:2d}: {title} ({took}, limit {limit}s)")
