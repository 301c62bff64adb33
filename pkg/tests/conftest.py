import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402

from dyckposet.paths import DyckWord  # noqa: E402


def dyck_words(max_n=7, min_n=0):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.sampled_from(oracles.dyck_strings(n)).map(DyckWord)
    )


ACCEPTANCE_RESULTS = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    ACCEPTANCE_RESULTS.append((number, title, call.excinfo is None, call.duration))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, duration in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} ({duration:.2f}s)")
