from hypothesis import settings
from hypothesis import strategies as st

from kazcalc.series import TruncatedSeries

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


def series_strategy(N=24, max_coeff=50, signed=False):
    lo = -max_coeff if signed else 0
    return st.lists(st.integers(lo, max_coeff), min_size=N + 1, max_size=N + 1).map(
        lambda c: TruncatedSeries(tuple(c))
    )


def pytest_terminal_summary(terminalreporter):
    try:
        from tests.test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
