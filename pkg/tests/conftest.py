import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from socialcloud.graph import build_network

# Acceptance outcomes, filled by tests in test_acceptance.py and printed at the
# end of the session as one line per criterion.
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@st.composite
def networks(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_network(n, chosen)


sharing_constants = st.fractions(min_value=Fraction(1, 50), max_value=1, max_denominator=50)


@pytest.fixture
def record_acceptance():
    def record(key: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[key] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        line = f"{'PASS' if ok else 'FAIL'}  {key}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
