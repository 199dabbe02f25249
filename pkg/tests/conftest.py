from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def golden() -> dict:
    return json.loads((HERE / "golden" / "derived.json").read_text())


@st.composite
def boards(draw, max_cols=5, max_height=8, allow_zeros=True):
    n = draw(st.integers(min_value=1, max_value=max_cols))
    low = 0 if allow_zeros else 1
    hs = sorted(draw(st.lists(st.integers(low, max_height), min_size=n, max_size=n)))
    if not any(hs):
        hs[-1] = 1
    return tuple(hs)


ms = st.integers(min_value=1, max_value=3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
