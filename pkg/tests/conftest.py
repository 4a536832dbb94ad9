"""Shared fixtures: the worked example's propositions and input files."""

from __future__ import annotations

import sys
from fractions import Fraction

import pytest

from klogic import IntervalProposition, ObservableKind


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance PASS/FAIL lines where capture cannot hide them."""
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)

DEMO_DECL = """\
# particle on a line, natural units
bound 1/2
atom p momentum [0, 1/6]
atom q position [-1, 1]
atom r position [1, 3]
"""

DEMO_THEORY = """\
# knowledge of momentum p excludes knowledge of either position
K(p) -> !K(q)
K(p) -> !K(r)
"""


@pytest.fixture
def demo_props() -> tuple[IntervalProposition, ...]:
    return (
        IntervalProposition("p", ObservableKind.MOMENTUM, Fraction(0), Fraction(1, 6)),
        IntervalProposition("q", ObservableKind.POSITION, Fraction(-1), Fraction(1)),
        IntervalProposition("r", ObservableKind.POSITION, Fraction(1), Fraction(3)),
    )


@pytest.fixture
def demo_decl(tmp_path) -> str:
    path = tmp_path / "demo.decl"
    path.write_text(DEMO_DECL, encoding="utf-8")
    return str(path)


@pytest.fixture
def demo_theory(tmp_path) -> str:
    path = tmp_path / "demo.thy"
    path.write_text(DEMO_THEORY, encoding="utf-8")
    return str(path)
