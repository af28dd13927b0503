"""The eight acceptance criteria at their stated tolerances.

Each test prints a single pass/fail line; the lines are repeated in the
terminal summary so they appear in plain ``pytest -v`` output.
"""
import pytest

from srho.acceptance import CRITERIA, run_criterion

LINES: dict[int, str] = {}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = run_criterion(number)
    LINES[number] = result.line()
    print(result.line())
    assert result.passed, result.line()
