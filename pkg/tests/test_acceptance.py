"""Acceptance criteria 1-8, one PASS/FAIL line each.

All comparisons are exact integer equality (tolerance: none); the stated
runtime budgets are enforced inside each criterion.

Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import sys

import pytest

from basepoly.verification import CRITERIA


@pytest.mark.slow
@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


if __name__ == "__main__":
    ok = True
    for fn in CRITERIA:
        res = fn()
        print(res.line(), flush=True)
        ok &= res.passed
    sys.exit(0 if ok else 1)
