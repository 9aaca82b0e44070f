"""Acceptance criteria, one test each.  Every test prints a single pass/fail line.

Run alone with ``pytest tests/test_acceptance.py -s -q`` (or ``cosetlattice verify-paper``).
"""

import pytest

from cosetlattice import _kernels, verify

CRITERIA = {
    1: lambda e: verify.criterion_1(e),
    2: lambda e: verify.criterion_2(e),
    3: lambda e: verify.criterion_3(e),
    4: lambda e: verify.criterion_4(e),
    5: lambda e: verify.criterion_5(),
    6: lambda e: verify.criterion_6(),
    7: lambda e: verify.criterion_7(),
    8: lambda e: verify.criterion_8(),
    9: lambda e: verify.criterion_9(),
    10: lambda e: verify.criterion_10(),
}


@pytest.fixture(scope="module", autouse=True)
def _compiled():
    # keep JIT compilation out of the timed criteria
    _kernels.warmup()


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, fixtures, capsys):
    c = CRITERIA[number](fixtures)
    with capsys.disabled():
        print(f"\n{c.line}")
    assert c.status == verify.PASS, c.line
