"""The acceptance suite: every criterion runs at its stated (exact) bound.

Run with ``pytest tests/test_acceptance.py -s`` to see one pass/fail line
per criterion; the same checks back ``gsb selftest``.
"""

import time

import pytest

from gsb.selftest import CRITERIA


@pytest.mark.parametrize(
    "name,criterion", CRITERIA, ids=[f"criterion_{name.split()[0]}" for name, _ in CRITERIA]
)
def test_acceptance(name, criterion):
    start = time.time()
    passed, detail = criterion()
    elapsed = time.time() - start
    print(f"{'PASS' if passed else 'FAIL'}  criterion {name}  [{elapsed:.1f}s]  {detail}")
    assert passed, f"criterion {name}: {detail}"
