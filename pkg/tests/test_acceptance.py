"""End-to-end acceptance run: one line per criterion, then a hard assertion.

Also runnable directly: ``python3 tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from chordal1p.verify import CHECKS

MAX_ORDER = 12


def _line(check, seconds):
    return f"criterion {check.id:2d}: {'PASS' if check.passed else 'FAIL'}  {check.name}  ({seconds:.1f}s)"


@pytest.mark.parametrize("index", range(len(CHECKS)), ids=[f"criterion_{i + 1}" for i in range(len(CHECKS))])
def test_criterion(index, capsys):
    t = time.perf_counter()
    check = CHECKS[index](MAX_ORDER)
    with capsys.disabled():
        print("\n" + _line(check, time.perf_counter() - t))
    assert check.id == index + 1
    assert check.passed, check.detail


def test_every_criterion_is_covered():
    assert len(CHECKS) == 11


if __name__ == "__main__":
    ok = True
    for fn in CHECKS:
        t = time.perf_counter()
        c = fn(MAX_ORDER)
        print(_line(c, time.perf_counter() - t), flush=True)
        ok &= c.passed
    sys.exit(0 if ok else 1)
