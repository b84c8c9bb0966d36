"""End-to-end battery: each criterion is exact (no tolerances) and
prints a single pass/fail line."""

import pytest

from liepar import acceptance


@pytest.mark.parametrize(
    "index,name,fn",
    [(i + 1, name, fn)
     for i, (name, fn) in enumerate(acceptance.CRITERIA)],
    ids=[name for name, _ in acceptance.CRITERIA],
)
def test_criterion(index, name, fn):
    ok, detail = fn()
    print("criterion %d (%s): %s - %s"
          % (index, name, "PASS" if ok else "FAIL", detail))
    assert ok, "criterion %d (%s) failed: %s" % (index, name, detail)
