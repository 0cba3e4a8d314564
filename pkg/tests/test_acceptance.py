"""Acceptance criteria 1-10 at their stated tolerances and runtime budgets.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""
import pytest

from semiflow.verify import CRITERIA, run_criterion

RESULTS = {}


@pytest.mark.parametrize("key", [str(k) for k in range(1, 11)])
def test_criterion(key):
    title, _, budget = CRITERIA[key]
    res = run_criterion(key, seed=42, paths=100_000, workers=4)
    in_time = res.seconds < budget
    ok = res.passed and in_time
    bad = "; ".join(f"{c.name} = {c.value!r} (want {c.target})" for c in res.failed())
    if not in_time:
        bad = (bad + "; " if bad else "") + f"runtime {res.seconds:.1f}s over budget {budget:g}s"
    line = f"criterion {key:>2} {'PASS' if ok else 'FAIL'}  {title} [{res.seconds:.1f}s / {budget:g}s]"
    RESULTS[key] = line + (f"\n      {bad}" if bad else "")
    print(RESULTS[key])
    assert ok, bad
