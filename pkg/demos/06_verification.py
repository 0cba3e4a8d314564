"""
Running the verification suites
===============================

The same suites back ``semiflow verify``.  Each check carries a reference
string for the statement it exercises.
"""
import sys

from semiflow.verify import SUITES, run_suite

suite = sys.argv[1] if len(sys.argv) > 1 else "geometry"
if suite not in SUITES:
    sys.exit(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
for res in run_suite(suite):
    print(f"[{'PASS' if res.passed else 'FAIL'}] {res.key}: {res.title} ({res.seconds:.1f}s)")
    for c in res.checks:
        flag = "ok " if c.passed else ("BAD" if c.gating else "n/a")
        print(f"   {flag} {c.name}: {c.value!r}  (target {c.target})")
