"""Acceptance gate: every headline guarantee of the package, one pass/fail
line each.

Each entry below runs one named verification suite from
:mod:`divcolor.verify` — the same suites exposed by ``divcolor verify`` — and
fails with the labels of any violated checks.  Exact claims run in rational
arithmetic (zero tolerance); floating-point claims state their tolerance in
the suite itself; statistical claims use fixed seeds and documented margins.
"""

import pytest

from divcolor import verify

CRITERIA = [
    ("kernel-table", "kernel dimension table and n=3 basis direction, exact"),
    ("witnesses", "witness-pair coloring equalities and inequalities, exact"),
    ("represent", "n=3 characterization round-trip on 1000 seeded measures"),
    ("dominates-oracle", "max-flow domination oracle vs up-set enumeration"),
    ("domination-formulas", "domination thresholds certified on windows"),
    ("couplings", "FK-Ising and fuzzy-Potts coupling identities, 1e-10"),
    ("chains", "Markov chain correspondence and conditional run laws"),
    ("exchangeable", "paint-box identities, decomposition, uniqueness audits"),
    ("counterexamples", "association and membership counterexample fixtures"),
    ("samplers", "seeded sampler statistics within stated margins"),
]


@pytest.mark.parametrize(
    "suite,description", CRITERIA, ids=[name for name, _ in CRITERIA]
)
def test_acceptance(suite, description):
    checks = verify.run_suite(suite)
    assert checks, f"suite {suite!r} produced no checks"
    failed = [c for c in checks if not c.passed]
    verdict = "FAIL" if failed else "PASS"
    print(f"{verdict}  {suite}: {description} ({len(checks) - len(failed)}/{len(checks)})")
    if failed:
        lines = "\n".join(
            f"  FAIL {c.label}" + (f"  [{c.detail}]" if c.detail else "")
            for c in failed
        )
        pytest.fail(f"{len(failed)} check(s) failed in suite {suite!r}:\n{lines}")
