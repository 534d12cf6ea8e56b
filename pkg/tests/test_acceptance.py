"""Acceptance suite: one test per criterion, at the stated tolerances.

The criterion bodies live in :mod:`evenrev.selftest` so the command line can
run the identical checks.  Criterion 11b is a strict expected failure: the
quadratic inverse provably decays like (1/3)**k, slower than the nominal
certificate base 3 - 2*sqrt(2) (see the test module docstring there).
"""

import pytest

from evenrev.selftest import criteria

_CRITERIA = {c.cid: c for c in criteria()}


@pytest.mark.parametrize(
    "cid", [c.cid for c in criteria() if not c.known_failure], ids=lambda cid: f"criterion-{cid}"
)
def test_criterion(cid):
    crit = _CRITERIA[cid]
    detail = crit.run()
    print(f"criterion {cid} ({crit.title}): PASS [{detail}]")


@pytest.mark.xfail(
    strict=True,
    reason=_CRITERIA["11b"].known_failure,
)
def test_criterion_11b_quadratic_certificate_bound():
    crit = _CRITERIA["11b"]
    detail = crit.run()
    print(f"criterion 11b ({crit.title}): PASS [{detail}]")
