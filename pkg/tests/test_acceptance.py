"""The acceptance gate: one test per criterion, printing a pass/fail line.

Criterion 12's optional long-running targets (stored data for the largest
sporadic groups) report "undecided" rather than failing when the data is not
available; everything else must pass, inside its stated time budget.
"""
import pytest

from ut_lab import verify

from conftest import record_acceptance


@pytest.mark.parametrize("criterion", verify.CRITERIA, ids=lambda c: c.cid)
def test_criterion(criterion):
    result = verify.run_criterion(criterion)
    record_acceptance(result.line())
    assert result.elapsed_s < criterion.budget_s, (
        f"{criterion.cid} exceeded its {criterion.budget_s}s budget"
    )
    if criterion.cid == "C12":
        # optional targets may be undecided (missing bundled data), never wrong
        assert result.ok is not False, result.detail
    else:
        assert result.ok is True, result.detail
