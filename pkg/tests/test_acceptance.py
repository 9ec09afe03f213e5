"""Acceptance gate: every headline criterion at its stated tolerance.

Run with ``pytest -s tests/test_acceptance.py`` to see the one-line
pass/fail verdicts, or ``dicolor verify --suite all`` for the same table
from the CLI.
"""

import pytest

from dicolor.acceptance import CHECKS, SUITES, format_csv, format_table, run_suite


@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number):
    row = CHECKS[number](0)
    status = "PASS" if row.passed else "FAIL"
    print(f"{status} criterion {row.number:02d} {row.name}: {row.detail} ({row.seconds:.2f}s)")
    assert row.passed, f"criterion {row.number} ({row.name}): {row.detail}"
    assert row.seconds < row.limit


def test_suite_partition_covers_all():
    combined = sorted(sum((list(SUITES[s]) for s in ("core", "sparse", "orient", "kneser")), []))
    assert combined == sorted(SUITES["all"])


def test_formatters_smoke():
    rows = run_suite("kneser")
    table = format_table(rows)
    csv_text = format_csv(rows)
    assert "PASS" in table or "FAIL" in table
    assert csv_text.startswith("number,name,passed")
    assert csv_text.count("\n") == len(rows) + 1
