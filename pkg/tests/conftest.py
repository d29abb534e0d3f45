import itertools
from collections import Counter

import pytest
from scipy.stats import chi2

from ucycle.rng import RandomStream


def chi_square_ok(counts: Counter, outcomes, significance=0.001):
    """Pearson statistic over ``outcomes`` against a uniform expectation."""
    outcomes = list(outcomes)
    total = sum(counts.values())
    assert set(counts) <= set(outcomes), "sample outside the outcome set"
    expected = total / len(outcomes)
    stat = sum((counts[o] - expected) ** 2 / expected for o in outcomes)
    threshold = chi2.ppf(1 - significance, len(outcomes) - 1)
    return stat, threshold, stat < threshold


def all_words(k, n):
    return itertools.product(range(k), repeat=n)


@pytest.fixture
def stream():
    return RandomStream(20240601)


ACCEPTANCE: dict = {}


def record(criterion: int, ok: bool, detail: str):
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
