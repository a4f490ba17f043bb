import pytest

from webbasis.services.selftest import (counting_suite, cross_evaluator_suite, membership_suite, relations_suite,
                                        run_all, triangularity_suite, wave_suite)


def test_wave_suite():
    report = wave_suite()
    assert report.passed, report.lines()
    assert len(report.checks) == 9


def test_relations_suite():
    report = relations_suite((2,))
    assert report.passed, report.lines()


def test_small_suites():
    for report in (triangularity_suite(((2, 2),)), cross_evaluator_suite(2, 3, 3), membership_suite(2, (2,))):
        assert report.passed, report.lines()


@pytest.mark.slow
def test_counting_suite():
    report = counting_suite()
    assert report.passed, [c.line() for c in report.failures]


@pytest.mark.slow
def test_quick_selftest():
    reports = run_all(quick=True)
    assert all(r.passed for r in reports), [r.summary() for r in reports]
