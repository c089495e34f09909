# (C) 2026 kdyck contributors
from unittest import mock

import pytest

from kdyck import verify
from kdyck.config import KDyckConfig
from kdyck.errors import KDyckError
from kdyck.paths import Partition, parse_path


def test_hard_cap():
    with pytest.raises(RuntimeError):
        verify.Verifier(KDyckConfig(verify_hard_cap=10), 11)


def test_suite_report_keeps_first_counterexample():
    report = verify.SuiteReport("theorem")
    report.record(True, lambda: "never rendered")
    report.record(False, lambda: "first")
    report.record(False, lambda: "second")
    assert report.checked == 3
    assert report.failures == 2
    assert report.counterexample == "first"
    assert not report.passed
    assert report.summary() == (
        "theorem: 3 checks, 2 failures; first counterexample: first"
    )


def test_conjecture_report_never_fails():
    report = verify.SuiteReport("conjecture", is_conjecture=True)
    report.record(False, lambda: "(3,1,1,1)")
    assert report.passed
    assert report.to_json()["conjecture"] is True


def test_brute_force_preimages():
    preimages = verify.brute_force_preimages(Partition((2, 1)), 24)
    assert len(preimages) == 5
    assert preimages[parse_path("S2 S1 W W W")] == parse_path("S1 W S2 W W")


@pytest.mark.parametrize("suite", verify.SUITES)
def test_suites_pass(suite):
    reports = verify.Verifier(KDyckConfig(), 8).run([suite])
    assert len(reports) == 1
    assert reports[0].suite == suite
    assert reports[0].checked > 0
    assert reports[0].failures == 0
    assert reports[0].counterexample is None


@pytest.mark.parametrize(
    "check, max_size",
    [
        ("check_theorem", 14),
        ("check_inverse", 14),
        ("check_tableau", 12),
        ("check_properties", 12),
        ("check_symmetry", 12),
    ],
)
def test_suites_pass_at_default_sizes(check, max_size):
    report = getattr(verify.Verifier(KDyckConfig(), max_size), check)()
    assert report.checked > 0
    assert report.failures == 0
    assert report.counterexample is None


def test_theorem_headline():
    report = verify.Verifier(KDyckConfig(), 6).check_theorem()
    assert report.summary() == (
        "theorem: dinv→area and area→bounce verified on "
        f"{report.checked} paths, 0 failures"
    )


@mock.patch("kdyck.verify.sweep_map", side_effect=KDyckError("broken"))
def test_suite_error_becomes_failed_report(_):
    reports = verify.Verifier(KDyckConfig(), 6).run(["theorem"])
    assert reports[0].failures == 1
    assert reports[0].counterexample == "broken"
    assert not reports[0].passed
