"""The verification suites themselves, the report object, and the stabilizer."""

import json

import pytest

from crystalpaths.fermionic import string_series_single
from crystalpaths.harness import (
    SUITES,
    CheckResult,
    StabilizationError,
    VerificationReport,
    report_to_file,
    run_suite,
    stabilized_limit,
)


def test_suite_names_are_stable():
    assert SUITES == ("worked-examples", "kostka-identities",
                      "fermionic-identities", "energy-properties",
                      "conjectures", "limits")


def test_worked_examples_pass():
    report = run_suite("worked-examples")
    assert report.ok()
    counts = report.counts()
    assert counts["fail"] == 0
    assert counts["pass"] >= 60


def test_small_kostka_sweep_passes():
    report = run_suite("kostka-identities", max_n=2, max_size=4)
    assert report.ok()
    assert report.counts()["fail"] == 0


def test_small_fermionic_sweep_passes():
    report = run_suite("fermionic-identities", max_n=2, max_size=4)
    assert report.ok()


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("no-such-suite")


class TestReportObject:
    def test_result_lines(self):
        r = CheckResult("s", "a/b", "pass", "1", "1", "", False)
        assert "PASS" in r.line() and "a/b" in r.line()
        f = CheckResult("s", "a/c", "fail", "1", "2", "note", True)
        assert "FAIL*" in f.line() and "note" in f.line()

    def test_advisory_failures_do_not_flip_ok(self):
        rep = VerificationReport(
            suites=("s",),
            results=[CheckResult("s", "x", "fail", "1", "2", "", True),
                     CheckResult("s", "y", "pass", "1", "1", "", False)],
            elapsed=0.0)
        assert rep.ok()
        rep2 = VerificationReport(
            suites=("s",),
            results=[CheckResult("s", "x", "fail", "1", "2", "", False)],
            elapsed=0.0)
        assert not rep2.ok()

    def test_json_report(self, tmp_path):
        report = run_suite("worked-examples")
        out = tmp_path / "report.json"
        report_to_file(report, str(out))
        data = json.loads(out.read_text())
        assert data["ok"] is True
        assert {r["suite"] for r in data["results"]} == {"worked-examples"}
        statuses = {r["status"] for r in data["results"]}
        assert statuses <= {"pass", "fail", "skip"}


class TestStabilizedLimit:
    def test_matches_string_series(self):
        got = stabilized_limit(2, 1, 0, (), "g", (), 5)
        want = string_series_single(2, 1, 0, (), (), 5)
        assert got == want

    def test_x_route_gives_branching_series(self):
        # the classical-multiplicity ladder converges to the spinon series,
        # not to the weight-space series of the g route
        from crystalpaths.fermionic import spinon_branching_series
        b = stabilized_limit(2, 1, 0, (), "X", (), 4)
        assert b == spinon_branching_series(2, 1, (), 4)

    def test_congruence_guard(self):
        # a weight whose size can never be reached along the ladder
        with pytest.raises(ValueError):
            stabilized_limit(2, 1, 0, (), "g", (1,), 4)

    def test_low_ceiling_raises(self):
        with pytest.raises(StabilizationError):
            stabilized_limit(2, 1, 0, (), "g", (), 6, ceiling=4)

    def test_restricted_route_needs_plain_weight(self):
        with pytest.raises(ValueError):
            stabilized_limit(2, 2, 0, (), "Xl", (2,), 4)
