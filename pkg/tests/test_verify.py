"""Tests for verification suites."""

from __future__ import annotations

import pytest

from wallcross.errors import ParameterError, RangeMismatch, VerificationFailure
from wallcross.report import compare_sequences, failed, passed
from wallcross.triples import b_sum_check
from wallcross.verify import SUITE_NAMES, SUITES, Task, run_suite, suite_tasks


class TestSuiteTasks:
    def test_names(self) -> None:
        assert set(SUITE_NAMES) == {*SUITES, "all"}
        assert "moteven" in SUITE_NAMES

    def test_all_collects_every_suite(self) -> None:
        every = suite_tasks("all", 2, 20)
        assert len(every) == sum(len(build(2, 20)) for build in SUITES.values())

    def test_unknown_suite(self) -> None:
        with pytest.raises(ParameterError, match="unknown suite"):
            suite_tasks("nope", 2, 20)

    def test_minfty_covers_even_degrees(self) -> None:
        degrees = {t.args[1] for t in suite_tasks("minfty", 2, 20) if t.fn is b_sum_check}
        assert {-2, 0, 2, 4, 6} <= degrees
        assert {-1, 1, 3, 5} <= degrees

    def test_ratcurve_cases_are_genus_then_rank(self) -> None:
        args = {t.args for t in suite_tasks("cks", 2, 20)}
        assert args == {(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)}

    def test_task_runs_its_function(self) -> None:
        assert Task(passed, ("named",)).run().name == "named"


class TestRunSuite:
    def test_macdonald(self) -> None:
        reports = run_suite("macdonald", 2, 20)
        assert [r.name for r in reports] == ["macdonald g=2"]
        assert reports[0].passed

    def test_blocks_sorted_by_name(self) -> None:
        reports = run_suite("blocks", 2, 20)
        names = [r.name for r in reports]
        assert names == sorted(names)
        assert all(r.passed for r in reports)

    def test_worker_pool(self) -> None:
        reports = run_suite("blocks", 2, 20, workers=2)
        assert all(r.passed for r in reports)


class TestReports:
    def test_require(self) -> None:
        assert passed("ok").require().passed
        with pytest.raises(VerificationFailure, match="at q\\^1"):
            failed("bad", "q^1", 0, 1).require()

    def test_custom_failure_type(self) -> None:
        report = failed("range", "q^9", 0, 1)
        report.failure = RangeMismatch
        with pytest.raises(RangeMismatch):
            report.require()

    def test_compare_sequences(self) -> None:
        assert compare_sequences("same", [1, 2], [1, 2]).passed
        report = compare_sequences("diff", [1, 2, 3], [1, 5, 3], label="q-degree", offset=1)
        assert report.witness is not None
        assert report.witness.location == "q-degree 2"
        assert not compare_sequences("len", [1], [1, 2]).passed
