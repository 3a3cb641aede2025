import logging
from fractions import Fraction

import pytest

from services import bench
from services.bench import (
    CSV_HEADER,
    ERROR,
    MEMOUT,
    BenchTask,
    bench_suite,
    disagreements,
    read_csv,
    run_task,
    stats,
    suite_tasks,
    summarize,
    to_csv,
)


class TestStats:
    def test_small_sample(self):
        s = stats([1, 2, 3])
        assert (s.n, s.min, s.max) == (3, 1, 3)
        assert s.mean == 2
        assert s.median == 2
        assert s.stddev == "1.000"

    def test_constant(self):
        assert stats([5, 5, 5, 5]).stddev == "0.000"

    def test_exact_mean(self):
        s = stats([1, 2])
        assert s.mean == Fraction(3, 2)
        assert s.median == Fraction(3, 2)
        assert str(s) == "n=2 min=1 max=2 mean=3/2 median=3/2 stddev=0.707"

    def test_single_value(self):
        s = stats([12816])
        assert s.min == s.max == s.mean == s.median == 12816
        assert s.stddev == "0.000"

    def test_empty(self):
        with pytest.raises(ValueError):
            stats([])


class TestTasks:
    def test_cut_suite_grid(self):
        tasks = suite_tasks("cut", reps=2, grid={"k": [0]})
        assert len(tasks) == 4
        assert {t.algorithm for t in tasks} == {"dd", "bb"}

    def test_seeded_suites_use_consecutive_seeds(self):
        tasks = suite_tasks("voronoi", reps=3, seed=5, grid={"d": [3], "m": [4]})
        assert [t.seed for t in tasks] == [5, 6, 7]

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            suite_tasks("sorting")

    def test_param_text(self):
        task = BenchTask("knapsack", (("d", 5), ("b", 40)), "count", "bbox")
        assert task.param_text == "d=5;b=40"
        assert task.param("b") == 40

    def test_run_count(self):
        task = BenchTask("knapsack", (("d", 5), ("b", 40)), "count", "projection")
        assert run_task(task) == {"points": 1366}

    def test_run_matching(self):
        task = BenchTask("matching", (("n", 5),), "count", "zero-one")
        assert run_task(task) == {"points": 26}


class TestSuites:
    def test_cut_facets(self):
        records = bench_suite("cut", grid={"k": [0, 1]}, timings=False)
        facets = {(r.params, r.algorithm): r.value for r in records}
        assert facets == {
            ("k=0", "bb"): "20",
            ("k=0", "dd"): "20",
            ("k=1", "bb"): "22",
            ("k=1", "dd"): "22",
        }
        assert all(r.seconds == "-" for r in records)

    def test_deterministic_without_timings(self):
        kwargs = {"grid": {"d": [3], "n": [8]}, "seed": 2, "timings": False}
        first = to_csv(bench_suite("rbox", **kwargs))
        assert first == to_csv(bench_suite("rbox", **kwargs))

    def test_point_limit_becomes_memout(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_POINT_LIMIT", "10")
        records = bench_suite("knapsack-count", grid={"b": [40]}, timings=False)
        assert {r.value for r in records} == {MEMOUT}
        assert {r.metric for r in records} == {"status"}

    @pytest.mark.slow
    def test_budget_timeout(self):
        records = bench_suite(
            "knapsack-hull", grid={"d": [6], "b": [100]}, budget=0.01
        )
        assert records[0].value == "timeout"


class TestFailures:
    def test_unexpected_error_becomes_record(self, monkeypatch):
        real = bench.run_task

        def failing_bb(task):
            if task.algorithm == "bb":
                raise RuntimeError("placing failed")
            return real(task)

        monkeypatch.setattr(bench, "run_task", failing_bb)
        records = bench_suite("cut", grid={"k": [0, 1]}, timings=False)
        assert {(r.params, r.algorithm, r.metric, r.value) for r in records} == {
            ("k=0", "dd", "facets", "20"),
            ("k=1", "dd", "facets", "22"),
            ("k=0", "bb", "status", ERROR),
            ("k=1", "bb", "status", ERROR),
        }


class TestAgreement:
    @pytest.mark.parametrize(
        "suite,grid",
        [
            ("cut", {"k": [0, 1]}),
            ("rbox", {"d": [3], "n": [8]}),
            ("knapsack-count", {"d": [4], "b": [40]}),
            ("matching", {"n": [4, 5]}),
        ],
    )
    def test_exact_metrics_agree_across_methods(self, suite, grid):
        records = bench_suite(suite, grid=grid, timings=False)
        assert disagreements(records) == {}

    def test_mismatch_is_reported(self, monkeypatch, caplog):
        real = bench.run_task

        def skewed(task):
            metrics = real(task)
            if task.algorithm == "bb":
                return {"facets": metrics["facets"] + 1}
            return metrics

        monkeypatch.setattr(bench, "run_task", skewed)
        with caplog.at_level(logging.WARNING, logger="services.bench"):
            records = bench_suite("cut", grid={"k": [0]}, timings=False)
        assert disagreements(records) == {
            ("cut", "k=0", "facets", "-", "facets"): {"20", "21"}
        }
        assert "disagree" in caplog.text

class TestCsv:
    def test_header_and_reading(self):
        records = bench_suite("matching", grid={"n": [4]}, timings=False)
        text = to_csv(records)
        assert text.splitlines()[0] == ",".join(CSV_HEADER)
        assert read_csv(text) == records

    def test_rejects_foreign_header(self):
        with pytest.raises(ValueError, match="unexpected CSV header"):
            read_csv("a,b\n1,2\n")

    def test_summary(self):
        records = bench_suite("matching", reps=3, grid={"n": [4]}, timings=False)
        summary = summarize(records)
        text = str(summary[("matching", "n=4", "points")])
        assert text.startswith("n=6 min=10 max=10")
