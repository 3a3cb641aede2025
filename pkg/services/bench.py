"""Benchmark suites over the generated families, written as CSV records.

Every suite expands to a list of ``BenchTask`` instances; each task builds
its instance from its parameters, runs one operation and reports exact
metrics.  Timings are wall-clock and informational only.
"""

from __future__ import annotations

import csv
import io
import logging
import multiprocessing
import statistics
import time
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from services import generators, hull, lattice
from services.arith import format_scalar
from services.hull import InsertionOrder
from services.lattice import PointLimitExceeded

logger = logging.getLogger(__name__)

CSV_HEADER = (
    "family",
    "params",
    "operation",
    "algorithm",
    "order",
    "seed",
    "metric",
    "value",
    "seconds",
)
SUITES = ("cut", "knapsack-hull", "knapsack-count", "voronoi", "rbox", "matching")
TIMEOUT = "timeout"
MEMOUT = "memout"
ERROR = "error"


@dataclass(frozen=True)
class BenchRecord:
    family: str
    params: str
    operation: str
    algorithm: str
    order: str
    seed: str
    metric: str
    value: str
    seconds: str
    peak_memory: int | None = None

    def row(self) -> tuple[str, ...]:
        return (
            self.family,
            self.params,
            self.operation,
            self.algorithm,
            self.order,
            self.seed,
            self.metric,
            self.value,
            self.seconds,
        )

    @property
    def sort_key(self) -> tuple:
        return self.row()[:7]


@dataclass(frozen=True)
class StatSummary:
    n: int
    min: Fraction
    max: Fraction
    mean: Fraction
    median: Fraction
    stddev: str

    def __str__(self) -> str:
        return (
            f"n={self.n} min={format_scalar(self.min)} max={format_scalar(self.max)} "
            f"mean={format_scalar(self.mean)} median={format_scalar(self.median)} "
            f"stddev={self.stddev}"
        )


def stats(values) -> StatSummary:
    """Exact order statistics and mean; sample standard deviation to 3 places."""
    data = [Fraction(v) for v in values]
    if not data:
        raise ValueError("stats needs at least one value")
    if len(data) == 1:
        deviation = Decimal(0)
    else:
        variance = statistics.variance(data)
        with localcontext() as ctx:
            ctx.prec = 50
            deviation = (
                Decimal(variance.numerator) / Decimal(variance.denominator)
            ).sqrt()
    return StatSummary(
        n=len(data),
        min=min(data),
        max=max(data),
        mean=statistics.mean(data),
        median=Fraction(statistics.median(data)),
        stddev=f"{deviation:.3f}",
    )


# ---------------------------------------------------------------------------
# tasks


@dataclass(frozen=True)
class BenchTask:
    family: str
    params: tuple[tuple[str, int], ...]
    operation: str
    algorithm: str = "-"
    order: str = "given"
    seed: int | None = None

    @property
    def param_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def records(self, metrics: dict[str, object], seconds: str) -> list[BenchRecord]:
        return [
            BenchRecord(
                self.family,
                self.param_text,
                self.operation,
                self.algorithm,
                self.order,
                "-" if self.seed is None else str(self.seed),
                metric,
                value if isinstance(value, str) else format_scalar(value),
                seconds,
            )
            for metric, value in metrics.items()
        ]


def _instance(task: BenchTask):
    match task.family:
        case "cut":
            graph = generators.graph_families("Gk", task.param("k"))
            return generators.cut_polytope(graph)
        case "knapsack":
            return generators.fibonacci_knapsack(task.param("d"), task.param("b"))
        case "voronoi":
            sites = generators.random_sites(task.param("d"), task.param("m"), task.seed)
            return generators.voronoi_lift(sites)
        case "rbox":
            return generators.random_box(task.param("d"), task.param("n"), task.seed)
        case "matching":
            graph = generators.graph_families("K", task.param("n"))
            return generators.matching_polytope(graph)
    raise ValueError(f"unknown family {task.family}")


def run_task(task: BenchTask) -> dict[str, object]:
    """Build the instance and run the operation; returns exact metrics."""
    p = _instance(task)
    order = InsertionOrder.parse(task.order)
    match task.operation:
        case "facets":
            return {"facets": len(hull.facets(p, task.algorithm, order).inequalities)}
        case "vertices":
            v = hull.vertices(p, task.algorithm)
            return {"vertices": len(v.points), "rays": len(v.rays)}
        case "count":
            return {"points": lattice.count(p, task.algorithm)}
        case "integer-hull":
            q = lattice.integer_hull(p)
            return {
                "vertices": len(q.vrep.points),
                "facets": len(q.hrep.inequalities),
            }
    raise ValueError(f"unknown operation {task.operation}")


def _timed(task: BenchTask) -> tuple[dict[str, object], float]:
    start = time.perf_counter()
    metrics = run_task(task)
    return metrics, time.perf_counter() - start


def suite_tasks(
    name: str, reps: int = 1, seed: int = 1, grid: dict | None = None
) -> list[BenchTask]:
    """Instance grid of a suite; ``grid`` overrides the default parameter ranges."""
    grid = grid or {}
    tasks: list[BenchTask] = []
    match name:
        case "cut":
            for k in grid.get("k", range(4)):
                for algo in hull.ALGORITHMS:
                    tasks += [BenchTask("cut", (("k", k),), "facets", algo)] * reps
        case "knapsack-hull":
            for d in grid.get("d", (4, 5, 6)):
                for b in grid.get("b", range(40, 101, 10)):
                    tasks += [
                        BenchTask("knapsack", (("d", d), ("b", b)), "integer-hull")
                    ] * reps
        case "knapsack-count":
            for d in grid.get("d", (5,)):
                for b in grid.get("b", range(40, 101, 10)):
                    for method in ("bbox", "projection"):
                        tasks += [
                            BenchTask("knapsack", (("d", d), ("b", b)), "count", method)
                        ] * reps
        case "voronoi":
            for d in grid.get("d", (5,)):
                for m in grid.get("m", (100,)):
                    for s in range(seed, seed + reps):
                        params = (("d", d), ("m", m))
                        tasks.append(
                            BenchTask("voronoi", params, "vertices", "dd", seed=s)
                        )
        case "rbox":
            for d in grid.get("d", (4,)):
                for n in grid.get("n", (20,)):
                    params = (("d", d), ("n", n))
                    for s in range(seed, seed + reps):
                        for algo in hull.ALGORITHMS:
                            tasks.append(
                                BenchTask("rbox", params, "facets", algo, seed=s)
                            )
                        for method in ("bbox", "projection", "hilbert"):
                            tasks.append(
                                BenchTask("rbox", params, "count", method, seed=s)
                            )
        case "matching":
            for n in grid.get("n", (4, 5, 6)):
                methods = ("zero-one", "projection") if n <= 5 else ("zero-one",)
                for method in methods:
                    task = BenchTask("matching", (("n", n),), "count", method)
                    tasks += [task] * reps
        case _:
            raise ValueError(f"unknown suite {name!r}; use one of {', '.join(SUITES)}")
    return tasks


def _failure(task: BenchTask, status: str) -> list[BenchRecord]:
    return task.records({"status": status}, "-")


def _run_with_budget(task: BenchTask, budget: float) -> list[BenchRecord]:
    with multiprocessing.Pool(1) as pool:
        pending = pool.apply_async(_timed, (task,))
        try:
            metrics, seconds = pending.get(timeout=budget)
        except multiprocessing.TimeoutError:
            pool.terminate()
            logger.info("bench: %s %s timed out", task.family, task.param_text)
            return _failure(task, TIMEOUT)
        except (MemoryError, PointLimitExceeded):
            return _failure(task, MEMOUT)
        except Exception:
            logger.exception("bench: %s %s failed", task.family, task.param_text)
            return _failure(task, ERROR)
    return task.records(metrics, f"{seconds:.3f}")


def _run_inline(task: BenchTask) -> list[BenchRecord]:
    try:
        metrics, seconds = _timed(task)
    except (MemoryError, PointLimitExceeded):
        return _failure(task, MEMOUT)
    except Exception:
        logger.exception("bench: %s %s failed", task.family, task.param_text)
        return _failure(task, ERROR)
    return task.records(metrics, f"{seconds:.3f}")


def disagreements(records: list[BenchRecord]) -> dict[tuple, set[str]]:
    """Exact metrics that differ between algorithms or methods on one instance.

    Keys are (family, params, operation, seed, metric); failure records are
    skipped.
    """
    seen: dict[tuple, set[str]] = {}
    for r in records:
        if r.metric == "status":
            continue
        key = (r.family, r.params, r.operation, r.seed, r.metric)
        seen.setdefault(key, set()).add(r.value)
    return {key: values for key, values in seen.items() if len(values) > 1}


def bench_suite(
    name: str,
    reps: int = 1,
    budget: float | None = None,
    *,
    seed: int = 1,
    grid: dict | None = None,
    workers: int = 1,
    timings: bool = True,
) -> list[BenchRecord]:
    """Run a suite; failures become ``timeout``, ``memout`` or ``error`` records.

    Exact metrics that differ across algorithms on one instance are logged
    as warnings.
    """
    tasks = suite_tasks(name, reps, seed, grid)
    logger.info("bench %s: %d tasks, budget %s", name, len(tasks), budget)
    if budget is not None:
        records = [r for task in tasks for r in _run_with_budget(task, budget)]
    elif workers > 1:
        with multiprocessing.Pool(workers) as pool:
            records = [r for part in pool.map(_run_inline, tasks) for r in part]
    else:
        records = [r for task in tasks for r in _run_inline(task)]
    if not timings:
        records = [
            BenchRecord(*r.row()[:8], seconds="-", peak_memory=r.peak_memory)
            for r in records
        ]
    for key, values in disagreements(records).items():
        logger.warning("bench: %s disagree on %s", sorted(values), key)
    return sorted(records, key=lambda r: r.sort_key)


def summarize(records: list[BenchRecord]) -> dict[tuple[str, str, str], StatSummary]:
    """StatSummary per (family, params, metric) over exact numeric values."""
    groups: dict[tuple[str, str, str], list[Fraction]] = {}
    for r in records:
        if r.metric == "status":
            continue
        groups.setdefault((r.family, r.params, r.metric), []).append(Fraction(r.value))
    return {key: stats(values) for key, values in sorted(groups.items())}


def to_csv(records: list[BenchRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(r.row())
    return buffer.getvalue()


def read_csv(text: str) -> list[BenchRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [BenchRecord(*row) for row in reader]
