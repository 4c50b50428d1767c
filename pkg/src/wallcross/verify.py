"""Named verification suites and the worker pool that runs them."""

from __future__ import annotations

import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from . import cks, genfun
from .blocks import macdonald_check, serre_symmetric_check, sym2_check
from .errors import ParameterError
from .pairs import pairs_check
from .report import CheckReport
from .triples import (
    b_sum_check,
    higgs_motive_extract,
    moteven_check,
    poles_limit_check,
    structure_check,
)

logger = logging.getLogger(__name__)

# (r, g) pairs for the banana/rose congruence; at most 2^8 edge subsets each
RATCURVE_CASES = ((2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3))

MACDONALD_ORDER = 21
PAIRS_MAX_DEGREE = 13
POLES_DEGREE_BOUND = 6
POLES_GAMMA_MAX = 12
MINFTY_DEGREES = (-2, -1, 0, 1, 2, 3, 4, 5, 6)


@dataclass(frozen=True)
class Task:
    """One independent check; picklable so it can run in a worker process."""

    fn: Callable[..., CheckReport]
    args: tuple[Any, ...]

    def run(self) -> CheckReport:
        return self.fn(*self.args)


def _higgs_extract(g: int) -> CheckReport:
    return higgs_motive_extract(g)[1]


def _macdonald(g: int, order: int) -> list[Task]:
    return [Task(macdonald_check, (g, MACDONALD_ORDER))]


def _blocks(g: int, order: int) -> list[Task]:
    tasks = [Task(sym2_check, (g,))]
    tasks += [Task(serre_symmetric_check, (g, k)) for k in range(2 * g - 1)]
    return tasks


def _pairs(g: int, order: int) -> list[Task]:
    return [Task(pairs_check, (g, PAIRS_MAX_DEGREE))]


def _fmot(g: int, order: int) -> list[Task]:
    return [Task(genfun.fmot_check, (g, order))]


def _fvir(g: int, order: int) -> list[Task]:
    return [Task(genfun.fvir_check, (g, order))]


def _qvir(g: int, order: int) -> list[Task]:
    return [
        Task(genfun.qvir_check, (g, order)),
        Task(genfun.qmot_check, (g, order)),
        Task(genfun.v_check, (g, order)),
        Task(genfun.hmb_check, (g, order)),
        Task(_higgs_extract, (g,)),
        Task(genfun.higgs_poincare_check, (g,)),
    ]


def _compare(g: int, order: int) -> list[Task]:
    return [Task(genfun.compare_F_G, (g, order))]


def _cks(g: int, order: int) -> list[Task]:
    return [Task(cks.ratcurve_check, (genus, rank)) for rank, genus in RATCURVE_CASES]


def _poles(g: int, order: int) -> list[Task]:
    return [
        Task(poles_limit_check, (g, POLES_DEGREE_BOUND, POLES_GAMMA_MAX, d)) for d in (0, 1)
    ]


def _minfty(g: int, order: int) -> list[Task]:
    tasks = [Task(b_sum_check, (g, d)) for d in MINFTY_DEGREES]
    tasks += [Task(structure_check, (g, d)) for d in (2 - 2 * g, -1, 4 * g - 3, 4 * g - 1)]
    return tasks


def _moteven(g: int, order: int) -> list[Task]:
    return [Task(moteven_check, (g, d)) for d in (0, 2, 4)]


SUITES: dict[str, Callable[[int, int], list[Task]]] = {
    "macdonald": _macdonald,
    "blocks": _blocks,
    "pairs": _pairs,
    "fmot": _fmot,
    "fvir": _fvir,
    "qvir": _qvir,
    "compare": _compare,
    "cks": _cks,
    "poles": _poles,
    "minfty": _minfty,
    "moteven": _moteven,
}
SUITE_NAMES = (*SUITES, "all")


def suite_tasks(suite: str, g: int, order: int) -> list[Task]:
    if suite == "all":
        return [task for build in SUITES.values() for task in build(g, order)]
    if suite not in SUITES:
        choices = ", ".join(SUITE_NAMES)
        raise ParameterError(f"unknown suite {suite!r} (choose from {choices})")
    return SUITES[suite](g, order)


def _run(task: Task) -> CheckReport:
    return task.run()


def run_suite(suite: str, g: int, order: int, workers: int = 1) -> list[CheckReport]:
    """Run every check of a suite; the result is sorted by check name."""
    tasks = suite_tasks(suite, g, order)
    logger.info(
        "suite %s: %d checks, g=%d, order=%d, workers=%d", suite, len(tasks), g, order, workers
    )
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run, tasks))
    else:
        reports = [_run(task) for task in tasks]
    for report in reports:
        logger.info("%s", report.summary())
    failures = sum(1 for r in reports if not r.passed)
    logger.info(
        "suite %s finished: %d passed, %d failed", suite, len(reports) - failures, failures
    )
    return sorted(reports, key=lambda r: r.name)
