from itertools import chain
from typing import Optional

import anyio
from loguru import logger

from src.apps.bench.dto import BenchPoint, BenchRow
from src.apps.bench.errors import UnknownSuiteError
from src.apps.bench.suites import SuiteBuilder
from src.apps.bitmaps.errors import BitmapOverflowError, EmptyLanguageError
from src.apps.enums import BenchSuite, BoundKind, RowStatus
from src.apps.operations.errors import BoundViolationError, RouteDisagreementError
from src.apps.synthesis.errors import ComplexityInvariantError, CoverBudgetExceededError
from src.core.config import settings


class BenchService:
    def __init__(
        self,
        jobs: Optional[int] = None,
        seed: int = 0,
        density: Optional[float] = None,
        cover_budget: Optional[int] = None,
    ):
        self._jobs = jobs or settings.BENCH_JOBS
        self._seed = seed
        self._density = settings.BENCH_DENSITY if density is None else density
        self._cover_budget = cover_budget

    def points(self, suite: BenchSuite, lmax: int) -> list[BenchPoint]:
        builder = SuiteBuilder(lmax=lmax, seed=self._seed, density=self._density, cover_budget=self._cover_budget)
        match suite:
            case BenchSuite.TABLE2:
                return builder.table2()
            case BenchSuite.REVERSAL_GROWTH:
                return builder.reversal_growth()
            case BenchSuite.MAXIMALITY:
                return builder.maximality()
            case BenchSuite.ALL:
                return builder.table2() + builder.reversal_growth() + builder.maximality()
        raise UnknownSuiteError(f'Unknown bench suite {suite!r}')

    async def run_suite(self, suite: BenchSuite, lmax: int) -> list[BenchRow]:
        points = self.points(suite, lmax)
        results: list[list[BenchRow]] = [[] for _ in points]
        limiter = anyio.CapacityLimiter(self._jobs)

        async def evaluate(index: int, point: BenchPoint):
            results[index] = await anyio.to_thread.run_sync(self._evaluate, point, limiter=limiter)

        async with anyio.create_task_group() as task_group:
            for index, point in enumerate(points):
                task_group.start_soon(evaluate, index, point)

        rows = sorted(chain.from_iterable(results), key=lambda row: row.sort_key)
        for row in rows:
            if row.status == RowStatus.VIOLATION:
                logger.error(
                    '{} {} {} {}: measured {} against {}',
                    row.op,
                    row.family,
                    row.params,
                    row.quantity,
                    row.measured,
                    row.formula,
                )
        return rows

    def run_suite_sync(self, suite: BenchSuite, lmax: int) -> list[BenchRow]:
        return anyio.run(self.run_suite, suite, lmax)

    @staticmethod
    def _evaluate(point: BenchPoint) -> list[BenchRow]:
        logger.info('Bench point {} {} {} (k={}, ell={})', point.op, point.family, point.params, point.k, point.ell)
        try:
            return point.run()
        except (CoverBudgetExceededError, BitmapOverflowError) as exc:
            return [BenchService._failed_row(point, RowStatus.BUDGET, str(exc))]
        except EmptyLanguageError as exc:
            return [BenchService._failed_row(point, RowStatus.EMPTY, str(exc))]
        except (BoundViolationError, RouteDisagreementError, ComplexityInvariantError) as exc:
            return [BenchService._failed_row(point, RowStatus.VIOLATION, str(exc))]

    @staticmethod
    def _failed_row(point: BenchPoint, status: RowStatus, message: str) -> BenchRow:
        return BenchRow(
            op=point.op,
            family=point.family,
            params=point.params,
            k=point.k,
            ell=point.ell,
            quantity='-',
            bound='-',
            kind=BoundKind.REPORTED,
            formula=None,
            measured=None,
            status=status,
            notes=(message,),
        )


def has_violations(rows: list[BenchRow]) -> bool:
    return any(row.status == RowStatus.VIOLATION for row in rows)
