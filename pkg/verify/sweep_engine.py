# verify/sweep_engine.py
"""
Движок прогона. Раздаёт задачи рабочим процессам, собирает отчёты
и сортирует их, так что результат не зависит от числа процессов.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, List, Optional

from config.config_model import SweepSpec
from reduction.constant_table import ConstantTable, build_constant_table
from utils.exceptions import SweepEngineException
from utils.logger import DataLogger, LogCategory, get_default_logger
from verify.report import CongruenceReport, Status
from verify.sweep_planner import SweepPlanner, SweepTask, execute_task


@dataclass
class SweepResult:
    """Отсортированные отчёты и счётчики."""
    reports: List[CongruenceReport] = field(default_factory=list)

    def count(self, status: Status) -> int:
        return sum(1 for r in self.reports if r.status is status)

    @property
    def verified(self) -> int:
        return self.count(Status.VERIFIED)

    @property
    def failed(self) -> int:
        return self.count(Status.FAILED)

    @property
    def not_applicable(self) -> int:
        return self.count(Status.NOT_APPLICABLE)

    @property
    def observed(self) -> int:
        return self.count(Status.OBSERVED)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def summary_line(self) -> str:
        line = f"verified={self.verified} failed={self.failed} na={self.not_applicable}"
        if self.observed:
            line += f" observed={self.observed}"
        return line

    def extend(self, other: "SweepResult") -> None:
        self.reports.extend(other.reports)


def _timed(task: SweepTask, table: Optional[ConstantTable]) -> List[CongruenceReport]:
    start = time.perf_counter()
    reports = execute_task(task, table)
    elapsed = time.perf_counter() - start
    return [CongruenceReport(r.claim, r.params, r.status, r.lhs, r.rhs, r.modulus, r.note, elapsed)
            for r in reports]


class SweepEngine:
    """
    Движок прогона. Управляет планированием, исполнением и сборкой отчётов.
    """

    def __init__(self, logger: Optional[DataLogger] = None):
        self._logger = logger or get_default_logger()
        self._is_running = False
        self._completed = 0
        self._total = 0

        # Callbacks
        self.on_progress: Optional[Callable[[int, int], None]] = None  # (current, total)
        self.on_sweep_started: Optional[Callable[[int], None]] = None
        self.on_sweep_finished: Optional[Callable[[SweepResult], None]] = None
        self.on_report: Optional[Callable[[CongruenceReport], None]] = None
        self.on_error: Optional[Callable[[str], None]] = None

    def is_running(self) -> bool:
        return self._is_running

    def get_progress(self):
        """Текущий прогресс (current, total)."""
        return self._completed, self._total

    def run(self, spec: SweepSpec, jobs: int = 1) -> SweepResult:
        """
        Выполняет все задачи прогона.

        Args:
            spec: Параметры прогона.
            jobs: Число процессов; 1 -- выполнение в текущем процессе.
        """
        if self._is_running:
            raise SweepEngineException("Прогон уже запущен")
        if jobs < 1:
            raise SweepEngineException(f"jobs должно быть >= 1, получено {jobs}")

        try:
            self._is_running = True
            tasks = SweepPlanner.generate_tasks(spec)
            self._total = len(tasks)
            self._completed = 0
            self._logger.log_info(LogCategory.VERIFY,
                f"Прогон {spec.claim.value}: задач {self._total}, процессов {jobs}")
            if self.on_sweep_started:
                self.on_sweep_started(self._total)

            table = build_constant_table(max(spec.v_max, 5))
            if spec.rho_overrides:
                self._logger.log_warn(LogCategory.VERIFY,
                    f"Подмена констант rho: {spec.rho_overrides}")
                table = table.with_rho_override(spec.rho_overrides)

            collected: List[CongruenceReport] = []
            worker = partial(_timed, table=table)
            if jobs == 1 or len(tasks) <= 1:
                batches = map(worker, tasks)
                self._collect(batches, collected)
            else:
                chunksize = max(1, len(tasks) // (jobs * 8))
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    self._collect(pool.map(worker, tasks, chunksize=chunksize), collected)

            result = SweepResult(sorted(collected, key=CongruenceReport.sort_key))
            self._logger.log_info(LogCategory.VERIFY, f"Прогон {spec.claim.value} завершён: {result.summary_line()}")
            if self.on_sweep_finished:
                try:
                    self.on_sweep_finished(result)
                except Exception as e:
                    self._logger.log_error(LogCategory.VERIFY, f"Ошибка в on_sweep_finished: {e}")
            return result
        except SweepEngineException:
            raise
        except Exception as e:
            error_msg = f"Ошибка в процессе прогона: {e}"
            self._logger.log_error(LogCategory.VERIFY, error_msg)
            if self.on_error:
                self.on_error(error_msg)
            raise SweepEngineException(error_msg) from e
        finally:
            self._is_running = False

    def _collect(self, batches, collected: List[CongruenceReport]) -> None:
        for reports in batches:
            self._completed += 1
            for report in reports:
                collected.append(report)
                if report.status is Status.FAILED:
                    self._logger.log_warn(LogCategory.VERIFY,
                        f"FAILED {report.claim.value} {report.param_dict}: "
                        f"lhs={report.lhs} rhs={report.rhs} mod={report.modulus}")
                if self.on_report:
                    self.on_report(report)
            if self.on_progress:
                self.on_progress(self._completed, self._total)


def run_sweep(spec: SweepSpec, parallelism: int = 1, logger: Optional[DataLogger] = None) -> SweepResult:
    return SweepEngine(logger).run(spec, parallelism)
