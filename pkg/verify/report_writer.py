# verify/report_writer.py
"""
Интерфейс и реализации для записи отчётов проверки.
"""
import csv
import json
import os
import sys
from abc import ABC, abstractmethod
from enum import Enum
from typing import IO, Optional

from verify.report import CongruenceReport

COLUMNS = ["claim", "params", "status", "lhs", "rhs", "modulus"]


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class IReportWriter(ABC):
    """Интерфейс для записи отчётов."""

    @abstractmethod
    def write_header(self, title: str):
        """Записывает заголовок (если формат его предусматривает)."""
        pass

    @abstractmethod
    def write_report(self, report: CongruenceReport):
        """Записывает один отчёт."""
        pass

    @abstractmethod
    def close(self):
        pass


def _params_text(report: CongruenceReport) -> str:
    return " ".join(f"{k}={v}" for k, v in report.params)


def _value_text(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


class ReportWriter(IReportWriter):
    """
    Запись в text, JSON Lines или CSV. Без пути -- в stdout.
    """

    def __init__(self, output_format: OutputFormat, file_path: Optional[str] = None,
                 stream: Optional[IO[str]] = None):
        self._format = output_format
        self._file_path = file_path
        self._owns_handle = False
        self._csv_writer = None

        if file_path:
            dirname = os.path.dirname(file_path)
            if dirname:
                os.makedirs(dirname, exist_ok=True)
            self._handle: IO[str] = open(file_path, 'w', encoding='utf-8', newline='')
            self._owns_handle = True
        else:
            self._handle = stream if stream is not None else sys.stdout

    def write_header(self, title: str):
        if self._format == OutputFormat.CSV:
            self._csv_writer = csv.writer(self._handle, lineterminator='\n')
            self._csv_writer.writerow(COLUMNS)
        elif self._format == OutputFormat.TEXT:
            self._handle.write(f"# {title}\n")
        self._handle.flush()

    def write_report(self, report: CongruenceReport):
        if self._format == OutputFormat.JSON:
            self._handle.write(json.dumps(report.to_dict(), sort_keys=False) + '\n')
        elif self._format == OutputFormat.CSV:
            if self._csv_writer is None:
                self._csv_writer = csv.writer(self._handle, lineterminator='\n')
            data = report.to_dict()
            self._csv_writer.writerow([
                data["claim"],
                json.dumps(data["params"]),
                data["status"],
                _value_text(report.lhs),
                _value_text(report.rhs),
                _value_text(report.modulus),
            ])
        else:
            line = (f"{report.claim.value:<15} {_params_text(report):<36} "
                    f"{report.status.value:<15} lhs={_value_text(report.lhs)} "
                    f"rhs={_value_text(report.rhs)} mod={_value_text(report.modulus)}")
            if report.note:
                line += f" [{report.note}]"
            self._handle.write(line + '\n')
        self._handle.flush()

    def close(self):
        """Закрывает файл, если он был открыт этим объектом."""
        if self._owns_handle and self._handle:
            self._handle.close()
        self._owns_handle = False
