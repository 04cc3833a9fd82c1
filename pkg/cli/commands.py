# cli/commands.py
"""
Подкоманды командной строки: seq, op inspect, constants, reduce, verify.
Каждая функция возвращает код возврата; данные пишутся в stdout,
сообщения -- через логгер в stderr.
"""
import json
import os
import sys
from fractions import Fraction
from typing import IO, Any, List, Optional

from config.config_manager import ALL_CLAIMS, DEFAULT_SWEEPS, ConfigManager
from config.config_model import CliConfig, SweepSpec
from operators.delannoy_operator import delannoy_operator
from operators.partibility import find_gamma, inspect
from reduction.constant_table import build_constant_table
from reduction.general_reduce import general_reduce
from sequences.sequence_spec import SequenceFamily, SequenceSpec
from utils.exceptions import (
    ArithmeticException, ConfigException, OperatorException, RangeParseError, ReductionError,
    SequenceException, SweepEngineException,
)
from utils.logger import DataLogger, LogCategory
from verify.report import Claim
from verify.report_writer import OutputFormat, ReportWriter
from verify.sweep_engine import SweepEngine, SweepResult

RANGE_KEYS = ("n", "p", "a", "z", "v", "s", "b", "c", "m")
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def parse_number(text: str) -> Any:
    """Целое или рациональное "p/q"."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise RangeParseError(f"Ожидалось число, получено '{text}'") from e
    return int(value) if value.denominator == 1 else value


def _json_value(value: Any) -> Any:
    if isinstance(value, int):
        return value
    return str(value)


def _dump(data: Any, out: IO[str]) -> None:
    out.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


# --- seq ---
def cmd_seq(args, logger: DataLogger, out: IO[str]) -> int:
    indices = ConfigManager.parse_range(args.n)
    if indices[0] < 0:
        raise RangeParseError("Индексы n должны быть неотрицательными")
    spec = SequenceSpec(
        family=SequenceFamily(args.family),
        z=parse_number(args.z),
        b=args.b,
        c=args.c,
        r=args.r,
        epsilon=args.epsilon,
    )
    logger.log_info(LogCategory.SEQUENCE, f"Генерация {spec.family.value}: {len(indices)} членов")
    values = spec.terms(indices)
    if args.json:
        _dump([_json_value(x) for x in values], out)
    else:
        for x in values:
            out.write(f"{x}\n")
    return 0


# --- op inspect ---
def cmd_op_inspect(args, logger: DataLogger, out: IO[str]) -> int:
    z = None if args.z is None else parse_number(args.z)
    op = delannoy_operator(args.epsilon, z)
    gamma = None if args.gamma is None else parse_number(args.gamma)
    logger.log_info(LogCategory.OPERATOR, f"Разбор оператора {op}")
    report = inspect(op, gamma)
    data = {"operator": str(op)}
    data.update(report.to_dict())
    _dump(data, out)
    return 0


# --- constants ---
def cmd_constants(args, logger: DataLogger, out: IO[str]) -> int:
    if args.vmax < 0:
        raise RangeParseError(f"--vmax должно быть >= 0, получено {args.vmax}")
    table = build_constant_table(args.vmax)
    logger.log_info(LogCategory.REDUCTION, f"Таблица констант до v={args.vmax}")
    if OutputFormat(args.format) is OutputFormat.JSON:
        _dump(table.to_dict(), out)
        return 0
    rows = table.rows()
    headers = ["v", "c", "c_tilde", "rho", "rho_tilde"]
    cells = [[str(r[h]) for h in headers] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(headers)]
    out.write("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip() + "\n")
    for c in cells:
        out.write("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip() + "\n")
    return 0


# --- reduce ---
def cmd_reduce(args, logger: DataLogger, out: IO[str]) -> int:
    z = None if args.z is None else parse_number(args.z)
    op = delannoy_operator(args.epsilon, z)
    gamma = find_gamma(op)
    if gamma is None:
        raise ReductionError("Не найден центр симметрии gamma")
    cert = general_reduce(op, gamma, args.m, parse_number(args.scale))
    logger.log_info(LogCategory.REDUCTION, f"Редукция m={args.m}: остаток {cert.remainder}")
    data = cert.to_dict()
    data["check"] = cert.check()
    _dump(data, out)
    return 0


# --- verify ---
def _sweep_specs(args) -> List[SweepSpec]:
    ranges = {key: getattr(args, key) for key in RANGE_KEYS if getattr(args, key) is not None}
    if args.target == "all":
        # приёмочный прогон: только значения по умолчанию
        if ranges:
            raise RangeParseError(
                f"'verify all' использует диапазоны по умолчанию; уберите --{', --'.join(sorted(ranges))}")
        claims = list(ALL_CLAIMS)
    elif args.claim:
        claims = [Claim(args.claim)]
        unused = sorted(k for k in ranges if k not in DEFAULT_SWEEPS[claims[0]])
        if unused:
            raise RangeParseError(
                f"Утверждение {args.claim} не имеет параметров --{', --'.join(unused)}")
    else:
        raise RangeParseError("Укажите --claim или 'all'")
    if args.exploratory and Claim.THM1_3 in claims and Claim.THM1_3_EXPLORE not in claims:
        claims.append(Claim.THM1_3_EXPLORE)

    specs = []
    for claim in claims:
        # явные диапазоны относятся только к параметрам самого утверждения
        claim_ranges = {k: v for k, v in ranges.items() if k in DEFAULT_SWEEPS[claim]}
        specs.append(ConfigManager.build_sweep_spec(claim, claim_ranges, args.epsilon, args.perturb_rho))
    return specs


def cmd_verify(args, logger: DataLogger, out: IO[str]) -> int:
    config = CliConfig(
        output_format=OutputFormat(args.format),
        jobs=args.jobs or (os.cpu_count() or 1),
        out_path=args.out,
        exploratory=args.exploratory,
    )
    specs = _sweep_specs(args)
    engine = SweepEngine(logger)
    result = SweepResult()
    for spec in specs:
        result.extend(engine.run(spec, config.jobs))

    writer = ReportWriter(config.output_format, config.out_path, stream=None if config.out_path else out)
    try:
        writer.write_header("verify " + " ".join(s.claim.value for s in specs))
        for report in result.reports:
            writer.write_report(report)
    finally:
        writer.close()
    out.write(result.summary_line() + "\n")
    out.flush()
    return result.exit_code


def run_command(args, logger: DataLogger, out: Optional[IO[str]] = None) -> int:
    """Диспетчер подкоманд; ошибки параметров -> код 2, сбой прогона -> код 3."""
    out = out if out is not None else sys.stdout
    handlers = {
        "seq": cmd_seq,
        "op": cmd_op_inspect,
        "constants": cmd_constants,
        "reduce": cmd_reduce,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args, logger, out)
    except SweepEngineException as e:
        logger.log_error(LogCategory.CLI, f"Сбой прогона: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ConfigException, ArithmeticException, SequenceException, OperatorException,
            ReductionError, ValueError) as e:
        logger.log_error(LogCategory.CLI, f"Ошибка параметров: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
