# main.py
"""
Точка входа DelannoyScan.
Разбирает аргументы, настраивает логгер и передаёт управление подкоманде.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Добавляем корневую директорию проекта в sys.path для импортов
project_root = Path(__file__).parent.resolve()
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

# --- Импорты проекта ---
from cli.commands import run_command
from config.config_manager import DEFAULT_SWEEPS
from utils.logger import DataLogger, LogCategory
from verify.report import Claim


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', action='store_true', help='Сообщения уровня INFO в stderr')
    common.add_argument('--debug', action='store_true', help='Подробное логирование (DEBUG)')
    common.add_argument('--log-file', type=str, default=None, help='Дополнительно писать лог в файл')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="delannoyscan",
        description="DelannoyScan - редукция степеней и проверка сравнений для многочленов Деланноя",
        epilog="Примеры:\n"
               "  python main.py seq delannoy --n 0..4\n"
               "  python main.py op inspect --epsilon 1\n"
               "  python main.py constants --vmax 2\n"
               "  python main.py reduce --m 2 --epsilon 1\n"
               "  python main.py verify --claim thm1.3 --a 1..10 --v 0..3",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", parents=[common], help="Члены последовательности")
    p_seq.add_argument("family", choices=["delannoy", "trinomial", "schmidt", "schroder"])
    p_seq.add_argument("--n", required=True, help="Индексы: lo..hi или список")
    p_seq.add_argument("--z", default="1", help="Параметр z (целое или p/q)")
    p_seq.add_argument("--b", type=int, default=1)
    p_seq.add_argument("--c", type=int, default=1)
    p_seq.add_argument("--r", type=int, default=1, help="Порядок многочлена Шмидта")
    p_seq.add_argument("--epsilon", type=int, choices=[1, -1], default=1)
    p_seq.add_argument("--json", action="store_true", help="Вывод в JSON")

    p_op = sub.add_parser("op", parents=[common], help="Разбор оператора Деланноя")
    p_op.add_argument("action", choices=["inspect"])
    p_op.add_argument("--epsilon", type=int, choices=[1, -1], default=1)
    p_op.add_argument("--z", default=None, help="Числовой z; по умолчанию символьный")
    p_op.add_argument("--gamma", default=None, help="Центр симметрии; по умолчанию ищется")

    p_const = sub.add_parser("constants", parents=[common], help="Таблица c_v, rho_v")
    p_const.add_argument("--vmax", type=int, required=True)
    p_const.add_argument("--format", choices=["text", "json"], default="text")

    p_red = sub.add_parser("reduce", parents=[common], help="Сертификат редукции степени")
    p_red.add_argument("--m", type=int, required=True)
    p_red.add_argument("--epsilon", type=int, choices=[1, -1], default=1)
    p_red.add_argument("--z", default=None, help="Числовой z; по умолчанию символьный")
    p_red.add_argument("--scale", default="2", help="Базис (scale*(k-gamma))^i; 2 даёт степени 2k+1")

    p_ver = sub.add_parser("verify", parents=[common], help="Проверка сравнений перебором")
    p_ver.add_argument("target", nargs="?", choices=["all"], default=None)
    p_ver.add_argument("--claim", choices=[c.value for c in Claim], default=None)
    for key in sorted({k for d in DEFAULT_SWEEPS.values() for k in d}):
        p_ver.add_argument(f"--{key}", default=None, help=f"Диапазон {key}: lo..hi или список")
    p_ver.add_argument("--epsilon", default=None, help="Знаки eps, например 1 или -1,1")
    p_ver.add_argument("--jobs", type=int, default=None, help="Число процессов (по умолчанию все ядра)")
    p_ver.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_ver.add_argument("--out", default=None, help="Файл для отчётов")
    p_ver.add_argument("--exploratory", action="store_true",
                       help="Добавить наблюдения для n, не являющихся степенью 2")
    p_ver.add_argument("--perturb-rho", action="append", default=None, help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Основная точка входа; возвращает код возврата."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = logging.WARNING

    try:
        logger = DataLogger(args.log_file, console_level=level)
    except Exception as e:
        print(f"[CRITICAL] Не удалось инициализировать логгер: {e}", file=sys.stderr)
        return 2

    try:
        logger.log_debug(LogCategory.CLI, f"Аргументы: {vars(args)}")
        return run_command(args, logger)
    finally:
        logger.close()


if __name__ == "__main__":
    sys.exit(main())
