# tests/conftest.py
import sys
from pathlib import Path

import pytest

# Корень проекта в sys.path, как в main.py
project_root = Path(__file__).parent.parent.resolve()
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from reduction.constant_table import build_constant_table  # noqa: E402
from utils.logger import DataLogger  # noqa: E402


@pytest.fixture(scope="session")
def table():
    return build_constant_table(6)


@pytest.fixture
def logger():
    log = DataLogger()
    yield log
    log.close()
