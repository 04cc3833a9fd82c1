# utils/exceptions.py
"""
Пользовательские исключения для проекта.
"""

# --- Исключения точной арифметики ---
class ArithmeticException(Exception):
    """Базовый класс для исключений точной арифметики."""
    pass

class DomainError(ArithmeticException, ValueError):
    """Аргумент вне области определения (чётный p, отрицательная степень, v2(0) ...)."""
    pass

class PoleError(ArithmeticException, ZeroDivisionError):
    """Вычисление рациональной функции в нуле знаменателя."""
    pass

# --- Исключения для последовательностей ---
class SequenceException(Exception):
    """Базовый класс для исключений генераторов последовательностей."""
    pass

class SequenceSpecException(SequenceException, ValueError):
    """Недопустимое описание последовательности (семейство, ε, r)."""
    pass

# --- Исключения для операторов сдвига ---
class OperatorException(Exception):
    """Базовый класс для исключений алгебры операторов."""
    pass

class DegenerateOperatorError(OperatorException):
    """Оператор вырожден: R_L непусто или индициальный многочлен тождественно равен нулю."""
    pass

# --- Исключения для редукции ---
class ReductionException(Exception):
    """Базовый класс для исключений редукции."""
    pass

class ReductionError(ReductionException):
    """Не удалось исключить старший член (ведущий коэффициент редуктора обнулился)."""
    pass

class IntegralityError(ReductionException):
    """Ожидаемая целочисленность константы нарушена."""
    pass

# --- Исключения для проверки сравнений ---
class VerificationException(Exception):
    """Базовый класс для исключений проверки сравнений."""
    pass

class ClaimPreconditionError(VerificationException, ValueError):
    """Нарушено предусловие утверждения, которое нельзя выразить как not-applicable."""
    pass

class SweepEngineException(VerificationException):
    """Исключение для ошибок движка перебора параметров."""
    pass

# --- Исключения для конфигурации ---
class ConfigException(Exception):
    """Базовый класс для исключений конфигурации."""
    pass

class RangeParseError(ConfigException, ValueError):
    """Некорректная строка диапазона ("lo..hi" или список через запятую)."""
    pass
