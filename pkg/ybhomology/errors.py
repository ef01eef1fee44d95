# --- ybhomology/errors.py ---
"""Exception hierarchy shared by the library, the CLI and the HTTP routes."""


class YBHomologyError(Exception):
    """Base class for every error raised by ybhomology."""

    # 1 = a mathematical claim was falsified, 2 = bad input / usage
    exit_code = 1


class ScalarDivisionError(YBHomologyError, ZeroDivisionError):
    exit_code = 2


class PoleError(YBHomologyError):
    """A rational function was evaluated at a root of its denominator."""

    def __init__(self, value, point):
        super().__init__(f"pole of {value} at y={point}")
        self.value = value
        self.point = point


class ParseError(YBHomologyError, ValueError):
    exit_code = 2

    def __init__(self, text, position, message):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class DimensionError(YBHomologyError, ValueError):
    exit_code = 2


class ResampleRequired(YBHomologyError):
    """Too few pole-free sample points were available for rank_eval."""


class RankMismatchError(YBHomologyError):
    def __init__(self, exact, evaluated, shape):
        super().__init__(
            f"rank disagreement on {shape[0]}x{shape[1]} matrix: "
            f"exact={exact} eval={evaluated}"
        )
        self.exact = exact
        self.evaluated = evaluated


class RecurrenceError(YBHomologyError):
    pass


class PreconditionError(YBHomologyError, ValueError):
    exit_code = 2


class ModuleError(YBHomologyError, ValueError):
    """Malformed coefficient module (wrong count, non-square matrices...)."""

    exit_code = 2

    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location


class WallConditionError(YBHomologyError):
    def __init__(self, pair):
        i, j = pair
        super().__init__(f"wall condition fails: A_{i} and A_{j} do not commute")
        self.pair = pair


class InvariantViolation(YBHomologyError):
    """An identity that must hold exactly did not."""

    def __init__(self, name, detail=""):
        super().__init__(f"{name} failed" + (f": {detail}" if detail else ""))
        self.name = name
