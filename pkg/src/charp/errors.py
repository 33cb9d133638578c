"""Exception hierarchy shared by all modules."""


class CharpError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(CharpError, ZeroDivisionError):
    pass


class UnknownVariable(CharpError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotAPthPower(CharpError, ValueError):
    pass


class MixedFields(CharpError, ValueError):
    pass


class NotPIndependent(CharpError, ValueError):
    pass


class ZeroDivisor(CharpError, ValueError):
    pass


class BadCharacteristic(CharpError, ValueError):
    pass


class NonPrimeCharacteristic(BadCharacteristic):
    pass


class ZeroLeadingScalar(CharpError, ValueError):
    pass


class AllZero(CharpError, ValueError):
    pass


class BadIndex(CharpError, IndexError):
    pass


class BudgetExceeded(CharpError, RuntimeError):
    pass


class PointNotOnSurface(CharpError, ValueError):
    pass


class SingularPoint(CharpError, ValueError):
    pass


class NotRational(CharpError, ValueError):
    pass


class CertificateError(CharpError, AssertionError):
    """A symbolic identity that should hold exactly did not."""


class ConfigError(CharpError, ValueError):
    pass


class UnknownIdentifier(CharpError, NameError):
    pass


class ExprSyntaxError(CharpError, SyntaxError):
    """Malformed input text; carries 1-based ``lineno`` and ``offset`` (column)."""

    def __init__(self, msg, line=1, column=1, text=None):
        SyntaxError.__init__(self, msg, ("<input>", line, column, text))
        self.line = line
        self.column = column

    def __str__(self):
        return f"{self.msg} (line {self.line}, column {self.column})"
