"""Exception hierarchy shared by all convgoppa modules.

Every error class carries a distinct process exit code so the CLI can
map failures deterministically.
"""


class ConvGoppaError(Exception):
    """Base class for all library errors."""

    exit_code = 64


# --- finite field -----------------------------------------------------------

class FieldTooLarge(ConvGoppaError):
    exit_code = 65


class ReducibleModulus(ConvGoppaError):
    exit_code = 66


class NotPrimitive(ConvGoppaError):
    exit_code = 67


class FieldMismatch(ConvGoppaError):
    exit_code = 68


class DivisionByZero(ConvGoppaError, ZeroDivisionError):
    exit_code = 69


# --- polynomials ------------------------------------------------------------

class BothZero(ConvGoppaError):
    exit_code = 70


# --- polynomial matrices ----------------------------------------------------

class RankDeficient(ConvGoppaError):
    exit_code = 71


class NotBasic(ConvGoppaError):
    exit_code = 72


class FullRate(ConvGoppaError):
    exit_code = 73


class NotCanonical(ConvGoppaError):
    exit_code = 74


# --- code construction ------------------------------------------------------

class DimensionMismatch(ConvGoppaError):
    exit_code = 75


class DuplicateSections(ConvGoppaError):
    exit_code = 76


class EmptyGamma(ConvGoppaError):
    exit_code = 77


# --- distance search --------------------------------------------------------

class SearchSpaceTooLarge(ConvGoppaError):
    exit_code = 78


# --- configuration ----------------------------------------------------------

class ConfigError(ConvGoppaError):
    exit_code = 79


class ConfigSyntaxError(ConfigError):
    exit_code = 80


class SchemaError(ConfigError):
    exit_code = 81


class InvariantViolation(ConfigError):
    exit_code = 82
