"""Exception hierarchy shared by all carpet modules."""


class CarpetError(Exception):
    """Base class for all errors raised by this package."""


class HypothesisViolation(CarpetError):
    """A reaction term fails one of the structural hypotheses it must satisfy."""


class NonFiniteState(CarpetError):
    """A time step produced NaN or infinite nodal values."""


class NoCrossing(CarpetError):
    """A profile never crosses the requested level."""


class NoBracket(CarpetError):
    """A root-finding bracket could not be established."""


class BadBracket(CarpetError):
    """Dichotomy endpoints do not classify as (Invasion, Eradication)."""


class UndecidedVerdict(CarpetError):
    """A run needed by a dichotomy could not be classified within its horizon."""

    def __init__(self, parameter, value, message=""):
        self.parameter = parameter
        self.value = value
        super().__init__(message or f"undecided verdict at {parameter}={value!r}")


class PathTerminates(CarpetError):
    """A phase-plane path reached p = 0 before the target density."""

    def __init__(self, u_stop, message=""):
        self.u_stop = u_stop
        super().__init__(message or f"phase path terminates at u={u_stop!r}")


class QuadratureNotConverged(CarpetError):
    """Doubling quadrature nodes still changes the result beyond tolerance."""


class ConfigError(CarpetError):
    """Base class for configuration problems (CLI exit code 2)."""


class ParseError(ConfigError):
    """Configuration file is not parseable structured text."""


class ValidationError(ConfigError):
    """Configuration parsed but a field is missing, unknown or invalid."""

    def __init__(self, field, message=""):
        self.field = field
        super().__init__(message or f"invalid config field: {field}")


class ReplayMismatch(CarpetError):
    """Replayed outputs differ from the digests recorded in a manifest."""

    def __init__(self, files, message=""):
        self.files = list(files)
        super().__init__(message or f"digest mismatch for: {', '.join(self.files)}")
