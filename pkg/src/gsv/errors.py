"""Error hierarchy shared by the whole package.

Every deliberate failure derives from EngineError and carries a category
used by the CLI to pick an exit code: "usage" maps to 1, "domain" to 2.
Check suites that merely find violations do not raise; they report.
"""


class EngineError(Exception):
    """Base class for failures raised on purpose by this package."""

    category = "domain"

    @property
    def kind(self) -> str:
        return type(self).__name__


class UsageError(EngineError):
    """Bad invocation: unknown command, unreadable or invalid config."""

    category = "usage"


class ParseError(UsageError):
    pass


class ValidationError(UsageError):
    pass


class UnknownCommand(UsageError):
    pass


class DomainError(EngineError):
    """Mathematically meaningless request (bad index, wrong instance...)."""
