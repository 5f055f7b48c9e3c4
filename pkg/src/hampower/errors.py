"""Exception hierarchy shared by every module and mapped onto CLI exit codes."""


class HampowerError(Exception):
    exit_code = 1


class DomainError(HampowerError, ValueError):
    """Input outside an operation's domain or precondition."""

    exit_code = 1


class UnsupportedComparison(DomainError):
    """Two surds with distinct nonzero radicands were compared."""


class ResourceError(HampowerError):
    """An enumeration bound would be exceeded; pass an override to proceed."""

    exit_code = 2


class InternalError(HampowerError, RuntimeError):
    """An invariant that the algorithms guarantee was found broken."""

    exit_code = 3
