"""Exception hierarchy; each class maps to one CLI exit code."""


class KohnertError(Exception):
    exit_code = 1


class InputError(KohnertError, ValueError):
    """Malformed or out-of-domain user input."""

    exit_code = 2


class ResourceError(KohnertError):
    """An enumeration exceeded its state budget."""

    exit_code = 3


class IntegrityError(KohnertError):
    """A structural guarantee failed; indicates a bug, never bad input."""

    exit_code = 4


class ContractError(KohnertError, ValueError):
    """A documented precondition of an operation was violated."""

    exit_code = 2
