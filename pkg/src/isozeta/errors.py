"""Shared exception types.

The CLI maps these onto exit codes: InputError -> 2, GuardError -> 3,
and any mathematical mismatch reported by a command -> 1.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad file, bad parameters)."""


class GuardError(RuntimeError):
    """A resource guard refused the computation (size/degree limits)."""


class InternalCheckError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
