"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: InputError -> 1, UnsupportedClassError -> 2,
InternalInvariantError -> 4.  A check that fails or is indeterminate is not an
exception; it is a normal CheckOutcome and maps to exit code 3.
"""


class SingulactError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SingulactError):
    """Malformed or rejected input: syntax errors, dimension mismatches,
    violated preconditions, exceeded caps."""


class ParseError(InputError):
    """Syntax error in a polynomial or ideal expression; carries the byte
    offset into the input."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class CapsExceededError(InputError):
    """A polyhedral computation was asked to run above its configured size caps."""


class UnsupportedClassError(SingulactError):
    """The input is valid but outside the class of inputs the engine supports
    (e.g. a Jacobian ideal that does not reduce to a monomial ideal)."""


class InternalInvariantError(SingulactError):
    """An internal consistency check failed (e.g. primal/dual disagreement).
    Always a bug, never a user error."""
