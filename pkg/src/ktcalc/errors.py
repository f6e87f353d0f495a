"""Shared exception types."""


class InputError(ValueError):
    """A value violates a documented precondition or invariant.

    The message always names the violated condition so callers (and the
    command-line front end) can report it verbatim.
    """
