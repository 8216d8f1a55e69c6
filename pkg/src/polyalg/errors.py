"""Exception hierarchy shared by all modules.

The command-line front end maps each class to a distinct exit code, so
library code should raise the most specific type that applies.
"""


class PolyalgError(Exception):
    """Base class for every error raised by this package."""


class ParseError(PolyalgError, ValueError):
    """Input text could not be turned into a polyomino."""


class PreconditionError(PolyalgError, ValueError):
    """An operation was invoked outside its documented domain."""


class InsufficientDepthError(PreconditionError):
    """A Hilbert-function prefix was too short for the requested recovery."""


class ResourceLimitError(PolyalgError, RuntimeError):
    """A computation would exceed the configured size guards."""


class FalsificationError(PolyalgError, RuntimeError):
    """Two independently computed results that must agree did not.

    This never indicates bad input: it means either an implementation bug
    or a genuine counterexample to a cross-checked identity, and it must
    abort loudly rather than be swallowed.
    """
