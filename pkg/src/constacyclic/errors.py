"""Exception hierarchy shared by the library and the command line."""


class ConstacyclicError(Exception):
    """Base class. ``exit_code`` is what the CLI returns for it."""

    exit_code = 2


class ParameterError(ConstacyclicError, ValueError):
    """Invalid (p, k, m) or another out-of-range parameter."""


class ContextMismatch(ConstacyclicError, ValueError):
    """Operands built over different fields or rings."""


class NotInvertible(ConstacyclicError, ZeroDivisionError):
    pass


class PreconditionError(ConstacyclicError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class CapExceeded(ConstacyclicError, RuntimeError):
    exit_code = 3


class SchemaError(ConstacyclicError, ValueError):
    """Malformed code file or counterexample payload."""

    exit_code = 4


class PolySyntaxError(ConstacyclicError, ValueError):
    exit_code = 1
