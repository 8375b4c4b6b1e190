"""Exception hierarchy shared by the library and the CLI."""


class PlanarIntervalError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class ParseError(PlanarIntervalError):
    exit_code = 3

    def __init__(self, message, line=None, position=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"byte {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.position = position


class ValidationError(PlanarIntervalError):
    exit_code = 7


class SelfLoop(ValidationError):
    def __init__(self, vertex):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class NonPlanar(PlanarIntervalError):
    exit_code = 4

    def __init__(self, message="graph is not planar", witness=None):
        super().__init__(message)
        # edge list of a Kuratowski subgraph, when one was computed
        self.witness = witness


class NotFourConnected(ValidationError):
    def __init__(self, message, triangle=None):
        super().__init__(message)
        self.triangle = triangle


class NoSeparator(PlanarIntervalError):
    pass


class MinimalityViolation(PlanarIntervalError):
    pass


class SearchExhausted(PlanarIntervalError):
    exit_code = 6


class InvariantViolation(PlanarIntervalError):
    exit_code = 5


class VerificationFailed(PlanarIntervalError):
    exit_code = 5
