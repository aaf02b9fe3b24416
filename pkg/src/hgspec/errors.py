"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all hgspec errors."""


class NotConnectedError(Error):
    """Raised when an operation requires a connected hypergraph."""


class DisconnectedError(NotConnectedError):
    """Raised by metric queries when some vertex pair is unreachable."""


class NotRegularError(Error):
    """Raised when an operation requires (locally) constant vertex degrees."""


class DomainError(Error):
    """Raised when closed-form parameters fall outside their derivation."""


class NoConvergence(Error):
    """Iterative solver exhausted its iteration budget."""

    def __init__(self, iterations: int, residual: float):
        super().__init__(
            f"no convergence after {iterations} iterations "
            f"(residual {residual:.3e})"
        )
        self.iterations = iterations
        self.residual = residual


class DiameterTooSmall(Error):
    """The hypergraph is too small to place certificate centers."""

    def __init__(self, needed, actual, message: str | None = None):
        super().__init__(
            message or f"separation {needed} required, only {actual} available"
        )
        self.needed = needed
        self.actual = actual


class SizeOverflow(Error):
    """Generated instance would exceed the configured size cap."""


class InfeasibleParams(Error):
    """Generator parameters violate a divisibility or range constraint."""


class GenerationFailed(Error):
    """Rejection sampling gave up after the configured attempt cap."""


class CertificateError(Error):
    """A constructed certificate violated one of its guaranteed inequalities."""


class ParseError(Error):
    """Malformed edge-list input."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
