"""Exception hierarchy.

Every error carries a short machine-readable ``code`` (the class name) so the
command-line front end can report it as JSON.
"""


class NotchQuadError(Exception):
    """Base class for all library errors."""

    @property
    def code(self):
        return type(self).__name__


class InvalidInput(NotchQuadError, ValueError):
    pass


class EvalAtPole(NotchQuadError, ValueError):
    pass


class PoleOnContour(NotchQuadError, ValueError):
    pass


class PoleOnSemiaxis(PoleOnContour):
    pass


class PoleOnSegment(PoleOnContour):
    pass


class NotProper(NotchQuadError, ValueError):
    pass


class PoleSetEmpty(NotchQuadError, ValueError):
    pass


class OffContour(NotchQuadError, ValueError):
    pass


class DivergentIntegral(NotchQuadError, ValueError):
    pass


class BadGeometry(NotchQuadError, ValueError):
    pass


class PolesOnBothSides(NotchQuadError, ValueError):
    pass


class PolesOutsideBeam(NotchQuadError, ValueError):
    pass


class BadKind(NotchQuadError, ValueError):
    pass


class BadParams(NotchQuadError, ValueError):
    pass


class ConvergenceFailure(NotchQuadError, RuntimeError):
    """Root polishing did not converge. Signals a bug for valid inputs."""
