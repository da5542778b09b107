"""Exception hierarchy shared by every module of the package."""


class GeometryError(ValueError):
    """Base class for all errors raised by eulerline."""


class DimensionMismatchError(GeometryError):
    pass


class InvalidLineError(GeometryError):
    pass


class NotOnSphereError(GeometryError):
    """A configuration point does not lie on the unit hypersphere."""


class HypothesisError(GeometryError):
    """Inputs fall outside the hypotheses of the theorem being checked."""


class DegenerateError(GeometryError):
    pass


class PointAtInfinityError(GeometryError):
    """Barycentric weights sum to zero, so there is no finite point."""


class InvalidPairError(GeometryError):
    """Shinagawa pair (0, 0) has no associated center."""


class NormalizationError(GeometryError):
    pass


class TranslationCase(GeometryError):
    """Raised for lambda = -1, where the vertex map is a translation.

    ``translation`` is the constant vector added to every vertex.
    """

    def __init__(self, translation):
        self.translation = translation
        super().__init__(f"lambda = -1: vertex map is the translation by {translation}")


class TableError(GeometryError):
    """Problem in a center table; ``line`` is the 1-based input line, if known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
