"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`GrunbaumError`, which the CLI maps to exit status 2.
"""


class GrunbaumError(ValueError):
    """Base class for all library errors."""


class BadArity(GrunbaumError):
    pass


class BadDimension(GrunbaumError):
    pass


class DuplicateFacet(GrunbaumError):
    pass


class NotPseudomanifold(GrunbaumError):
    """Some (n-1)-face does not lie in exactly two facets."""

    def __init__(self, message, offending_faces=()):
        super().__init__(message)
        self.offending_faces = list(offending_faces)


class Disconnected(GrunbaumError):
    pass


class TooLarge(GrunbaumError):
    pass


class NotRegular(GrunbaumError):
    pass


class NotBipartiteError(GrunbaumError):
    pass


class InvalidTwoColoring(GrunbaumError):
    pass


class InvalidColoring(GrunbaumError):
    pass


class MissingFace(GrunbaumError):
    pass


class NotFourColoring(GrunbaumError):
    pass


class NotTripartite(GrunbaumError):
    pass


class InvalidPalette(GrunbaumError):
    pass


class NotDistinct(InvalidPalette):
    pass


class TriangleInequalityViolated(InvalidPalette):
    pass


class WrongColor(GrunbaumError):
    pass


class BadBijection(GrunbaumError):
    pass


class UnknownName(GrunbaumError):
    pass


class ParseError(GrunbaumError):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidGraph(GrunbaumError):
    """Loop, parallel edge or out-of-range endpoint."""
