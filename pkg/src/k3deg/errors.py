"""Exception types shared across the package."""


class K3DegError(Exception):
    """Base class for errors raised by this package."""


class NotInClassification(K3DegError):
    """The input lies outside the shapes covered by the classification tables."""

    def __init__(self, message, **data):
        super().__init__(message)
        self.data = data


class InvalidModel(K3DegError):
    """A fibre model failed validation; ``errors`` lists every violated condition."""

    def __init__(self, errors):
        super().__init__("; ".join(errors))
        self.errors = list(errors)


class ParseError(K3DegError):
    """Syntax error in a polynomial expression, with a 0-based column."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.reason = message
