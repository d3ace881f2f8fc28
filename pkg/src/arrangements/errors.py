"""Exception types raised across the package."""


class ArrangementError(ValueError):
    pass


class IdenticalPoints(ArrangementError):
    pass


class IdenticalLines(ArrangementError):
    pass


class NotCollinear(ArrangementError):
    pass


class DuplicatePoints(ArrangementError):
    pass


class DuplicateLine(ArrangementError):
    pass


class DuplicatePoint(ArrangementError):
    pass


class BadK(ArrangementError):
    pass


class UnknownPoint(ArrangementError):
    pass


class NotACentrex(ArrangementError):
    pass


class TooFewPoints(ArrangementError):
    pass


class UnsupportedDegenerate(TooFewPoints):
    pass


class ParseError(ArrangementError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
