"""Exception types shared across the package."""


class ImbalanceError(Exception):
    """Base class for every error raised by netimbalance."""


class InvalidParameter(ImbalanceError, ValueError):
    pass


class ParseError(ImbalanceError, ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotConnectedError(ImbalanceError):
    pass


class UndefinedMetricError(ImbalanceError):
    pass


class UndefinedGradientError(ImbalanceError):
    pass


class CapacityError(ImbalanceError):
    pass


class NoCandidatesError(ImbalanceError):
    pass
