"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for all domain errors raised by graphstress."""


class IndexOutOfRange(GraphError, IndexError):
    pass


class SelfLoop(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadParameter(GraphError):
    pass


class NotATree(GraphError):
    pass


class TooSmall(GraphError):
    pass


class TooLarge(GraphError):
    pass


class WrongDiameter(GraphError):
    pass


class InfeasibleParameters(GraphError):
    pass


class UnknownFixture(GraphError, KeyError):
    pass


class OutputLimitExceeded(GraphError):
    pass


class CountOverflow(GraphError, OverflowError):
    pass


class ParseError(GraphError):
    pass
