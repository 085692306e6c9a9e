"""Exception hierarchy shared by all modules."""


class MonocoverError(Exception):
    """Base class for every error raised by this package."""


# graph construction

class GraphError(MonocoverError, ValueError):
    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class UncolouredEdge(GraphError):
    pass


class EmptySourceSet(MonocoverError, ValueError):
    pass


class EmptySet(MonocoverError, ValueError):
    pass


# matching

class InvalidMatching(MonocoverError, ValueError):
    pass


class NotMaximumMatching(MonocoverError):
    """An augmenting path exists, so the matching given was not maximum."""


# cover algorithm

class NonPositiveBudget(MonocoverError, ValueError):
    pass


class BudgetExhausted(MonocoverError):
    """The supplied budget is smaller than the independence number."""


class NotComplete(MonocoverError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InternalInvariantError(MonocoverError, AssertionError):
    """A step of the construction found a state the proof rules out.

    Raised only by logic errors (or a violated budget precondition that
    slipped past the cheaper checks).
    """


class LabelNotUnique(InternalInvariantError):
    pass


class LabelMissing(InternalInvariantError):
    pass


class CountingFailure(InternalInvariantError):
    pass


class NoVertexAtExactDistance(InternalInvariantError):
    pass


class UnlabelledNeighbour(InternalInvariantError):
    pass


class GoodnessViolated(InternalInvariantError):
    pass


class CoverageGap(InternalInvariantError):
    pass


# oracles / io

class TooLarge(MonocoverError, ValueError):
    pass


class TrichotomyViolation(MonocoverError, AssertionError):
    pass


class InvalidSpec(MonocoverError, ValueError):
    pass


class ParseError(MonocoverError, ValueError):
    pass
