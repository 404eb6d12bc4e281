"""Exception types raised across the package."""


class InvalidInstance(ValueError):
    """Part sizes that do not describe an odd complete bipartite graph with m >= n."""


class LabelingError(ValueError):
    """A bit matrix that is not a canonically oriented edge-friendly labeling."""


class SwapError(ValueError):
    """A swap whose edges do not carry the required labels."""


class NoMixedPart(RuntimeError):
    """Neither part holds both a 0-vertex and a 1-vertex."""


class AssertionBreach(RuntimeError):
    """The descent found no pair with deg0(x) > deg1(y), or saw the inequality fail.

    ``state`` holds whatever diagnostics the raiser had at hand.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state or {}


class TargetUnreachable(ValueError):
    """The requested descent target is odd, negative, or above the start index."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration larger than the configured budget."""


class DescentStuck(RuntimeError):
    """No swap at a common neighbour can lower the index from this labeling."""
