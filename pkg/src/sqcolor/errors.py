"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised when an input file cannot be parsed.

    Carries the source name, 1-based line number, and the offending token
    so command line reports can point at the exact spot.
    """

    def __init__(self, source, line, token, message):
        self.source = source
        self.line = line
        self.token = token
        self.message = message
        super().__init__(f"{source}:{line}: bad token {token!r}: {message}")


class BudgetExceeded(RuntimeError):
    """A node-count budget ran out before the search finished."""

    def __init__(self, nodes, budget, what="search"):
        self.nodes = nodes
        self.budget = budget
        super().__init__(f"{what} exceeded node budget ({nodes} > {budget})")


class PreconditionViolated(ValueError):
    """An operation was called on inputs outside its stated domain."""


class NotInClass(ValueError):
    """The graph is not connected subcubic planar with girth at least 6."""


class GenerationFailed(RuntimeError):
    """Randomized instance growth gave up after bounded retries."""


class NotTwoVertex(ValueError):
    """The chosen vertex does not have degree exactly 2."""


class NotCutVertex(ValueError):
    """The chosen vertex is not a cut vertex."""


class ListTooSmall(ValueError):
    """A color list is smaller than the operation requires."""


class PartialColoring(ValueError):
    """A total coloring was required but some vertex is unassigned."""


class InconsistentRotation(ValueError):
    """A rotation system does not match the graph's adjacency."""


class UnknownName(KeyError):
    """No catalog entry under the requested name."""
