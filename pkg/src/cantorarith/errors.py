class DomainError(ValueError):
    """Argument outside an operation's mathematical domain."""


class ResourceLimit(RuntimeError):
    """A state-count or time cap was exceeded while building an automaton."""


class NonWeakError(RuntimeError):
    """SCC analysis found a component that cannot be labeled weakly.

    Raised when a projection produces a relation outside the supported
    theory; never expected for formulas built from the provided atoms.
    """
