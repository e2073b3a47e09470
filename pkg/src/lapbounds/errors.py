"""Exception types shared across the package."""


class EdgeListError(ValueError):
    """Malformed edge-list input (bad token, self-loop, bad n= directive)."""


class IsolatedVertexError(ValueError):
    """An operation requiring positive degrees met a degree-0 vertex."""


class GenerationError(RuntimeError):
    """Random-graph rejection sampling exhausted its draw budget."""


class ConvergenceError(RuntimeError):
    """The eigensolver hit its sweep cap before reaching tolerance."""


class InconsistentTracesError(ValueError):
    """Trace pair implies a negative eigenvalue variance beyond slack."""
