"""Exception types shared across the solver modules."""


class ConsistencyError(ValueError):
    """Inputs are individually valid but mutually inconsistent
    (e.g. a wavefunction requested at a non-eigenvalue energy)."""


class BracketError(ValueError):
    """An energy bracket does not straddle an eigenvalue."""


class ScanError(RuntimeError):
    """An energy scan found no sign change in its search window."""
