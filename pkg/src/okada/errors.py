"""Exception hierarchy shared by the library."""


class OkadaError(Exception):
    """Base class for all library errors."""


class RankMismatchError(OkadaError, ValueError):
    """Operands live at different ranks."""


class PropagatingMismatchError(OkadaError, ValueError):
    """Half diagrams with different propagating label sets cannot be glued."""


class InternalInvariantError(OkadaError, RuntimeError):
    """A structural theorem the library relies on failed to hold.

    Raised when a computation contradicts an invariant that is supposed to be
    automatic (unique lattice bounds, confluence of normalization, uniqueness
    of triangular factorizations, ...).  Seeing this exception means a bug in
    the library, not bad user input.
    """
