"""Exception types shared across the library."""


class DegenerateSimplexError(ValueError):
    """Simplex vertices are affinely dependent within tolerance."""


class UnisolvenceError(RuntimeError):
    """A degree-of-freedom system that should be invertible is singular."""


class MeshFormatError(ValueError):
    """Mesh file malformed or mesh data fails validation."""
