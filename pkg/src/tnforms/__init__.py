"""Tangential-normal bases and geometric decompositions of polynomial
differential forms on simplices and simplicial meshes."""

from .combinatorics import (
    AbstractSimplex,
    IncreasingSequence,
    binomial,
    complement,
    increasing_sequences,
    opposite,
    permutation_sign,
    simplex,
    subsimplices,
    vandermonde_identity_check,
)
from .exterior import (
    AltForm,
    Frame,
    contraction,
    flat,
    hodge_star,
    hodge_star_in_subspace,
    inner,
    pullback_embed,
    sharp,
    wedge,
)
from .simplex import (
    GeometricSimplex,
    TnFrameSet,
    barycentric_gradients,
    nef_frames,
    oriented_subframe,
    random_simplex,
    reference_simplex,
    surface_gradient,
    tn_frames,
)
from .poly import (
    BernsteinPoly,
    bernstein_eval,
    integrate_bernstein,
    interpolation_points,
    lagrange_decomposition_dims,
    lagrange_eval,
    lattice,
)
from .tnbasis import TnBasisElement, decompose_altk, hodge_coefficient, pairing_matrix, realize

__version__ = "0.1.0"
