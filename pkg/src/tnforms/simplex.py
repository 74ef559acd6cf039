"""Geometric simplices: barycentric gradients, tangential-normal frames.

A :class:`GeometricSimplex` may be full-dimensional (a cell) or embedded
(a sub-simplex of a cell, carrying its own vertex coordinates).  All frame
constructions are deterministic: tangent frames come from modified
Gram-Schmidt applied to edge vectors in ascending vertex-label order, so
two cells sharing a sub-simplex derive identical frames from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial

import numpy as np

from .combinatorics import AbstractSimplex, opposite, subsimplices
from .errors import DegenerateSimplexError
from .exterior import Frame

DEGENERACY_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class GeometricSimplex:
    """An m-dimensional simplex embedded in R^d, vertices as rows.

    ``labels`` names the vertices; they default to 0..m and must ascend, so
    the stored vertex order is the ascending-label order that fixes the
    simplex orientation.
    """

    vertices: np.ndarray
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2:
            raise ValueError("vertices must be a 2-D array (rows = points)")
        object.__setattr__(self, "vertices", v)
        m = v.shape[0] - 1
        if m > self.ambient_dim:
            raise ValueError(f"{m}-simplex cannot live in R^{self.ambient_dim}")
        labels = self.labels if self.labels is not None else tuple(range(m + 1))
        labels = tuple(int(i) for i in labels)
        if len(labels) != m + 1:
            raise ValueError("one label per vertex required")
        object.__setattr__(self, "labels", labels)
        if m >= 1:
            svals = np.linalg.svd(self.edge_matrix, compute_uv=False)
            if svals[-1] <= DEGENERACY_RTOL * svals[0]:
                raise DegenerateSimplexError(
                    f"singular value ratio {svals[-1]:.3e}/{svals[0]:.3e} below threshold"
                )

    @property
    def ambient_dim(self) -> int:
        return self.vertices.shape[1]

    @property
    def dim(self) -> int:
        return self.vertices.shape[0] - 1

    @cached_property
    def edge_matrix(self) -> np.ndarray:
        """Columns v_i - v_0 for i = 1..m."""
        return (self.vertices[1:] - self.vertices[0]).T

    @cached_property
    def volume(self) -> float:
        """Euclidean m-volume; a vertex has volume 1 so point moments reduce to evaluation."""
        if self.dim == 0:
            return 1.0
        e = self.edge_matrix
        gram = e.T @ e
        return float(np.sqrt(max(np.linalg.det(gram), 0.0))) / factorial(self.dim)

    @cached_property
    def _gradients(self) -> np.ndarray:
        if self.dim == 0:
            return np.zeros((1, self.ambient_dim))
        e = self.edge_matrix
        g = e @ np.linalg.inv(e.T @ e)  # columns: gradients of lambda_1..lambda_m
        grads = np.empty((self.dim + 1, self.ambient_dim))
        grads[1:] = g.T
        grads[0] = -g.sum(axis=1)
        return grads

    def as_abstract(self) -> AbstractSimplex:
        return AbstractSimplex(self.labels)

    def full_simplex(self) -> AbstractSimplex:
        """The abstract simplex on this cell's local labels 0..dim."""
        return AbstractSimplex(tuple(range(self.dim + 1)))


def reference_simplex(d: int) -> GeometricSimplex:
    """Unit reference simplex with vertices 0, e_1, ..., e_d."""
    v = np.zeros((d + 1, d))
    v[1:] = np.eye(d)
    return GeometricSimplex(v)


def random_simplex(d: int, rng: np.random.Generator, scale: float = 1.0) -> GeometricSimplex:
    """Well-shaped random simplex: perturbed reference, resampled until conditioned."""
    base = reference_simplex(d).vertices
    while True:
        v = scale * (base + 0.3 * rng.uniform(-1.0, 1.0, size=base.shape))
        e = (v[1:] - v[0]).T
        svals = np.linalg.svd(e, compute_uv=False)
        if svals[-1] > 0.15 * svals[0]:
            return GeometricSimplex(v)


def subsimplex_geometry(T: GeometricSimplex, f: AbstractSimplex) -> GeometricSimplex:
    """The embedded geometric realization of a subsimplex, keeping its labels."""
    idx = [T.labels.index(i) for i in f.vertices]
    return GeometricSimplex(T.vertices[idx], labels=f.vertices)


def barycentric_gradients(T: GeometricSimplex) -> np.ndarray:
    """Gradients of the barycentric coordinates, one per row; rows sum to zero.

    For an embedded simplex the gradients are taken within its tangent plane.
    """
    return T._gradients.copy()


def barycentric_coordinates(T: GeometricSimplex, x: np.ndarray) -> np.ndarray:
    """Barycentric coordinates of x; least squares on the affine hull if embedded."""
    x = np.asarray(x, dtype=float).reshape(T.ambient_dim)
    m = T.dim
    A = np.vstack([np.ones(m + 1), T.vertices.T])
    b = np.concatenate([[1.0], x])
    if m == T.ambient_dim:
        return np.linalg.solve(A, b)
    lam, *_ = np.linalg.lstsq(A, b, rcond=None)
    return lam


def gram_schmidt(vectors: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt; raises on (near) linear dependence."""
    v = np.array(vectors, dtype=float)
    scale = np.max(np.abs(v)) if v.size else 1.0
    for i in range(v.shape[0]):
        for j in range(i):
            v[i] -= np.dot(v[i], v[j]) * v[j]
        norm = np.linalg.norm(v[i])
        if norm <= DEGENERACY_RTOL * max(scale, 1.0):
            raise DegenerateSimplexError("linearly dependent vectors in frame build")
        v[i] /= norm
    return v


def tangent_basis(T: GeometricSimplex, e: AbstractSimplex) -> np.ndarray:
    """Orthonormal tangent vectors of a subsimplex, (s, d), from ascending edges."""
    idx = [T.labels.index(i) for i in e.vertices]
    pts = T.vertices[idx]
    if len(idx) == 1:
        return np.zeros((0, T.ambient_dim))
    return gram_schmidt(pts[1:] - pts[0])


def oriented_subframe(T: GeometricSimplex, f: AbstractSimplex) -> Frame:
    """Oriented orthonormal frame of a subsimplex's tangent plane.

    The orientation comes from the ascending vertex order of f itself, never
    from the containing cell, so cells sharing f agree on it.
    """
    if f.dim < 1:
        raise ValueError("oriented frame needs a subsimplex of dimension >= 1")
    return Frame(tangent_basis(T, f), orthonormal=True, oriented=True)


def surface_gradient(T: GeometricSimplex, f: AbstractSimplex, i: int) -> np.ndarray:
    """Orthogonal projection of grad lambda_i onto the tangent plane of f."""
    gi = T._gradients[T.labels.index(i)]
    if f.dim == 0:
        return np.zeros(T.ambient_dim)
    basis = tangent_basis(T, f)
    return basis.T @ (basis @ gi)


@dataclass(frozen=True, eq=False)
class TnFrameSet:
    """Dual pair of bases for the normal plane of a subsimplex e (within f).

    ``normals_face`` holds the face-normal vectors and ``normals_tn`` the
    tangential-normal vectors, row i belonging to ``normal_labels[i]``; the
    two families pair diagonally.  ``tangents`` is an orthonormal basis of
    the tangent plane of e.
    """

    e: AbstractSimplex
    tangents: np.ndarray
    normal_labels: tuple[int, ...]
    normals_face: np.ndarray
    normals_tn: np.ndarray

    def pairing(self) -> np.ndarray:
        return self.normals_tn @ self.normals_face.T

    def validate(self, rtol: float = 1e-8):
        p = self.pairing()
        if p.size == 0:
            return
        diag = np.abs(np.diag(p))
        off = np.abs(p - np.diag(np.diag(p)))
        if np.any(diag <= 0.0) or np.max(off, initial=0.0) > rtol * max(diag.max(), 1.0):
            raise ValueError("tangential-normal pairing is not diagonal")


def tn_frames(T: GeometricSimplex, e: AbstractSimplex) -> TnFrameSet:
    """Tangent frame of e plus the two dual bases of its normal plane in T."""
    d = T.dim
    star_labels = () if e.dim == d else opposite(e, d).vertices
    grads = T._gradients
    face = np.array([grads[T.labels.index(i)] for i in star_labels]).reshape(len(star_labels), T.ambient_dim)
    tn = np.array(
        [
            surface_gradient(T, AbstractSimplex(tuple(sorted(e.vertices + (i,)))), i)
            for i in star_labels
        ]
    ).reshape(len(star_labels), T.ambient_dim)
    out = TnFrameSet(
        e=e,
        tangents=tangent_basis(T, e),
        normal_labels=star_labels,
        normals_face=face,
        normals_tn=tn,
    )
    out.validate()
    return out


def nef_frames(T: GeometricSimplex, f: AbstractSimplex, e: AbstractSimplex) -> TnFrameSet:
    """Dual bases of the normal plane of e inside the tangent plane of f."""
    if not (e.issubset(f) and e.dim < f.dim):
        raise ValueError("need e strictly contained in f")
    rest = tuple(i for i in f.vertices if i not in e.vertices)
    face = np.array([surface_gradient(T, f, i) for i in rest])
    tn = np.array(
        [
            surface_gradient(T, AbstractSimplex(tuple(sorted(e.vertices + (i,)))), i)
            for i in rest
        ]
    )
    out = TnFrameSet(
        e=e,
        tangents=tangent_basis(T, e),
        normal_labels=rest,
        normals_face=face,
        normals_tn=tn,
    )
    out.validate()
    return out


def outward_normal(T: GeometricSimplex, facet: AbstractSimplex) -> np.ndarray:
    """Unit outward normal of a facet of a full-dimensional cell."""
    if T.dim != T.ambient_dim:
        raise ValueError("outward normal defined on full-dimensional cells")
    if facet.dim != T.dim - 1:
        raise ValueError("facet must have codimension one")
    (i,) = set(T.labels) - set(facet.vertices)
    g = T._gradients[T.labels.index(i)]
    return -g / np.linalg.norm(g)


def induced_facet_frame(T: GeometricSimplex, facet: AbstractSimplex) -> tuple[Frame, np.ndarray]:
    """Orthonormal facet frame whose orientation is induced by the cell.

    Returns (frame, n) with n the unit outward normal and (n, frame rows) a
    positively oriented frame of R^d.  This is the orientation under which
    the tangential and normal traces are Hodge dual.
    """
    if T.dim < 2:
        raise ValueError("induced facet frame needs ambient dimension >= 2")
    n = outward_normal(T, facet)
    rows = tangent_basis(T, facet).copy()
    if np.linalg.det(np.vstack([n, rows])) < 0:
        rows[-1] = -rows[-1]
    return Frame(rows, orthonormal=True, oriented=True), n


def all_subsimplices(T: GeometricSimplex) -> list[AbstractSimplex]:
    """Every subsimplex of the cell, by dimension then lexicographic."""
    full = T.full_simplex()
    out = []
    for s in range(T.dim + 1):
        out.extend(subsimplices(full, s))
    return out
