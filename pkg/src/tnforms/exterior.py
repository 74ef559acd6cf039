"""Exterior algebra of constant-coefficient alternating forms on R^d.

A k-form is stored as its coefficient vector over the lexicographically
ordered increasing sequences of length k, always in the ambient positively
oriented orthonormal frame dx_1, ..., dx_d.  Subspace computations go
through explicit orthonormal :class:`Frame` objects; the frame's row order
defines the orientation used by the subspace Hodge star.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .combinatorics import IncreasingSequence, binomial, complement, permutation_sign

DEFAULT_TOL = 1e-10


@lru_cache(maxsize=None)
def sequences(k: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Lexicographic tuple of all increasing sequences of length k in 1..d."""
    if k < 0 or k > d:
        return ()
    return tuple(combinations(range(1, d + 1), k))


@lru_cache(maxsize=None)
def sequence_position(k: int, d: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(sequences(k, d))}


@dataclass(frozen=True, eq=False)
class AltForm:
    """Constant-coefficient alternating k-form on R^d."""

    d: int
    k: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float).reshape(-1)
        if not (0 <= self.k <= self.d):
            raise ValueError(f"need 0 <= k <= d, got k={self.k}, d={self.d}")
        if c.shape[0] != binomial(self.d, self.k):
            raise ValueError(
                f"expected {binomial(self.d, self.k)} coefficients for "
                f"(d, k) = ({self.d}, {self.k}), got {c.shape[0]}"
            )
        object.__setattr__(self, "coeffs", c)

    def __add__(self, other: "AltForm") -> "AltForm":
        _check_same_space(self, other)
        return AltForm(self.d, self.k, self.coeffs + other.coeffs)

    def __sub__(self, other: "AltForm") -> "AltForm":
        _check_same_space(self, other)
        return AltForm(self.d, self.k, self.coeffs - other.coeffs)

    def __mul__(self, scalar: float) -> "AltForm":
        return AltForm(self.d, self.k, self.coeffs * float(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "AltForm":
        return AltForm(self.d, self.k, -self.coeffs)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


def _check_same_space(a: AltForm, b: AltForm):
    if a.d != b.d or a.k != b.k:
        raise ValueError(f"form space mismatch: ({a.d},{a.k}) vs ({b.d},{b.k})")


def zero(d: int, k: int) -> AltForm:
    return AltForm(d, k, np.zeros(binomial(d, k)))


def basis_form(d: int, k: int, sigma: tuple[int, ...]) -> AltForm:
    """The basis form dx_sigma."""
    c = np.zeros(binomial(d, k))
    c[sequence_position(k, d)[tuple(sigma)]] = 1.0
    return AltForm(d, k, c)


def _merge_sign(sigma: tuple[int, ...], tau: tuple[int, ...]):
    """Sign and sorted union of two disjoint ascending tuples, or None on overlap."""
    if set(sigma) & set(tau):
        return None
    inversions = sum(1 for a in sigma for b in tau if a > b)
    merged = tuple(sorted(sigma + tau))
    return (-1 if inversions % 2 else 1), merged


def wedge(omega: AltForm, eta: AltForm) -> AltForm:
    """Wedge product; degrees add and antisymmetry carries the usual sign."""
    if omega.d != eta.d:
        raise ValueError("ambient dimension mismatch")
    d, p, q = omega.d, omega.k, eta.k
    if p + q > d:
        raise ValueError(f"wedge degree {p}+{q} exceeds ambient dimension {d}")
    out = np.zeros(binomial(d, p + q))
    pos = sequence_position(p + q, d)
    for i, si in enumerate(sequences(p, d)):
        a = omega.coeffs[i]
        if a == 0.0:
            continue
        for j, sj in enumerate(sequences(q, d)):
            b = eta.coeffs[j]
            if b == 0.0:
                continue
            ms = _merge_sign(si, sj)
            if ms is None:
                continue
            sign, merged = ms
            out[pos[merged]] += sign * a * b
    return AltForm(d, p + q, out)


def wedge_all(forms: list[AltForm], d: int | None = None) -> AltForm:
    """Wedge a list of forms left to right; the empty product is the constant 1."""
    if not forms:
        if d is None:
            raise ValueError("ambient dimension needed for the empty wedge")
        return AltForm(d, 0, np.ones(1))
    acc = forms[0]
    for w in forms[1:]:
        acc = wedge(acc, w)
    return acc


def contraction(omega: AltForm, v: np.ndarray) -> AltForm:
    """Interior product omega .| v, plugging v into the first slot."""
    if omega.k == 0:
        raise ValueError("cannot contract a 0-form")
    d, k = omega.d, omega.k
    v = np.asarray(v, dtype=float).reshape(d)
    out = np.zeros(binomial(d, k - 1))
    pos = sequence_position(k - 1, d)
    for idx, sig in enumerate(sequences(k, d)):
        a = omega.coeffs[idx]
        if a == 0.0:
            continue
        for i in range(k):
            sub = sig[:i] + sig[i + 1 :]
            out[pos[sub]] += a * (-1) ** i * v[sig[i] - 1]
    return AltForm(d, k - 1, out)


def hodge_star(omega: AltForm) -> AltForm:
    """Hodge star in the ambient positively oriented orthonormal frame."""
    d, k = omega.d, omega.k
    out = np.zeros(binomial(d, d - k))
    pos = sequence_position(d - k, d)
    for idx, sig in enumerate(sequences(k, d)):
        a = omega.coeffs[idx]
        if a == 0.0:
            continue
        s = IncreasingSequence(sig, d)
        sc = complement(s)
        out[pos[sc.entries]] += permutation_sign(s, sc) * a
    return AltForm(d, d - k, out)


def inner(omega: AltForm, eta: AltForm) -> float:
    """Inner product; the dx_sigma form an orthonormal basis."""
    _check_same_space(omega, eta)
    return float(np.dot(omega.coeffs, eta.coeffs))


def flat(v: np.ndarray) -> AltForm:
    """The 1-form v-flat with the same components as v."""
    v = np.asarray(v, dtype=float).reshape(-1)
    return AltForm(v.shape[0], 1, v.copy())


def sharp(omega: AltForm) -> np.ndarray:
    """Proxy vector of a 1-form; inverse of :func:`flat`."""
    if omega.k != 1:
        raise ValueError("sharp is defined for 1-forms")
    return omega.coeffs.copy()


def evaluate(omega: AltForm, vectors) -> float:
    """Apply the multilinear functional to k vectors."""
    k, d = omega.k, omega.d
    vecs = [np.asarray(v, dtype=float).reshape(d) for v in vectors]
    if len(vecs) != k:
        raise ValueError(f"expected {k} vectors, got {len(vecs)}")
    if k == 0:
        return float(omega.coeffs[0])
    V = np.column_stack(vecs)
    total = 0.0
    for idx, sig in enumerate(sequences(k, d)):
        a = omega.coeffs[idx]
        if a == 0.0:
            continue
        rows = [s - 1 for s in sig]
        total += a * np.linalg.det(V[rows, :])
    return float(total)


def volume_coefficient(omega: AltForm) -> float:
    """Coefficient of the volume form dx_1 ^ ... ^ dx_d of a top-degree form."""
    if omega.k != omega.d:
        raise ValueError("volume coefficient needs a top-degree form")
    return float(omega.coeffs[0])


@dataclass(frozen=True, eq=False)
class Frame:
    """Ordered frame of vectors spanning a subspace of R^d (one vector per row).

    ``oriented`` records that the row order is meaningful: it fixes the
    orientation used by the subspace Hodge star.
    """

    vectors: np.ndarray
    orthonormal: bool = True
    oriented: bool = True

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=float)
        if v.ndim != 2:
            raise ValueError("frame vectors must form a 2-D array (rows = vectors)")
        object.__setattr__(self, "vectors", v)

    @property
    def size(self) -> int:
        return self.vectors.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.vectors.shape[1]

    def validate(self, tol: float = DEFAULT_TOL):
        if self.orthonormal:
            g = self.vectors @ self.vectors.T
            if np.max(np.abs(g - np.eye(self.size))) > tol:
                raise ValueError("frame marked orthonormal fails the Gram check")


def standard_frame(d: int) -> Frame:
    return Frame(np.eye(d))


def restrict_to_frame(frame: Frame, omega: AltForm) -> AltForm:
    """Coefficients of omega restricted to the frame's span, in frame coordinates."""
    ell, k = frame.size, omega.k
    if omega.d != frame.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if k > ell:
        return zero(ell, ell)  # the restricted space is trivial
    out = np.empty(binomial(ell, k))
    for idx, tau in enumerate(sequences(k, ell)):
        out[idx] = evaluate(omega, [frame.vectors[t - 1] for t in tau])
    return AltForm(ell, k, out)


def pullback_embed(frame: Frame, omega_sub: AltForm) -> AltForm:
    """Embed a form given in frame coordinates back into the ambient space.

    For an orthonormal frame this is the pullback along the orthogonal
    projection onto the frame's span: the result agrees with ``omega_sub``
    on tangential vectors and annihilates the orthogonal complement.
    """
    if not frame.orthonormal:
        raise ValueError("embedding requires an orthonormal frame")
    ell = frame.size
    if omega_sub.d != ell:
        raise ValueError("form not expressed over the frame's vectors")
    k = omega_sub.k
    d = frame.ambient_dim
    acc = zero(d, k)
    for idx, tau in enumerate(sequences(k, ell)):
        c = omega_sub.coeffs[idx]
        if c == 0.0:
            continue
        factors = [flat(frame.vectors[t - 1]) for t in tau]
        acc = acc + c * wedge_all(factors, d=d)
    return acc


def hodge_star_in_subspace(frame: Frame, omega: AltForm, tol: float = DEFAULT_TOL) -> AltForm:
    """Hodge star of a tangential form taken inside the frame's span.

    The form is converted to frame coordinates, starred in the frame's
    dimension and orientation, and re-embedded into ambient coordinates.
    Raises if omega has a component orthogonal to the span.
    """
    if not (frame.orthonormal and frame.oriented):
        raise ValueError("subspace Hodge star needs an oriented orthonormal frame")
    restricted = restrict_to_frame(frame, omega)
    back = pullback_embed(frame, restricted)
    scale = max(1.0, omega.norm())
    if (back - omega).norm() > tol * scale:
        raise ValueError("form is not tangential to the frame's span")
    return pullback_embed(frame, hodge_star(restricted))
