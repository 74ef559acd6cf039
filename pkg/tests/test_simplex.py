import numpy as np
import pytest

from tnforms.combinatorics import simplex, subsimplices, opposite
from tnforms.errors import DegenerateSimplexError
from tnforms.simplex import (
    GeometricSimplex,
    all_subsimplices,
    barycentric_coordinates,
    barycentric_gradients,
    induced_facet_frame,
    nef_frames,
    oriented_subframe,
    outward_normal,
    random_simplex,
    reference_simplex,
    subsimplex_geometry,
    surface_gradient,
    tangent_basis,
    tn_frames,
)

RNG = np.random.default_rng(7)


class TestBarycentricGradients:
    def test_unit_interval(self):
        T = GeometricSimplex(np.array([[0.0], [1.0]]))
        g = barycentric_gradients(T)
        assert np.allclose(g, [[-1.0], [1.0]])

    def test_reference_triangle(self):
        g = barycentric_gradients(reference_simplex(2))
        assert np.allclose(g[1], [1.0, 0.0])
        assert np.allclose(g[2], [0.0, 1.0])

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_gradients_sum_to_zero(self, d):
        for _ in range(5):
            T = random_simplex(d, RNG)
            assert np.max(np.abs(barycentric_gradients(T).sum(axis=0))) < 1e-12

    @pytest.mark.parametrize("d", [2, 3])
    def test_interpolation_conditions(self, d):
        T = random_simplex(d, RNG)
        g = barycentric_gradients(T)
        for j in range(d + 1):
            lam = barycentric_coordinates(T, T.vertices[j])
            assert np.allclose(lam, np.eye(d + 1)[j], atol=1e-12)
        # gradient of lambda_i dotted with edge v_j - v_0 recovers the nodal difference
        for i in range(d + 1):
            for j in range(1, d + 1):
                got = g[i] @ (T.vertices[j] - T.vertices[0])
                want = (1.0 if i == j else 0.0) - (1.0 if i == 0 else 0.0)
                assert abs(got - want) < 1e-12

    def test_degenerate_rejected(self):
        flat_pts = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])
        with pytest.raises(DegenerateSimplexError):
            GeometricSimplex(flat_pts)

    def test_embedded_gradients_tangential(self):
        # a triangle embedded in R^3: gradients lie in its plane
        T = GeometricSimplex(RNG.standard_normal((3, 3)))
        g = barycentric_gradients(T)
        normal = np.cross(T.vertices[1] - T.vertices[0], T.vertices[2] - T.vertices[0])
        assert np.max(np.abs(g @ normal)) < 1e-10


class TestVolume:
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_reference_volume(self, d):
        from math import factorial

        assert abs(reference_simplex(d).volume - 1.0 / factorial(d)) < 1e-14

    def test_vertex_volume_is_one(self):
        v = GeometricSimplex(np.array([[0.3, 0.4]]))
        assert v.volume == 1.0


class TestSurfaceGradient:
    def test_full_simplex_projection_is_identity(self):
        T = random_simplex(3, RNG)
        g = barycentric_gradients(T)
        full = simplex(0, 1, 2, 3)
        for i in range(4):
            assert np.allclose(surface_gradient(T, full, i), g[i], atol=1e-12)

    def test_vertex_projection_is_zero(self):
        T = random_simplex(3, RNG)
        assert np.allclose(surface_gradient(T, simplex(1), 2), 0.0)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_scaled_duality_orthogonality(self, d):
        # grad_{f+i} lambda_i is orthogonal to grad lambda_j for j != i outside f
        for _ in range(10):
            T = random_simplex(d, RNG)
            g = barycentric_gradients(T)
            for f in all_subsimplices(T):
                if f.dim == d:
                    continue
                star = opposite(f, d).vertices
                for i in star:
                    gi = surface_gradient(T, simplex(*(f.vertices + (i,))), i)
                    for j in star:
                        if j == i:
                            continue
                        scale = np.linalg.norm(gi) * np.linalg.norm(g[j])
                        assert abs(gi @ g[j]) < 1e-12 * max(scale, 1.0)


class TestTnFrames:
    def test_vertex_anchor_gives_edge_tangents(self):
        T = random_simplex(3, RNG)
        fs = tn_frames(T, simplex(0))
        for row, i in zip(fs.normals_tn, fs.normal_labels):
            edge = T.vertices[i] - T.vertices[0]
            cosine = row @ edge / (np.linalg.norm(row) * np.linalg.norm(edge))
            assert abs(cosine - 1.0) < 1e-12  # parallel, pointing at vertex i

    def test_edge_anchor_of_tetrahedron(self):
        T = random_simplex(3, RNG)
        fs = tn_frames(T, simplex(0, 1))
        assert fs.normal_labels == (2, 3)
        p = fs.pairing()
        assert np.all(np.abs(np.diag(p)) > 0)
        assert abs(p[0, 1]) < 1e-12 and abs(p[1, 0]) < 1e-12

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_pairing_diagonal_random(self, d):
        for _ in range(10):
            T = random_simplex(d, RNG)
            for e in all_subsimplices(T):
                fs = tn_frames(T, e)
                p = fs.pairing()
                if p.size == 0:
                    continue
                off = p - np.diag(np.diag(p))
                assert np.max(np.abs(off)) < 1e-12 * max(1.0, np.max(np.abs(np.diag(p))))

    def test_diagonal_is_squared_norm(self):
        T = random_simplex(3, RNG)
        for e in all_subsimplices(T):
            fs = tn_frames(T, e)
            p = fs.pairing()
            for idx in range(p.shape[0]):
                assert abs(p[idx, idx] - np.linalg.norm(fs.normals_tn[idx]) ** 2) < 1e-11

    def test_tangents_span_edge_vectors(self):
        T = random_simplex(4, RNG)
        e = simplex(0, 2, 3)
        tang = tn_frames(T, e).tangents
        for i in (2, 3):
            v = T.vertices[i] - T.vertices[0]
            residual = v - tang.T @ (tang @ v)
            assert np.linalg.norm(residual) < 1e-12


class TestNefFrames:
    def test_full_face_reduces_to_tn(self):
        T = random_simplex(3, RNG)
        e = simplex(0, 1)
        full = simplex(0, 1, 2, 3)
        a, b = nef_frames(T, full, e), tn_frames(T, e)
        assert np.allclose(a.normals_face, b.normals_face)
        assert np.allclose(a.normals_tn, b.normals_tn)

    def test_codimension_one_parallel(self):
        T = random_simplex(3, RNG)
        fr = nef_frames(T, simplex(0, 1, 2), simplex(0, 1))
        u = fr.normals_face[0] / np.linalg.norm(fr.normals_face[0])
        v = fr.normals_tn[0] / np.linalg.norm(fr.normals_tn[0])
        assert min(np.linalg.norm(u - v), np.linalg.norm(u + v)) < 1e-12

    def test_span_agreement(self):
        T = random_simplex(4, RNG)
        f, e = simplex(0, 1, 3), simplex(1)
        fr = nef_frames(T, f, e)
        stacked = np.vstack([fr.normals_face, fr.normals_tn])
        assert np.linalg.matrix_rank(stacked, tol=1e-10) == f.dim - e.dim

    def test_requires_containment(self):
        T = random_simplex(3, RNG)
        with pytest.raises(ValueError):
            nef_frames(T, simplex(0, 1), simplex(2))


class TestOrientedSubframe:
    def test_counterclockwise_full_frame(self):
        T = GeometricSimplex(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
        fr = oriented_subframe(T, simplex(0, 1, 2))
        assert np.linalg.det(fr.vectors) > 0

    def test_edge_unit_tangent(self):
        T = random_simplex(3, RNG)
        fr = oriented_subframe(T, simplex(1, 3))
        v = T.vertices[3] - T.vertices[1]
        assert np.allclose(fr.vectors[0], v / np.linalg.norm(v))

    def test_shared_face_consistency(self):
        # two cells over the same face return the same frame
        pts = RNG.standard_normal((5, 3))
        T1 = GeometricSimplex(pts[[0, 1, 2, 3]], labels=(0, 1, 2, 3))
        T2 = GeometricSimplex(pts[[0, 1, 2, 4]], labels=(0, 1, 2, 4))
        f = simplex(0, 1, 2)
        a, b = oriented_subframe(T1, f), oriented_subframe(T2, f)
        assert np.array_equal(a.vectors, b.vectors)


class TestFacetFrames:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_induced_orientation(self, d):
        T = random_simplex(d, RNG)
        for F in subsimplices(T.full_simplex(), d - 1):
            frame, n = induced_facet_frame(T, F)
            assert np.linalg.det(np.vstack([n, frame.vectors])) > 0
            assert np.max(np.abs(frame.vectors @ n)) < 1e-12

    def test_outward_normal_points_away(self):
        T = random_simplex(3, RNG)
        centroid = T.vertices.mean(axis=0)
        for F in subsimplices(T.full_simplex(), 2):
            n = outward_normal(T, F)
            face_centroid = T.vertices[list(F.vertices)].mean(axis=0)
            assert n @ (face_centroid - centroid) > 0


class TestHelpers:
    def test_subsimplex_geometry_labels(self):
        T = random_simplex(3, RNG)
        g = subsimplex_geometry(T, simplex(1, 3))
        assert g.labels == (1, 3)
        assert np.array_equal(g.vertices[0], T.vertices[1])

    def test_random_simplex_deterministic(self):
        a = random_simplex(3, np.random.default_rng(5)).vertices
        b = random_simplex(3, np.random.default_rng(5)).vertices
        assert np.array_equal(a, b)

    def test_tangent_basis_of_vertex_empty(self):
        T = random_simplex(2, RNG)
        assert tangent_basis(T, simplex(1)).shape == (0, 2)
