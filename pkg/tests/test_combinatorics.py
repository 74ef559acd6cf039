import numpy as np
import pytest
from hypothesis import given, strategies as st

from tnforms.combinatorics import (
    AbstractSimplex,
    IncreasingSequence,
    binomial,
    complement,
    increasing_sequences,
    opposite,
    permutation_sign,
    simplex,
    subsimplices,
    supersimplices,
    vandermonde_identity_check,
)


def seq(entries, n):
    return IncreasingSequence(tuple(entries), n)


def sign_oracle(perm):
    """Sign via the determinant of the permutation matrix."""
    n = len(perm)
    P = np.zeros((n, n))
    for i, p in enumerate(perm):
        P[i, p - 1] = 1.0
    return int(round(np.linalg.det(P)))


class TestIncreasingSequences:
    def test_singletons(self):
        assert [s.entries for s in increasing_sequences(1, 2)] == [(1,), (2,)]

    def test_empty_sequence(self):
        assert [s.entries for s in increasing_sequences(0, 3)] == [()]

    def test_two_of_four(self):
        got = [s.entries for s in increasing_sequences(2, 4)]
        assert got == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]

    @pytest.mark.parametrize("n", range(9))
    def test_counts(self, n):
        for m in range(n + 1):
            assert len(increasing_sequences(m, n)) == binomial(n, m)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            increasing_sequences(-1, 3)
        with pytest.raises(ValueError):
            increasing_sequences(4, 3)

    def test_validation(self):
        with pytest.raises(ValueError):
            seq((2, 1), 3)
        with pytest.raises(ValueError):
            seq((0, 1), 3)


class TestComplement:
    def test_examples(self):
        assert complement(seq((1, 3), 4)).entries == (2, 4)
        assert complement(seq((), 3)).entries == (1, 2, 3)
        assert complement(seq(range(1, 6), 5)).entries == ()

    @given(st.integers(0, 8).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, max(n, 1)), max_size=n))))
    def test_involution(self, data):
        n, chosen = data
        chosen = {c for c in chosen if c <= n}
        s = seq(sorted(chosen), n)
        assert complement(complement(s)) == s


class TestPermutationSign:
    def test_identity(self):
        assert permutation_sign(seq((1, 2), 3), seq((3,), 3)) == 1

    def test_single_inversion(self):
        assert permutation_sign(seq((2,), 3), seq((1, 3), 3)) == -1

    def test_errors(self):
        with pytest.raises(ValueError):
            permutation_sign(seq((1,), 3), seq((1, 2), 3))
        with pytest.raises(ValueError):
            permutation_sign(seq((1,), 3), seq((3,), 3))

    @given(st.integers(1, 7), st.data())
    def test_against_determinant_oracle(self, n, data):
        m = data.draw(st.integers(0, n))
        entries = tuple(sorted(data.draw(st.sets(st.integers(1, n), min_size=m, max_size=m))))
        s = seq(entries, n)
        sc = complement(s)
        assert permutation_sign(s, sc) == sign_oracle(s.entries + sc.entries)

    def test_split_product_rule(self):
        # sign(s, s^c) * sign(s^c, s) = (-1)^(m (n - m)), exhaustively for n <= 6
        for n in range(7):
            for m in range(n + 1):
                for s in increasing_sequences(m, n):
                    sc = complement(s)
                    assert permutation_sign(s, sc) * permutation_sign(sc, s) == (-1) ** (m * (n - m))


class TestSimplices:
    def test_edges_of_triangle(self):
        f = simplex(0, 1, 2)
        assert [g.vertices for g in subsimplices(f, 1)] == [(0, 1), (0, 2), (1, 2)]

    def test_faces_of_tetrahedron(self):
        f = simplex(0, 1, 2, 3)
        faces = subsimplices(f, 2)
        assert len(faces) == 4
        assert faces[0].vertices == (0, 1, 2)

    def test_vertices_of_edge(self):
        assert [g.vertices for g in subsimplices(simplex(0, 1), 0)] == [(0,), (1,)]

    def test_range_error(self):
        with pytest.raises(ValueError):
            subsimplices(simplex(0, 1), 2)

    def test_opposite(self):
        assert opposite(simplex(0), 3).vertices == (1, 2, 3)
        assert opposite(simplex(0, 1), 3).vertices == (2, 3)
        assert opposite(simplex(1, 3), 4).vertices == (0, 2, 4)

    def test_opposite_of_full_fails(self):
        with pytest.raises(ValueError):
            opposite(simplex(0, 1, 2), 2)

    def test_supersimplices(self):
        got = supersimplices(simplex(1), 1, 3)
        assert [g.vertices for g in got] == [(0, 1), (1, 2), (1, 3)]

    def test_validation(self):
        with pytest.raises(ValueError):
            AbstractSimplex((1, 1))
        with pytest.raises(ValueError):
            AbstractSimplex(())


class TestVandermonde:
    def test_d3_k1_s1(self):
        # expands to 1*1 + 2*1 = 3
        assert vandermonde_identity_check(3, 1, 1)

    @pytest.mark.parametrize("d", range(7))
    def test_s_zero_single_term(self, d):
        for k in range(d + 1):
            assert vandermonde_identity_check(d, k, 0)

    def test_exhaustive(self):
        for d in range(7):
            for k in range(d + 1):
                for s in range(d + 1):
                    assert vandermonde_identity_check(d, k, s)
