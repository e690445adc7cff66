from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fredpairs import DimensionError, InputError, RatMatrix, direct_sum, hstack, vstack
from fredpairs.generators import GenConfig, SplitMix64, random_matrix

from conftest import mat


class TestRref:
    def test_zero_matrix_is_fixed(self):
        z = RatMatrix.zero(2, 2)
        result = z.rref()
        assert result.reduced == z
        assert result.pivot_columns == ()
        assert result.rank == 0

    def test_rank_one(self):
        result = mat([[2, 4], [1, 2]]).rref()
        assert result.reduced == mat([[1, 2], [0, 0]])
        assert result.pivot_columns == (0,)
        assert result.rank == 1

    def test_identity_is_fixed(self):
        eye = RatMatrix.identity(3)
        result = eye.rref()
        assert result.reduced == eye
        assert result.pivot_columns == (0, 1, 2)

    def test_idempotent(self):
        a = mat([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
        red = a.rref().reduced
        assert red.rref().reduced == red

    def test_empty_shapes(self):
        assert RatMatrix.zero(0, 3).rref().rank == 0
        assert RatMatrix.zero(3, 0).rref().rank == 0


class TestAlgebra:
    def test_multiply_identity(self):
        a = mat([[1, 2], [3, 4]])
        assert RatMatrix.identity(2) @ a == a

    def test_transpose(self):
        assert mat([[1, 2]]).transpose() == mat([[1], [2]])
        assert RatMatrix.zero(0, 3).transpose().shape == (3, 0)

    def test_direct_sum(self):
        assert direct_sum(mat([[1]]), mat([[2]])) == mat([[1, 0], [0, 2]])

    def test_shape_mismatch_raises(self):
        with pytest.raises(DimensionError):
            mat([[1]]) + mat([[1, 2]])
        with pytest.raises(DimensionError):
            mat([[1, 2]]) @ mat([[1, 2]])

    def test_stacking(self):
        a = mat([[1, 2]])
        assert hstack(a, a) == mat([[1, 2, 1, 2]])
        assert vstack(a, a) == mat([[1, 2], [1, 2]])

    def test_exact_fractions(self):
        a = mat([["1/3", "1/6"]])
        assert a[0, 0] + a[0, 1] == Fraction(1, 2)


class TestRankFactorization:
    def test_rank_one_outer_product(self):
        fact = mat([[1, 2], [2, 4]]).rank_factorization()
        assert fact.rank == 1
        assert fact.left == mat([[1], [2]])
        assert fact.right == mat([[1, 2]])
        assert fact.left @ fact.right == mat([[1, 2], [2, 4]])

    def test_identity(self):
        fact = RatMatrix.identity(3).rank_factorization()
        assert fact.rank == 3
        assert fact.left == RatMatrix.identity(3)
        assert fact.right == RatMatrix.identity(3)

    def test_zero(self):
        fact = RatMatrix.zero(2, 3).rank_factorization()
        assert fact.rank == 0
        assert fact.left.shape == (2, 0)
        assert fact.right.shape == (0, 3)


def penrose_identities_hold(a, b):
    return (
        a @ b @ a == a
        and b @ a @ b == b
        and (a @ b).transpose() == a @ b
        and (b @ a).transpose() == b @ a
    )


class TestPseudoinverse:
    def test_invertible_1x1(self):
        assert mat([[2]]).pseudoinverse() == mat([["1/2"]])

    def test_row_vector(self):
        assert mat([[1, 1]]).pseudoinverse() == mat([["1/2"], ["1/2"]])

    def test_zero(self):
        assert RatMatrix.zero(2, 3).pseudoinverse() == RatMatrix.zero(3, 2)

    def test_penrose_identities_random(self):
        cfg = GenConfig(seed=7, max_dim=6)
        rng = cfg.rng()
        for _ in range(25):
            rows, cols = rng.randint(0, 5), rng.randint(0, 5)
            rank = rng.randint(0, min(rows, cols)) if min(rows, cols) else 0
            a = random_matrix(cfg, rows, cols, rank, rng)
            b = a.pseudoinverse()
            assert penrose_identities_hold(a, b)
            assert b.pseudoinverse() == a

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.lists(st.integers(min_value=-4, max_value=4), min_size=3, max_size=3),
            min_size=2,
            max_size=4,
        )
    )
    def test_penrose_identities_hypothesis(self, rows):
        a = mat(rows)
        assert penrose_identities_hold(a, a.pseudoinverse())

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.lists(st.integers(min_value=-4, max_value=4), min_size=4, max_size=4),
            min_size=2,
            max_size=4,
        )
    )
    def test_rank_nullity_hypothesis(self, rows):
        from fredpairs import kernel_basis, image_basis

        a = mat(rows)
        assert kernel_basis(a).dim + a.rank == a.cols
        assert image_basis(a).dim == a.rank


class TestConstructedRank:
    def test_requested_rank_is_exact(self):
        cfg = GenConfig(seed=3, max_dim=6)
        rng = cfg.rng()
        for rank in range(5):
            assert random_matrix(cfg, 5, 6, rank, rng).rank == rank


class TestJson:
    def test_roundtrip(self):
        a = mat([[1, "2/3"], ["-3/7", 0]])
        assert RatMatrix.from_json_obj(a.to_json_obj()) == a

    def test_integers_stay_integers(self):
        assert mat([[2, "4/2"]]).to_json_obj() == [[2, 2]]

    def test_rejects_zero_denominator(self):
        with pytest.raises(InputError):
            RatMatrix.from_json_obj([["1/0"]])

    def test_canonicalizes_on_read(self):
        a = RatMatrix.from_json_obj([["2/4"]])
        assert a[0, 0] == Fraction(1, 2)

    def test_rejects_floats(self):
        with pytest.raises(InputError):
            RatMatrix.from_json_obj([[1.5]])

    def test_rejects_ragged(self):
        with pytest.raises(InputError):
            RatMatrix.from_json_obj([[1, 2], [3]])


def test_splitmix_reference_values():
    # first outputs for seed 1234567, per the public splitmix64 test vectors
    rng = SplitMix64(1234567)
    assert rng.next_u64() == 6457827717110365317
    assert rng.next_u64() == 3203168211198807973
