"""Tests for the exceptional Jordan algebra."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octoeigen.core.catalog import example1
from octoeigen.core.jordan import (
    JordanMatrix,
    OctMatrix3,
    OctVec3,
    char_residual,
    det,
    det_freudenthal,
    freudenthal,
    gen_matmul,
    jordan_product,
    matvec,
    outer,
    outer_scaled,
    power2,
    power3,
    power3_both,
    random_jordan,
    random_vector,
    sigma,
    sigma_from_traces,
    trace,
)
from octoeigen.core.octonion import I, J, K, L, ONE, Octonion, random_octonions


def jordan_close(first, second, atol=1e-12):
    return (first - second).to_matrix().norm() <= atol


def diag_values(matrix):
    return (matrix.p, matrix.m, matrix.n)


entries = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)
jordan_matrices = st.tuples(
    st.lists(entries, min_size=3, max_size=3),
    st.lists(st.lists(entries, min_size=8, max_size=8), min_size=3, max_size=3),
).map(lambda parts: JordanMatrix(*parts[0], *(Octonion(row) for row in parts[1])))


class TestJordanMatrix:
    """Layout and construction."""

    def test_layout(self):
        A = JordanMatrix(1.0, 2.0, 3.0, a=I, b=J, c=K)
        full = A.to_matrix()
        assert full.entry(0, 1).isclose(I)
        assert full.entry(0, 2).isclose(-1.0 * J)
        assert full.entry(2, 0).isclose(J)
        assert full.entry(1, 2).isclose(K)
        assert full.entry(2, 1).isclose(-1.0 * K)
        assert full.is_hermitian()

    def test_round_trip_through_full_matrix(self, rng):
        A = random_jordan(rng)
        assert jordan_close(JordanMatrix.from_matrix(A.to_matrix()), A)

    def test_scalars_coerced(self):
        A = JordanMatrix(1, 2, 3, a=2.0)
        assert isinstance(A.p, float)
        assert A.a.isclose(2.0)

    def test_scale_floor(self):
        assert JordanMatrix.diag(0.1, 0.2, 0.3).scale() == 1.0
        assert JordanMatrix(0.0, 0.0, 0.0, a=3.0 * L).scale() == pytest.approx(3.0)


class TestProducts:
    """Jordan product, powers and the Freudenthal product."""

    def test_identity_is_unit(self, rng):
        A = random_jordan(rng)
        assert jordan_close(jordan_product(A, JordanMatrix.identity()), A)

    def test_diagonal_product(self):
        product = jordan_product(JordanMatrix.diag(1, 2, 3), JordanMatrix.diag(4, 5, 6))
        assert diag_values(product) == pytest.approx((4.0, 10.0, 18.0))

    def test_commutative(self, rng):
        A, B = random_jordan(rng), random_jordan(rng)
        assert jordan_close(jordan_product(A, B), jordan_product(B, A), atol=1e-14)

    def test_square_trace_example1(self, example1_quaternionic):
        assert trace(power2(example1_quaternionic.matrix)) == pytest.approx(6.0)

    def test_diagonal_powers(self):
        D = JordanMatrix.diag(1, 2, 3)
        assert diag_values(power2(D)) == pytest.approx((1.0, 4.0, 9.0))
        assert diag_values(power3(D)) == pytest.approx((1.0, 8.0, 27.0))

    def test_power_associative_random(self, rng):
        for _ in range(100):
            A = random_jordan(rng)
            first, second = power3_both(A)
            assert (first - second).to_matrix().norm() <= 1e-12 * A.scale() ** 3

    def test_freudenthal_adjugate(self):
        D = JordanMatrix.diag(1, 2, 3)
        assert diag_values(freudenthal(D, D)) == pytest.approx((6.0, 3.0, 2.0))
        eye = JordanMatrix.identity()
        assert jordan_close(freudenthal(eye, eye), eye)

    def test_freudenthal_symmetric(self, rng):
        A, B = random_jordan(rng), random_jordan(rng)
        assert jordan_close(freudenthal(A, B), freudenthal(B, A), atol=1e-14)


class TestInvariants:
    """Trace, sigma, determinant and the characteristic identity."""

    def test_diagonal_values(self):
        D = JordanMatrix.diag(1, 2, 3)
        assert trace(D) == pytest.approx(6.0)
        assert sigma(D) == pytest.approx(11.0)
        assert det(D) == pytest.approx(6.0)

    def test_example1_det(self, example1_quaternionic):
        A = example1_quaternionic.matrix
        assert det(A) == pytest.approx(2.0)
        assert det_freudenthal(A) == pytest.approx(2.0)

    @pytest.mark.parametrize("theta", [0.0, 0.4, math.pi / 3])
    def test_example1_sigma(self, theta):
        p, q = 1.5, 2.0
        A = example1(p, q, theta).matrix
        assert sigma(A) == pytest.approx(3 * p ** 2 - 3 * q ** 2)
        assert sigma_from_traces(A) == pytest.approx(3 * p ** 2 - 3 * q ** 2)

    def test_char_residual_diagonal(self):
        assert char_residual(JordanMatrix.diag(1, 2, 3)).max_entry_norm() <= 1e-12

    def test_char_residual_example1(self):
        A = example1(1.0, 1.0, math.pi / 3).matrix
        assert char_residual(A).max_entry_norm() <= 1e-10

    def test_char_residual_random(self, rng):
        for _ in range(100):
            A = random_jordan(rng)
            assert char_residual(A).max_entry_norm() <= 1e-10 * A.scale() ** 3

    def test_det_cubic_in_scale(self, rng):
        A = random_jordan(rng)
        assert det(A * 2.5) == pytest.approx(2.5 ** 3 * det(A), rel=1e-12, abs=1e-12)

    @settings(max_examples=50)
    @given(jordan_matrices)
    def test_two_formulas_agree(self, A):
        assert abs(sigma(A) - sigma_from_traces(A)) <= 1e-12 * A.scale() ** 2
        assert abs(det(A) - det_freudenthal(A)) <= 1e-12 * A.scale() ** 3


class TestVectorsAndOuterProducts:
    """matvec, outer products and general matrix products."""

    def test_identity_matvec(self, rng):
        v = random_vector(rng)
        assert matvec(JordanMatrix.identity(), v).isclose(v)

    def test_diagonal_matvec(self):
        v = OctVec3(I, J + L, 2.0 - K)
        result = matvec(JordanMatrix.diag(2.0, 3.0, 4.0), v)
        assert result.isclose(OctVec3(2.0 * I, 3.0 * (J + L), 4.0 * (2.0 - K)))

    def test_outer_basis(self):
        e1 = OctVec3(ONE, 0.0, 0.0)
        assert (outer(e1, e1) - OctMatrix3.diagonal([1.0, 0.0, 0.0])).norm() == 0.0

    def test_outer_hermitian(self, rng):
        v = random_vector(rng)
        assert outer(v, v).is_hermitian()

    def test_outer_scaled_by_one(self, rng):
        v = random_vector(rng)
        assert (outer_scaled(v, 1.0) - outer(v, v)).norm() <= 1e-15

    def test_vector_helpers(self):
        v = OctVec3(3.0, 0.0, 4.0)
        assert v.norm() == pytest.approx(5.0)
        assert v.normalized().norm() == pytest.approx(1.0)
        assert v.flat.shape == (24,)
        with pytest.raises(ZeroDivisionError):
            OctVec3().normalized()

    def test_matmul_identity(self, rng):
        B = random_jordan(rng).to_matrix()
        assert (gen_matmul(OctMatrix3.identity(), B) - B).norm() <= 1e-15

    def test_matmul_not_associative(self, rng):
        worst = 0.0
        for _ in range(20):
            A, B, C = (OctMatrix3(random_octonions(rng, 9).reshape(3, 3, 8)) for _ in range(3))
            worst = max(worst, (gen_matmul(gen_matmul(A, B), C) - gen_matmul(A, gen_matmul(B, C))).norm())
        assert worst > 0.1

    def test_unitary_from_example1(self, example1_case, table):
        U = OctMatrix3.from_columns([example1_case.pair(name).unit for name in ("u_minus", "v_minus", "w_minus")])
        assert (U.matmul(U.dagger(), table) - OctMatrix3.identity()).norm() <= 1e-12

    def test_vector_right_mul_and_dagger(self):
        v = OctVec3(I, J, 0.0)
        assert v.right_mul(K).isclose(OctVec3(-1.0 * J, I, 0.0))
        assert v.dagger_dot(v).isclose(2.0)

    def test_random_vector_normalized(self, rng):
        assert random_vector(rng).norm() == pytest.approx(1.0)
        assert np.isfinite(random_vector(rng, normalized=False).flat).all()
