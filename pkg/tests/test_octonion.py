"""Tests for octonion arithmetic and the multiplication table."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octoeigen.core.octonion import (
    BASIS_NAMES,
    DEFAULT_TABLE,
    I,
    IL,
    J,
    JL,
    K,
    KL,
    L,
    ONE,
    MultiplicationTable,
    Octonion,
    associator,
    batch_associator,
    batch_mul,
    conj,
    dot,
    dot_via_products,
    im,
    mul,
    norm,
    random_octonions,
    re,
)

coefficient = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
octonions = st.lists(coefficient, min_size=8, max_size=8).map(Octonion)


def assert_close(value, target, atol=1e-12):
    assert value.isclose(target, rtol=1e-12, atol=atol), f"{value!r} != {target!r}"


class TestMultiplicationTable:
    """Test the Fano-plane table and its orientations."""

    def test_default_has_seven_lines(self):
        assert len(DEFAULT_TABLE.triples) == 7

    def test_every_pair_on_exactly_one_line(self):
        lines = DEFAULT_TABLE.lines()
        for q, r in itertools.combinations(range(2, 9), 2):
            assert sum(1 for line in lines if {q, r} <= line) == 1

    def test_squares_are_minus_one(self):
        for name in BASIS_NAMES[1:]:
            unit = Octonion.unit(name)
            assert_close(mul(unit, unit), -1.0)

    def test_default_is_alternative(self):
        assert DEFAULT_TABLE.is_alternative()

    def test_doubling_names(self):
        assert_close(mul(I, L), IL)
        assert_close(mul(J, L), JL)
        assert_close(mul(K, L), KL)

    def test_orientation_count(self):
        assert sum(1 for _ in DEFAULT_TABLE.orientations()) == 128

    def test_flip_reverses_a_line(self):
        flipped = DEFAULT_TABLE.with_orientation(1)
        q, r, s = DEFAULT_TABLE.triples[0]
        left, right = Octonion.unit(q - 1), Octonion.unit(r - 1)
        assert_close(mul(left, right, flipped), -1.0 * Octonion.unit(s - 1))

    def test_zero_flips_is_same_table(self):
        assert np.array_equal(DEFAULT_TABLE.with_orientation(0).tensor, DEFAULT_TABLE.tensor)

    def test_describe_lists_products(self):
        assert "i*j=k" in DEFAULT_TABLE.describe()

    def test_from_triples_requires_seven(self):
        with pytest.raises(ValueError, match="7 oriented lines"):
            MultiplicationTable.from_triples([(2, 3, 4)], name="short")


class TestOctonionArithmetic:
    """Worked values of the basic operations."""

    def test_one_is_identity(self):
        x = Octonion([0.5, -1.0, 2.0, 0.0, 3.0, -0.25, 1.0, 4.0])
        assert_close(mul(ONE, x), x)
        assert_close(mul(x, ONE), x)

    def test_l_squared(self):
        assert_close(mul(L, L), -1.0)

    def test_quaternion_triple(self):
        assert_close(mul(I, J), K)
        assert_close(mul(J, I), -1.0 * K)

    def test_conj(self):
        assert_close(conj(ONE), ONE)
        assert_close(conj(I), -1.0 * I)
        assert_close(conj(mul(I, J)), mul(conj(J), conj(I)))

    def test_re_im(self):
        x = 3.0 + 2.0 * I
        assert re(x) == pytest.approx(3.0)
        assert_close(im(x), 2.0 * I)
        y = I + L
        assert_close(im(conj(y)), -1.0 * im(y))

    def test_dot(self):
        assert dot(I, I) == pytest.approx(1.0)
        assert dot(I, J) == pytest.approx(0.0)
        assert dot(I, mul(K, J)) == pytest.approx(-1.0)
        assert dot(J, mul(conj(K), I)) == pytest.approx(-1.0)

    def test_dot_via_products_matches(self):
        a = Octonion([1.0, 2.0, -1.0, 0.5, 0.0, 3.0, -2.0, 1.0])
        b = Octonion([0.0, 1.0, 1.0, -0.5, 2.0, 0.0, 1.0, -1.0])
        assert dot_via_products(a, b) == pytest.approx(dot(a, b), abs=1e-12)

    def test_norm(self):
        assert norm(Octonion()) == 0.0
        assert norm(3.0 + 4.0 * I) == pytest.approx(5.0)
        assert norm(mul(1.0 + I, J + L)) == pytest.approx(2.0)

    def test_associator_values(self):
        assert_close(associator(I, J, K), 0.0)
        a, b = I + L, J
        assert_close(associator(b, a, a), 0.0)
        assert_close(associator(I, J, L), 2.0 * KL)

    def test_scalar_operators(self):
        x = 1.0 + I
        assert_close(2.0 * x, 2.0 + 2.0 * I)
        assert_close(x / 2.0, 0.5 + 0.5 * I)
        assert_close(1.0 - x, -1.0 * I)
        assert_close(-x, -1.0 - I)

    def test_from_terms(self):
        assert_close(Octonion.from_terms({"1": 2.0, "kl": -1.0}), 2.0 - KL)

    def test_is_real(self):
        assert Octonion.real(3.0).is_real()
        assert not (3.0 + 1e-6 * L).is_real()

    def test_numpy_scalar_on_left(self):
        assert_close(np.float64(2.0) * I, 2.0 * I)

    def test_immutable(self):
        with pytest.raises(ValueError):
            I.coeffs[1] = 5.0


class TestOctonionIdentities:
    """Algebra identities on arbitrary inputs."""

    @given(octonions, octonions)
    def test_conj_antiautomorphism(self, a, b):
        left = conj(mul(a, b))
        right = mul(conj(b), conj(a))
        assert (left - right).norm() <= 1e-12 * max(1.0, a.norm() * b.norm())

    @given(octonions, octonions)
    def test_norm_multiplicative(self, a, b):
        assert abs(mul(a, b).norm() - a.norm() * b.norm()) <= 1e-12 * max(1.0, a.norm() * b.norm())

    @given(octonions, octonions)
    def test_alternativity(self, a, b):
        scale = max(1.0, a.norm() ** 2 * b.norm())
        assert associator(b, a, a).norm() <= 1e-12 * scale
        assert associator(b, a, conj(a)).norm() <= 1e-12 * scale

    @given(octonions, octonions, octonions)
    def test_dot_transfer(self, a, b, x):
        left = dot(a, mul(x, b))
        right = dot(b, mul(conj(x), a))
        assert left == pytest.approx(right, abs=1e-12 * max(1.0, a.norm() * b.norm() * x.norm()))

    @settings(max_examples=50)
    @given(octonions, octonions, octonions)
    def test_associator_antisymmetric(self, a, b, c):
        base = associator(a, b, c)
        scale = max(1.0, a.norm() * b.norm() * c.norm())
        assert abs(base.re()) <= 1e-11 * scale
        for perm, sign in (((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1), ((b, c, a), 1), ((c, a, b), 1)):
            assert (associator(*perm) - sign * base).norm() <= 1e-11 * scale


class TestBatchKernels:
    """Batched products agree with the scalar path."""

    def test_batch_mul_matches_scalar(self, rng):
        a, b = random_octonions(rng, 20), random_octonions(rng, 20)
        products = batch_mul(a, b)
        for row in range(20):
            assert np.allclose(products[row], mul(Octonion(a[row]), Octonion(b[row])).coeffs, atol=1e-14)

    def test_batch_associator_matches_scalar(self, rng):
        a, b, c = (random_octonions(rng, 5) for _ in range(3))
        values = batch_associator(a, b, c)
        for row in range(5):
            expected = associator(Octonion(a[row]), Octonion(b[row]), Octonion(c[row]))
            assert np.allclose(values[row], expected.coeffs, atol=1e-14)

    def test_random_octonions_are_unit(self, rng):
        data = random_octonions(rng, 100)
        assert np.allclose(np.sqrt((data ** 2).sum(axis=1)), 1.0)
