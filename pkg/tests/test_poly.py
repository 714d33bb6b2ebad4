import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from prqmf import poly

coeffs = st.floats(min_value=-10, max_value=10, allow_nan=False)
polys = st.lists(coeffs, min_size=1, max_size=12).map(np.array)


@st.composite
def symmetric_firs(draw, max_half=6):
    half = draw(st.lists(coeffs, min_size=0, max_size=max_half))
    center = draw(coeffs)
    return np.array(half + [center] + half[::-1])


class TestMultiply:
    def test_binomial_square(self):
        assert np.array_equal(poly.multiply([1, 1], [1, 1]), [1, 2, 1])

    def test_toy_product(self):
        out = poly.multiply([1, 2, 3, 2, 1], [-0.5, 1, -0.5])
        assert np.allclose(out, [-0.5, 0, 0, 1, 0, 0, -0.5], atol=1e-15)

    def test_scalar_identity(self):
        p = np.array([1.0, -2.0, 0.25])
        assert np.array_equal(poly.multiply([3.0], p), 3.0 * p)

    def test_length_law(self):
        assert poly.multiply(np.ones(5), np.ones(3)).size == 7

    @given(polys, polys, coeffs)
    def test_bilinearity(self, p, q, alpha):
        left = poly.multiply(alpha * p, q)
        right = alpha * poly.multiply(p, q)
        assert np.allclose(left, right, rtol=0, atol=1e-12 * (1 + np.abs(right).max()))

    @given(symmetric_firs(), symmetric_firs())
    def test_symmetric_product_is_symmetric_odd(self, p, q):
        out = poly.multiply(p, q)
        assert out.size % 2 == 1
        assert np.allclose(out, out[::-1], atol=1e-12 * (1 + np.abs(out).max()))

    @given(polys, polys)
    def test_alternate_distributes(self, p, q):
        assert np.array_equal(
            poly.alternate(poly.multiply(p, q)),
            poly.multiply(poly.alternate(p), poly.alternate(q)),
        )


class TestAlternate:
    def test_example(self):
        assert np.array_equal(poly.alternate([1, 2, 3]), [1, -2, 3])

    def test_length_one_fixed_point(self):
        assert np.array_equal(poly.alternate([0.5]), [0.5])

    @given(polys)
    def test_involution(self, p):
        assert np.array_equal(poly.alternate(poly.alternate(p)), p)


class TestEvaluate:
    def test_constant(self):
        vals = poly.evaluate([1.0], [0.0, 1.0, math.pi])
        assert np.allclose(vals, 1.0 + 0.0j)

    def test_dc_sum(self):
        assert abs(poly.evaluate([0.5, 0.5], 0.0)[0]) == pytest.approx(1.0)

    def test_alternating_sum(self):
        assert abs(poly.evaluate([0.5, 0.5], math.pi)[0]) == pytest.approx(0.0, abs=1e-15)


class TestAmplitude:
    def test_unit(self):
        assert poly.amplitude([1.0], 0.7) == pytest.approx(1.0)

    def test_zero_at_pi(self):
        assert poly.amplitude([0.25, 0.5, 0.25], math.pi) == pytest.approx(0.0, abs=1e-15)

    def test_negative_dc(self):
        assert poly.amplitude([-0.5, -1.0, -0.5], 0.0) == pytest.approx(-2.0)

    def test_even_length_needs_center(self):
        with pytest.raises(ValueError):
            poly.amplitude([1.0, 1.0], 0.5)

    @given(symmetric_firs(), st.integers(0, 63))
    def test_matches_evaluate_magnitude(self, p, seed):
        rng = np.random.default_rng(seed)
        w = rng.uniform(0.0, math.pi, 64)
        mag = np.abs(poly.evaluate(p, w))
        amp = np.abs(poly.amplitude(p, w))
        assert np.allclose(mag, amp, rtol=0, atol=1e-12 * (1 + np.abs(p).sum()))


class TestValidation:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            poly.as_poly([])

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            poly.as_poly([1.0, math.nan])

    def test_rejects_inf(self):
        with pytest.raises(ValueError):
            poly.as_poly([math.inf])

    def test_symmetry_check(self):
        assert poly.is_symmetric([1.0, 2.0, 1.0])
        assert not poly.is_symmetric([1.0, 2.0])
        assert not poly.is_symmetric([1.0, 2.0, 1.1])
