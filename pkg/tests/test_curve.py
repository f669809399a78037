import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicyclic.curve import (
    derivative_matrix,
    frequencies,
    nonflatness_check,
    rotation_matrix,
    sm_coords,
    sm_derivative,
    sm_eval,
)
from bicyclic.verify import vandermonde_det

ks = st.integers(1, 6)
ts = st.floats(-10, 10, allow_nan=False)


def test_frequencies():
    assert list(frequencies(3)) == [1, 3, 5]


@given(ks, ts)
def test_antipodal_symmetry(k, t):
    assert np.allclose(sm_coords(k, t + math.pi), -sm_coords(k, t), atol=1e-12)


@given(ks, ts)
def test_points_lie_on_a_sphere(k, t):
    assert math.isclose(np.linalg.norm(sm_coords(k, t)) ** 2, k, rel_tol=1e-12)


def test_sm_eval_records_angle():
    p = sm_eval(2, 7.0)
    assert p.k == 2 and math.isclose(p.source_angle, 7.0 - 2 * math.pi)
    assert np.allclose(p.coords, [math.cos(7), math.sin(7), math.cos(21), math.sin(21)])


@pytest.mark.parametrize("k,order", [(k, r) for k in (1, 2, 3) for r in range(1, 2 * k)])
def test_derivatives_against_finite_differences(k, order):
    t, h = 0.37, 1e-3
    lower = sm_derivative(k, t + h, order - 1) - sm_derivative(k, t - h, order - 1)
    assert np.allclose(lower / (2 * h), sm_derivative(k, t, order), rtol=1e-4, atol=1e-4)


def test_derivative_order_range():
    with pytest.raises(ValueError):
        sm_derivative(2, 0.0, 4)
    with pytest.raises(ValueError):
        sm_derivative(2, 0.0, -1)


@given(ks, ts, ts)
def test_rotation_moves_along_the_curve(k, t, tau):
    R = rotation_matrix(k, tau)
    assert np.allclose(R @ R.T, np.eye(2 * k), atol=1e-12)
    assert np.allclose(R @ sm_coords(k, t), sm_coords(k, t + tau), atol=1e-9)


@pytest.mark.parametrize("k", range(1, 7))
def test_raw_determinant_matches_vandermonde_product(k):
    for t in (0.0, 0.4, 2.9):
        raw = abs(np.linalg.det(derivative_matrix(k, t)))
        assert math.isclose(raw, vandermonde_det(k), rel_tol=1e-9)


def test_vandermonde_product_small_case():
    # k = 1: the frame of (cos t, sin t) is a rotation
    assert vandermonde_det(1) == 1.0
    # k = 2: (3^2 - 1^2) * (1 * 3 * (3^2 - 1^2)) = 8 * 24
    assert vandermonde_det(2) == 192.0


@given(ks, ts)
def test_normalized_determinant_is_positive_and_rotation_invariant(k, t):
    v = nonflatness_check(k, t)
    assert v > 0
    assert math.isclose(v, nonflatness_check(k, 0.0), rel_tol=1e-8)
