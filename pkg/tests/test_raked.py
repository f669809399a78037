import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicyclic.raked import (
    RakedTrigPoly,
    RootMultiset,
    SelfInvPoly,
    deform,
    newton_power_sums,
    odd_power_expansion,
    poly_from_multiset,
    power_sum_check,
    power_sums,
    root_localization_check,
    selfinv_roots,
    selfinv_to_trig,
    trig_to_selfinv,
)
from bicyclic.verify import random_raked, random_real_raked

seeds = st.integers(0, 2**32 - 1)
ks = st.integers(1, 4)


def _poly(k, seed):
    return random_raked(k, np.random.default_rng(seed))


@given(ks, seeds, st.floats(-7, 7))
def test_trig_and_selfinv_agree_on_the_circle(k, seed, t):
    A = _poly(k, seed)
    D = trig_to_selfinv(A)
    z = complex(math.cos(t), math.sin(t))
    value = z ** (-(2 * k - 1)) * D(z)
    assert abs(value.imag) < 1e-10 * (1 + np.abs(D.coeffs).sum())
    assert math.isclose(value.real, A(t), abs_tol=1e-10 * (1 + np.abs(D.coeffs).sum()))


@given(ks, seeds)
def test_image_is_self_inversive_and_raked(k, seed):
    D = trig_to_selfinv(_poly(k, seed))
    assert D.degree == 4 * k - 2
    assert D.self_inversive_residual() < 1e-14
    assert D.raked_residual() < 1e-14


@given(ks, seeds, st.floats(0.1, 5), st.floats(-3, 3))
def test_round_trip_up_to_a_positive_scalar(k, seed, scale, phase):
    A = _poly(k, seed)
    D = trig_to_selfinv(A)
    rotated = SelfInvPoly(D.coeffs * scale * np.exp(1j * phase))
    B = selfinv_to_trig(rotated)
    ratio = B.vector() / A.vector()
    assert np.allclose(ratio, ratio[0], rtol=1e-8)
    assert abs(abs(ratio[0]) - scale) < 1e-8 * scale


def test_top_frequency_required():
    with pytest.raises(ValueError):
        trig_to_selfinv(RakedTrigPoly(2, 1.0, [0.3, 0.0], [0.2, 0.0]))


def test_one_minus_cos_image():
    D = trig_to_selfinv(RakedTrigPoly.one_minus_cos(2))
    # 1 - cos 3t  <->  -(z^6 - 2 z^3 + 1) / 2 = -(z^3 - 1)^2 / 2
    assert np.allclose(D.coeffs, [-0.5, 0, 0, 1, 0, 0, -0.5])


def test_rotation_shifts_the_argument():
    A = _poly(3, 7)
    B = A.rotated(0.8)
    t = np.linspace(0, 6, 13)
    assert np.allclose(B(t), A(t - 0.8))


@given(ks, seeds)
def test_raked_roots_have_vanishing_odd_power_sums(k, seed):
    M = selfinv_roots(trig_to_selfinv(_poly(k, seed)))
    assert M.size == 4 * k - 2
    assert M.inversion_symmetric(1e-6)
    assert np.abs(power_sum_check(M, k)).max(initial=0) < 1e-8


def test_non_raked_polynomial_fails_power_sum_check():
    # z^4 - 3 z^2 + 1 style perturbation: even frequencies survive in s_1
    roots = [2.0, 0.5, np.exp(0.4j), np.exp(-0.4j), np.exp(2.0j), np.exp(-2.0j)]
    M = RootMultiset.from_list(roots)
    assert abs(power_sum_check(M, 2)[0]) > 0.1


@given(ks, seeds)
def test_newton_identities_match_root_power_sums(k, seed):
    D = trig_to_selfinv(_poly(k, seed))
    M = selfinv_roots(D)
    m = D.degree
    from_roots = power_sums(M, range(1, m + 1))
    from_coeffs = newton_power_sums(D.coeffs, m)
    assert np.allclose(from_roots, from_coeffs, rtol=1e-7, atol=1e-7)


def test_newton_power_sums_simple_case():
    # (z - 1)(z - 2): p1 = 3, p2 = 5, p3 = 9
    assert np.allclose(newton_power_sums([2, -3, 1], 3), [3, 5, 9])


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_odd_power_expansion_by_numeric_evaluation(n):
    x = 1.37
    lhs = (x + 1 / x) ** (2 * n - 1)
    coeffs = odd_power_expansion(n)
    rhs = sum(c * (x ** (2 * m - 1) + x ** (1 - 2 * m)) for m, c in coeffs.items())
    assert math.isclose(lhs, rhs, rel_tol=1e-12)


@given(st.integers(2, 4), seeds, st.sampled_from(["none", "one", "min"]), st.sampled_from([0.5, 1.01, 2.0, 3.7]))
def test_deformation_preserves_rakedness_and_reality(k, seed, touch, lam):
    A = random_real_raked(k, np.random.default_rng(seed), touch)
    M = selfinv_roots(trig_to_selfinv(A))
    Ml = deform(M, lam)
    assert Ml.size == M.size
    raw = np.poly(Ml.expanded())
    assert np.abs(raw.imag).max() < 1e-8 * np.abs(raw).max()
    assert poly_from_multiset(Ml).raked_residual() < 1e-8


@given(st.integers(2, 4), seeds, st.floats(0.3, 3))
def test_deformation_inverse(k, seed, lam):
    M = selfinv_roots(trig_to_selfinv(random_real_raked(k, np.random.default_rng(seed))))
    back = deform(deform(M, lam), 1 / lam)
    assert back.matches(M, 1e-5)


def test_deformation_of_double_root_at_one():
    M = RootMultiset.from_list([1.0, 1.0])
    Ml = deform(M, 1.5)
    # z + 1/z = 3
    expected = sorted([(3 - math.sqrt(5)) / 2, (3 + math.sqrt(5)) / 2])
    assert np.allclose(sorted(Ml.expanded().real), expected)


def test_deformation_needs_even_multiplicity_at_one():
    with pytest.raises(ValueError):
        deform(RootMultiset.from_list([1.0, 2.0, 0.5]), 2.0)


@given(ks, seeds)
def test_reconstruction_from_roots(k, seed):
    D = trig_to_selfinv(_poly(k, seed))
    P = poly_from_multiset(selfinv_roots(D))
    ratio = D.coeffs[-1]
    assert np.allclose(P.coeffs * ratio, D.coeffs, atol=1e-7 * np.abs(D.coeffs).max())


def test_localization_on_a_short_arc():
    from scipy.linalg import null_space

    from bicyclic.raked import design_rows

    T = np.array([0.1, 0.2, 0.35, 0.4])
    A = RakedTrigPoly.from_vector(2, null_space(design_rows(2, T))[:, 0])
    assert root_localization_check(A, 0.1, 0.3) is True
    assert root_localization_check(A, 0.1, 4.0) is None
    # the arc [0.2, 0.4] misses a root, so the check does not apply
    assert root_localization_check(A, 0.2, 0.2) is None
