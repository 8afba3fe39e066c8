import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import PUBLISHED_NORM_MX, PUBLISHED_NORM_MY, PUBLISHED_RAW_MX
from weibull_edges.errors import DegenerateMaskError, InvalidGridError, KernelKindError, NonPositiveGridWarning
from weibull_edges.kernel import Kernel
from weibull_edges.masks import (
    DEFAULT_CENTER,
    build_grid,
    mode_center,
    normalize_gradient,
    normalize_smoothing,
    sample_mask,
    weibull_gradient_pair,
)
from weibull_edges.weibull import WeibullParams, pdf_1d

R = 2**-0.5


def default_grid(half_width=1):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonPositiveGridWarning)
        return build_grid(half_width, 0.5, DEFAULT_CENTER)


def test_grid_coords():
    g = build_grid(1, 0.5, (0.707107, 0.707107))
    np.testing.assert_allclose(g.x_coords, [0.207107, 0.707107, 1.207107], atol=1e-12)
    assert g.size == 3 and not g.has_nonpositive


def test_grid_warns_on_nonpositive():
    with pytest.warns(NonPositiveGridWarning):
        g = build_grid(2, 0.5, (0.707107, 0.707107))
    assert g.x_coords[0] == pytest.approx(-0.292893, abs=1e-12)
    assert g.has_nonpositive


@pytest.mark.parametrize("hw, spacing, center", [(1, -0.1, (1, 1)), (1, 0, (1, 1)), (0, 0.5, (1, 1)), (1, 0.5, (0, 1))])
def test_grid_rejected(hw, spacing, center):
    with pytest.raises(InvalidGridError):
        build_grid(hw, spacing, center)


def test_distinct_increments():
    g = build_grid(1, (0.5, 0.25), (1, 1))
    np.testing.assert_allclose(g.x_coords, [0.5, 1, 1.5])
    np.testing.assert_allclose(g.y_coords, [0.75, 1, 1.25])


@pytest.mark.parametrize("beta", [2.0, 3.0])
def test_raw_gradient_matches_published(beta):
    mx = sample_mask("gradient-x", WeibullParams(1, beta), default_grid())
    assert not mx.normalized and mx.kind == "gradient-x"
    np.testing.assert_allclose(mx.coefficients, PUBLISHED_RAW_MX[beta], atol=5e-4)


def test_raw_gradient_y_is_transpose():
    p, g = WeibullParams(1, 2), default_grid()
    mx = sample_mask("gradient-x", p, g)
    my = sample_mask("gradient-y", p, g)
    np.testing.assert_array_equal(my.coefficients, mx.coefficients.T)


@given(st.floats(0.3, 3), st.floats(1.2, 4), st.floats(0.2, 2), st.floats(0.05, 0.5), st.integers(1, 4))
def test_transpose_duality_any_symmetric_grid(alpha, beta, c, spacing, hw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonPositiveGridWarning)
        g = build_grid(hw, spacing, (c, c))
    p = WeibullParams(alpha, beta)
    np.testing.assert_array_equal(sample_mask("gradient-y", p, g).coefficients, sample_mask("gradient-x", p, g).coefficients.T)


@pytest.mark.parametrize("beta", [2.0, 3.0])
def test_normalized_pair_matches_published(beta):
    mx, my = weibull_gradient_pair(WeibullParams(1, beta))
    np.testing.assert_allclose(mx.coefficients, PUBLISHED_NORM_MX[beta], atol=5e-4)
    np.testing.assert_allclose(my.coefficients, PUBLISHED_NORM_MY[beta], atol=5e-4)
    np.testing.assert_allclose(my.coefficients, mx.coefficients.T, atol=1e-15)
    for k in (mx, my):
        assert k.normalized
        assert k.positive_sum == pytest.approx(1, abs=1e-12)
        assert k.negative_sum == pytest.approx(-1, abs=1e-12)
        assert abs(k.coefficients.sum()) < 1e-12


def test_smoothing_center_value():
    p = WeibullParams(1, 2)
    k = normalize_smoothing(sample_mask("smoothing", p, default_grid()))
    axis = pdf_1d(np.array([R - 0.5, R, R + 0.5]), p)
    assert k.coefficients[1, 1] == pytest.approx(axis[1] ** 2 / axis.sum() ** 2, rel=1e-12)
    assert k.coefficients[1, 1] == pytest.approx(0.222886, abs=1e-6)
    assert k.coefficients.sum() == pytest.approx(1, abs=1e-12)


def test_uniform_and_zero_smoothing():
    k = normalize_smoothing(Kernel(np.full((3, 3), 4.0), "smoothing"))
    np.testing.assert_allclose(k.coefficients, 1 / 9, atol=1e-15)
    with pytest.raises(DegenerateMaskError):
        normalize_smoothing(Kernel(np.zeros((3, 3)), "smoothing"))


def test_smoothing_all_outside_support_is_degenerate():
    g = build_grid(1, 0.5, (5.0, 5.0))
    # exp(-alpha x^beta) underflows to exactly 0 this deep in the tail
    raw = sample_mask("smoothing", WeibullParams(50, 4), g)
    assert np.all(raw.coefficients == 0)
    with pytest.raises(DegenerateMaskError):
        normalize_smoothing(raw)


def test_kind_checks():
    k = Kernel(np.eye(3), "smoothing")
    with pytest.raises(KernelKindError):
        normalize_gradient(k)
    with pytest.raises(KernelKindError):
        normalize_smoothing(Kernel(np.eye(3), "gradient-x"))
    with pytest.raises(KernelKindError):
        sample_mask("laplacian", WeibullParams(), default_grid())


def test_gradient_missing_sign_is_degenerate():
    with pytest.raises(DegenerateMaskError):
        normalize_gradient(Kernel(np.ones((3, 3)), "gradient-x"))
    with pytest.raises(DegenerateMaskError):
        normalize_gradient(Kernel(-np.ones((3, 3)), "gradient-y"))


def test_normalize_gradient_scale_invariant_example():
    raw = Kernel([[1, -1], [0, 0]], "gradient-x")
    for c in (0.01, 1, 7.5, 1e6):
        np.testing.assert_allclose(normalize_gradient(raw.scaled(c)).coefficients, [[1, -1], [0, 0]], atol=1e-12)


@given(st.floats(0.3, 3), st.floats(1.2, 4), st.floats(1e-3, 1e3))
def test_scale_invariance_and_idempotence(alpha, beta, c):
    raw = sample_mask("gradient-x", WeibullParams(alpha, beta), default_grid())
    try:
        once = normalize_gradient(raw)
    except DegenerateMaskError:
        return
    np.testing.assert_allclose(normalize_gradient(raw.scaled(c)).coefficients, once.coefficients, atol=1e-12, rtol=0)
    np.testing.assert_allclose(normalize_gradient(once).coefficients, once.coefficients, atol=1e-12, rtol=0)


def test_smoothing_idempotent():
    once = normalize_smoothing(sample_mask("smoothing", WeibullParams(1, 3), default_grid()))
    np.testing.assert_allclose(normalize_smoothing(once).coefficients, once.coefficients, atol=1e-12, rtol=0)


def test_domain_clipping_5x5():
    g = default_grid(2)
    for kind in ("smoothing", "gradient-x", "gradient-y"):
        c = sample_mask(kind, WeibullParams(1, 2), g).coefficients
        assert np.all(c[0, :] == 0) and np.all(c[:, 0] == 0)
        assert np.any(c[1:, 1:] != 0)


def test_mode_center():
    assert mode_center(WeibullParams(1, 2)) == pytest.approx((R, R))


def test_kernel_immutable():
    mx, _ = weibull_gradient_pair(WeibullParams())
    with pytest.raises(ValueError):
        mx.coefficients[0, 0] = 1.0
