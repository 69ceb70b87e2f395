import math

import pytest

from bmw6 import cdf, quantile
from conftest import random_params
from errors import ConvergenceError, DomainError
from numerics import QuadResult, adaptive_quad, brent_root, central_diff
from specialfn import BetaShape, log_beta


def test_quad_polynomial_is_exact():
    res = adaptive_quad(lambda x: x ** 5, 0.0, 1.0)
    assert res.value == pytest.approx(1.0 / 6.0, abs=1e-15)
    assert res.evaluations >= 15


def test_quad_oscillatory():
    res = adaptive_quad(math.sin, 0.0, math.pi, tol=1e-13)
    assert res.value == pytest.approx(2.0, abs=1e-13)
    assert res.abs_error_estimate <= 1e-12


def test_quad_infinite_upper_limit():
    res = adaptive_quad(lambda x: math.exp(-x), 0.0, math.inf, tol=1e-12)
    assert res.value == pytest.approx(1.0, abs=1e-11)


@pytest.mark.parametrize("alpha, expected", [(-0.5, 2.0), (-0.9, 10.0), (-0.99, 100.0)])
def test_quad_endpoint_singularity(alpha, expected):
    res = adaptive_quad(lambda x: x ** alpha, 0.0, 1.0, tol=1e-12, endpoint_exponent=alpha)
    assert res.value == pytest.approx(expected, rel=1e-11)


def test_quad_singularity_with_infinite_range():
    res = adaptive_quad(lambda x: math.exp(-x) / math.sqrt(x), 0.0, math.inf,
                        tol=1e-12, endpoint_exponent=-0.5)
    assert res.value == pytest.approx(math.sqrt(math.pi), rel=1e-10)


def test_quad_unannounced_singularity_hits_depth_cap():
    with pytest.raises(ConvergenceError):
        adaptive_quad(lambda x: x ** -0.9, 0.0, 1.0, tol=1e-14)


def test_quad_nonnegative_exponent_is_ignored():
    res = adaptive_quad(lambda x: x * x, 0.0, 3.0, endpoint_exponent=2.0)
    assert res.value == pytest.approx(9.0, rel=1e-14)


def test_quad_beta_integrand(rng):
    for _ in range(50):
        a, b = rng.uniform(0.3, 10.0, size=2)

        def integrand(t, a=a, b=b):
            return t ** (a - 1.0) * (1.0 - t) ** (b - 1.0)

        expected = math.exp(log_beta(BetaShape(a, b)))
        tol = 1e-12 * expected
        head = adaptive_quad(integrand, 0.0, 0.5, tol=tol, endpoint_exponent=a - 1.0).value
        # reflected so the (1 - t)^(b-1) end is the graded endpoint
        tail = adaptive_quad(lambda s: integrand(1.0 - s), 0.0, 0.5, tol=tol, endpoint_exponent=b - 1.0).value
        assert head + tail == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("lo, hi, tol", [
    (1.0, 1.0, 1e-10),
    (2.0, 1.0, 1e-10),
    (-math.inf, 0.0, 1e-10),
    (0.0, 1.0, 0.0),
])
def test_quad_rejects_bad_limits(lo, hi, tol):
    with pytest.raises(DomainError):
        adaptive_quad(lambda x: 1.0, lo, hi, tol=tol)


def test_quad_result_validation():
    with pytest.raises(DomainError):
        QuadResult(value=1.0, abs_error_estimate=-1e-3, evaluations=15)
    with pytest.raises(DomainError):
        QuadResult(value=1.0, abs_error_estimate=0.0, evaluations=0)


def test_central_diff_exact_for_quartic():
    assert central_diff(lambda x: x ** 4 - 3 * x ** 2, 1.5, 0.1) == pytest.approx(4 * 1.5 ** 3 - 6 * 1.5, rel=1e-12)


def test_central_diff_fourth_order():
    assert central_diff(math.sin, 1.0, 1e-3) == pytest.approx(math.cos(1.0), rel=1e-10)


def test_central_diff_rejects_bad_step():
    with pytest.raises(DomainError):
        central_diff(math.sin, 1.0, 0.0)


def test_brent_transcendental():
    root = brent_root(lambda x: math.cos(x) - x, 0.0, 1.0, tol=1e-14)
    assert root == pytest.approx(0.7390851332151607, abs=1e-13)


def test_brent_cube_root():
    root = brent_root(lambda x: x ** 3 - 2.0, 0.0, 2.0, tol=1e-15)
    assert root == pytest.approx(2.0 ** (1.0 / 3.0), abs=1e-14)


def test_brent_root_at_endpoint():
    assert brent_root(lambda x: x - 1.0, 1.0, 3.0) == 1.0


def test_brent_unbracketed():
    with pytest.raises(DomainError):
        brent_root(lambda x: x * x + 1.0, -1.0, 1.0)


def test_brent_iteration_cap():
    with pytest.raises(ConvergenceError):
        brent_root(lambda x: x ** 3 - 2.0, 0.0, 2.0, tol=1e-15, max_iter=2)


def test_brent_agrees_with_quantile_chain(rng):
    for _ in range(50):
        p = random_params(rng)
        q = float(rng.uniform(0.02, 0.98))
        hi = p.inner.beta
        while cdf(hi, p) < q:
            hi *= 2.0
        root = brent_root(lambda x: cdf(x, p) - q, 0.0, hi, tol=1e-14)
        assert root == pytest.approx(quantile(q, p), rel=1e-9, abs=1e-9)
