import math

import numpy as np
import pytest

from lambshift.quadrature import (
    ConvergenceError,
    QuadratureConfig,
    integrate_interval,
    integrate_legendre_segment,
    integrate_semi_infinite,
)

CASES = [
    (lambda p: np.exp(-p), 1.0, QuadratureConfig()),
    (lambda p: p**2 / (1 + p**2) ** 4, math.pi / 32, QuadratureConfig()),
]


@pytest.mark.parametrize("f, exact, cfg", CASES)
def test_known_integrals(f, exact, cfg):
    res = integrate_semi_infinite(f, cfg)
    assert abs(res.value - exact) < 1e-10
    assert res.error_estimate >= 0
    assert abs(res.value - exact) <= 10 * res.error_estimate + 1e-16


def test_log_kink_with_split():
    # antiderivative u ln u - u on each side of p = 1
    res = integrate_interval(lambda p: np.log(np.abs(1 - p)), 0.0, 2.0, splits=[1.0])
    assert abs(res.value + 2.0) < 1e-8
    assert abs(res.value + 2.0) <= 10 * res.error_estimate


def test_spurious_split_point_harmless():
    f = CASES[1][0]
    base = integrate_semi_infinite(f, QuadratureConfig(relative_tolerance=1e-13)).value
    split = integrate_semi_infinite(f, QuadratureConfig(relative_tolerance=1e-13,
                                                        split_points=(0.37,))).value
    assert abs(base - split) < 1e-12


def test_legendre_segment():
    assert integrate_legendre_segment(lambda x: np.full_like(x, 3.0), 1.0, 4.0, 2) == pytest.approx(9.0, rel=1e-15)
    assert integrate_legendre_segment(lambda x: 1 - x**2, -1.0, 1.0, 2) == pytest.approx(4 / 3, rel=1e-15)
    assert integrate_legendre_segment(lambda x: x**2, -1.0, 1.0, 5) == pytest.approx(2 / 3, rel=1e-15)
    with pytest.raises(ValueError):
        integrate_legendre_segment(np.sin, 1.0, 0.0)


def test_tail_bound_exceeds_remainder():
    # f = p^-4 ln p beyond p = 2, smoothly continued below
    def f(p):
        p = np.asarray(p, dtype=float)
        return np.log(p + 2.0) / (p + 2.0) ** 4

    cfg = QuadratureConfig(mapping="cutoff", scale=0.01, relative_tolerance=1e-12)
    res = integrate_semi_infinite(f, cfg)
    P = cfg.p_max + 2.0
    remainder = (math.log(P) / 3 + 1 / 9) / P**3
    assert res.tail_bound is not None and res.tail_bound > remainder
    exact = (math.log(2.0) / 3 + 1 / 9) / 8.0
    assert abs(res.value + remainder - exact) < 1e-12


def test_rational_mapping_reports_no_tail():
    assert integrate_semi_infinite(lambda p: np.exp(-p)).tail_bound is None


def test_convergence_failure_carries_estimate():
    with pytest.raises(ConvergenceError) as info:
        integrate_semi_infinite(lambda p: np.sin(50 * p) * np.exp(-p / 50),
                                QuadratureConfig(max_subdivisions=4))
    assert info.value.result.converged is False
    assert math.isfinite(info.value.result.value)


def test_deterministic():
    f = lambda p: np.abs(np.sin(p)) * np.exp(-p)  # noqa: E731
    cfg = QuadratureConfig(split_points=(math.pi, 2 * math.pi))
    assert integrate_semi_infinite(f, cfg) == integrate_semi_infinite(f, cfg)


@pytest.mark.parametrize("kwargs", [{"relative_tolerance": 0}, {"split_points": (2.0, 1.0)},
                                    {"split_points": (0.0,)}, {"mapping": "tanh"}])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        QuadratureConfig(**kwargs)
