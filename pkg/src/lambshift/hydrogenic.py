"""Momentum-space densities of the 1S, 2S and 2P hydrogenic states.

``a`` is the Bohr radius with the nuclear charge absorbed (``a = 1/(Z alpha mu)``).
Each density is radial and normalized, ``int_0^inf w(p) dp = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

import numpy as np

from .quadrature import QuadratureConfig, QuadratureResult, integrate_semi_infinite


class UnsupportedStateError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class StateLabel:
    n: int
    l: int  # noqa: E741

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.l < self.n:
            raise ValueError(f"invalid quantum numbers n={self.n}, l={self.l}")

    def __str__(self) -> str:
        return f"{self.n}{'SPDFGH'[self.l]}"

    @classmethod
    def parse(cls, text: str) -> StateLabel:
        text = text.strip().upper()
        try:
            return cls(int(text[:-1]), "SPDFGH".index(text[-1]))
        except (ValueError, IndexError):
            raise ValueError(f"cannot parse state label {text!r}") from None


S1 = StateLabel(1, 0)
S2 = StateLabel(2, 0)
P2 = StateLabel(2, 1)
SUPPORTED = (S1, S2, P2)


def _check(state: StateLabel) -> None:
    if state not in SUPPORTED:
        raise UnsupportedStateError(f"state {state} not supported; use one of 1S, 2S, 2P")


def momentum_density(state: StateLabel, a: float, p):
    """Radial momentum probability density w(p) for ``state``."""
    _check(state)
    if not a > 0:
        raise ValueError("Bohr radius must be positive")
    p = np.asarray(p, dtype=float)
    t = (a * p) ** 2
    if state == S1:
        return 32.0 / np.pi * a**3 * p**2 / (1.0 + t) ** 4
    q = 4.0 * t + 1.0
    if state == S2:
        return 1024.0 / np.pi * a**3 * p**2 * (4.0 * t - 1.0) ** 2 / q**6
    return 16384.0 / (3.0 * np.pi) * a**5 * p**4 / q**6


def p2_expectation(state: StateLabel, a: float) -> float:
    _check(state)
    return 1.0 / (state.n**2 * a**2)


def p4_coefficient(state: StateLabel) -> Fraction:
    """Exact rational 8n/(2l+1) - 3 over n**4, so that <p^4> = coefficient / a**4."""
    _check(state)
    n, l = state.n, state.l
    return (Fraction(8 * n, 2 * l + 1) - 3) / n**4


def p4_expectation(state: StateLabel, a: float) -> float:
    return float(p4_coefficient(state)) / a**4


def expectation(state: StateLabel, a: float, f: Callable[[np.ndarray], np.ndarray],
                quad: QuadratureConfig | None = None,
                special_point: float | None = None) -> QuadratureResult:
    """Expectation value of a radial function of |p| over ``state``.

    ``special_point`` marks a momentum where ``f`` is only continuous; it is
    added to the quadrature split points.
    """
    _check(state)
    quad = quad or QuadratureConfig()
    quad = replace(quad, scale=1.0 / a)
    if special_point is not None:
        quad = quad.with_splits(special_point)
    return integrate_semi_infinite(lambda p: momentum_density(state, a, p) * f(p), quad)
