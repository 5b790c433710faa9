"""One-loop self-energy of a free electron in the noncovariant scheme.

The divergent photon-momentum integrals are regularized by differentiating in
the denominator parameter and reintegrating; the integration constants are
then fixed by physical conditions, first for the ``A.p`` vertex (this fixes
the reduced mass ``mu``) and only afterwards for the spin-flip vertex (which
shifts ``mu`` to the observed ``mu_obs = mu / (1 + beta)``).

Momenta and energies are plain floats or numpy arrays in any consistent unit;
the pipeline uses units of ``mu_obs``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

LN2 = math.log(2.0)

# below this x = p/m the closed forms lose digits to cancellation
SERIES_SWITCH = 0.05
_SERIES_ORDERS = np.arange(4, 18, 2)
# Taylor coefficients of the H1 bracket: -4/((n-2)(n-1)(n+1)); H2: 2/n times that
_C1 = np.array([-4.0 / ((n - 2) * (n - 1) * (n + 1)) for n in _SERIES_ORDERS])
_C2 = _C1 * 2.0 / _SERIES_ORDERS
_SPIN_FLIP_P2 = 4.0 / 3.0 * LN2 + 2.0


def reg_integral_I(xi, c1: float):
    """Regularized ``int_0^inf dk/(k + xi)`` = -ln(xi) + C1."""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi <= 0):
        raise ValueError("xi must be positive")
    return -np.log(xi) + c1


def reg_integral_J(xi, c2: float, c3: float, c4: float):
    """Regularized ``int_0^inf k^2 dk/(k + xi)`` = -xi^2 ln(xi) + C2 xi^2 + C3 xi + C4."""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi <= 0):
        raise ValueError("xi must be positive")
    return -xi**2 * np.log(xi) + c2 * xi**2 + c3 * xi + c4


def beta(alpha: float) -> float:
    """Finite mass shift from the spin-flip vertex, mu = mu_obs (1 + beta)."""
    return 2.0 * alpha / math.pi * (2.0 + 4.0 / 3.0 * LN2)


class Renormalized(NamedTuple):
    b2: float
    kappa: float


def b2_renormalized(alpha: float, mu_obs: float = 1.0, mass_shift: float | None = None) -> Renormalized:
    """Renormalized p^4 coefficient and its dimensionless form kappa = b2R pi mu_obs^3 / alpha.

    ``mass_shift`` overrides beta(alpha); 0 switches the renormalization off.
    """
    if not (alpha > 0 and mu_obs > 0):
        raise ValueError("alpha and mu_obs must be positive")
    b = beta(alpha) if mass_shift is None else mass_shift
    mu = mu_obs * (1.0 + b)
    b2 = -alpha / (5.0 * math.pi * mu**3)
    b2r = b2 + (3.0 * b + 3.0 * b**2 + b**3) / (8.0 * mu**3)
    return Renormalized(b2r, b2r * math.pi * mu_obs**3 / alpha)


@dataclass(frozen=True)
class _VertexFixing:
    """Constants fixed by the A.p vertex: C1 makes b1 vanish, confirming ``mu``."""

    mu: float
    c1: float
    b1_1: float
    b2_1: float


def _fix_vertex(alpha: float, mu: float) -> _VertexFixing:
    c1 = LN2 + math.log(mu)
    b1_1 = alpha / (math.pi * mu) * 4.0 / 3.0 * (LN2 + math.log(mu) - c1)
    return _VertexFixing(mu, c1, b1_1, -2.0 * alpha / (15.0 * math.pi * mu**3))


@dataclass(frozen=True)
class _SpinFlipFixing:
    c2: float
    c3: float
    c4: float
    b0_2: float
    b1_2: float
    b2_2: float


def _fix_spin_flip(alpha: float, vertex: _VertexFixing) -> _SpinFlipFixing:
    # needs mu as already confirmed by the vertex fixing
    mu = vertex.mu
    c2 = math.log(mu)
    # b0 = 0 fixes only 2 C3/mu + C4/mu^2 = 4 ln 2; C4 = 0 is a free choice
    c4 = 0.0
    c3 = 2.0 * mu * LN2
    b0 = alpha * mu / math.pi * (4.0 * (LN2 + math.log(mu)) - 4.0 * c2 - 2.0 * c3 / mu - c4 / mu**2)
    b1 = alpha / (math.pi * mu) * (4.0 / 3.0 * LN2 + 2.0 + 4.0 / 3.0 * math.log(mu) - 4.0 / 3.0 * c2)
    return _SpinFlipFixing(c2, c3, c4, b0, b1, -alpha / (15.0 * math.pi * mu**3))


@dataclass(frozen=True)
class RadiativeModel:
    alpha: float
    mu_obs: float
    mu_bare: float
    beta: float
    c1: float
    c2: float
    c3: float
    c4: float
    c3_c4_constraint: float
    b1_1: float
    b2_1: float
    b0_2: float
    b1_2: float
    b2_2: float
    b2_sum: float
    b2_renormalized: float
    kappa: float
    fixing_order: tuple[str, ...]

    @classmethod
    def build(cls, alpha: float, mu_obs: float = 1.0) -> RadiativeModel:
        if not (alpha > 0 and mu_obs > 0):
            raise ValueError("alpha and mu_obs must be positive")
        b = beta(alpha)
        mu = mu_obs * (1.0 + b)
        vertex = _fix_vertex(alpha, mu)
        flip = _fix_spin_flip(alpha, vertex)
        b2r, kappa = b2_renormalized(alpha, mu_obs)
        return cls(
            alpha=alpha, mu_obs=mu_obs, mu_bare=mu, beta=b,
            c1=vertex.c1, c2=flip.c2, c3=flip.c3, c4=flip.c4,
            c3_c4_constraint=2.0 * flip.c3 / mu + flip.c4 / mu**2,
            b1_1=vertex.b1_1, b2_1=vertex.b2_1,
            b0_2=flip.b0_2, b1_2=flip.b1_2, b2_2=flip.b2_2,
            b2_sum=vertex.b2_1 + flip.b2_2,
            b2_renormalized=b2r, kappa=kappa,
            fixing_order=("C1", "C2", "C3/C4"),
        )

    def as_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


def _brackets(x):
    """Dimensionless H1 and H2 brackets (H2 without its p^2 term) for x = p/m."""
    x = np.asarray(x, dtype=float)
    small = x < SERIES_SWITCH
    xs = np.where(small, x, 1.0)
    xl = np.where(small, 0.5, x)  # placeholder keeps closed forms finite on the series branch

    powers = xs[..., None] ** _SERIES_ORDERS
    s1 = powers @ _C1
    s2 = powers @ _C2

    lp = np.log1p(xl)
    with np.errstate(divide="ignore", invalid="ignore"):
        lm = np.where(xl < 1.0, np.log1p(-np.minimum(xl, 1.0)), np.log(np.abs(xl - 1.0)))
        at_one = xl == 1.0
        k1 = 2.0 / 3.0 * xl**2 - xl + 1.0 / (3.0 * xl)
        t1 = ((2.0 / 3.0 * xl**2 + xl - 1.0 / (3.0 * xl)) * lp
              + np.where(at_one, 0.0, k1 * lm)
              - 16.0 / 9.0 * xl**2 + 2.0 / 3.0)
        k2 = (1.0 - xl) ** 3
        t2 = (2.0 / (3.0 * xl) * ((1.0 + xl) ** 3 * lp - np.where(at_one, 0.0, k2 * lm))
              - 22.0 / 9.0 * xl**2 - 4.0 / 3.0)
    return np.where(small, s1, t1), np.where(small, s2, t2)


def self_energy_vertex(p, alpha: float, mass: float):
    """A.p-vertex shift at momentum p, with C1 fixed so the p^2 term vanishes."""
    t1, _ = _brackets(np.asarray(p, dtype=float) / mass)
    return alpha * mass / math.pi * t1


def self_energy_spin_flip(p, alpha: float, mass: float):
    """Spin-flip shift at momentum p, with C2 cancelling ln(mass) and b0 = 0."""
    x = np.asarray(p, dtype=float) / mass
    _, t2 = _brackets(x)
    return alpha * mass / math.pi * (t2 + _SPIN_FLIP_P2 * x**2)


def delta_e1(p, model: RadiativeModel):
    return self_energy_vertex(p, model.alpha, model.mu_bare)


def delta_e2(p, model: RadiativeModel):
    return self_energy_spin_flip(p, model.alpha, model.mu_bare)


class Prescription(str, Enum):
    """How the renormalized radiative energy is assembled.

    PAPER: loops expanded around mu_obs and the mass-counterterm brackets
    linearized in d mu = -beta mu_obs. Default; gives the reference
    full-quadrature shifts (H 1S radiative 7920.53 MHz).
    EXACT: loops around the bare mu and exact square roots. Its p^4 Taylor
    coefficient is exactly b2R.
    """

    PAPER = "paper"
    EXACT = "exact"


def _binomial_series(nu: float, terms: int) -> np.ndarray:
    # coefficients of (1+y)^nu for k = 2 .. terms+1
    out = []
    c = 1.0
    for k in range(1, terms + 2):
        c *= (nu - k + 1) / k
        if k >= 2:
            out.append(c)
    return np.array(out)


_Y_SWITCH = 0.05
_K = np.arange(2, 14)
_INV_SQRT = _binomial_series(-0.5, 12)
_SQRT = _binomial_series(0.5, 12)


def _root_remainder(y, nu: float):
    """(1+y)^nu - 1 - nu*y for nu = +-1/2, accurate for small y."""
    y = np.asarray(y, dtype=float)
    small = y < _Y_SWITCH
    ys = np.where(small, y, 0.0)
    series = (ys[..., None] ** _K) @ (_SQRT if nu > 0 else _INV_SQRT)
    yl = np.where(small, 1.0, y)
    direct = np.expm1(nu * np.log1p(yl)) - nu * yl
    return np.where(small, series, direct)


def mass_brackets(p, model: RadiativeModel, prescription: Prescription = Prescription.PAPER):
    """-(E(mu_obs) - mu_obs - p^2/2mu_obs) + (E(mu) - mu - p^2/2mu) with E(m) = sqrt(p^2 + m^2)."""
    p = np.asarray(p, dtype=float)
    mo, mu = model.mu_obs, model.mu_bare
    if Prescription(prescription) is Prescription.PAPER:
        # every mu_obs - mu difference taken to first order in d mu = -beta mu_obs
        return model.beta * mo * _root_remainder((p / mo) ** 2, -0.5)
    return -mo * _root_remainder((p / mo) ** 2, 0.5) + mu * _root_remainder((p / mu) ** 2, 0.5)


def loop_mass(model: RadiativeModel, prescription: Prescription = Prescription.PAPER) -> float:
    """Mass around which the self-energy closed forms are expanded; also the kink at x = 1."""
    return model.mu_obs if Prescription(prescription) is Prescription.PAPER else model.mu_bare


def delta_e_rad(p, model: RadiativeModel, prescription: Prescription = Prescription.PAPER):
    """Renormalized radiative energy at momentum p, keeping every power of p.

    The spin-flip p^2 term is removed (it is absorbed into mu_obs) and the
    mass-counterterm brackets are added.
    """
    p = np.asarray(p, dtype=float)
    m = loop_mass(model, prescription)
    t1, t2 = _brackets(p / m)
    return model.alpha * m / math.pi * (t1 + t2) + mass_brackets(p, model, prescription)


def p4_coefficient(model: RadiativeModel, prescription: Prescription = Prescription.PAPER) -> float:
    """Small-p limit of delta_e_rad / p^4."""
    m = loop_mass(model, prescription)
    loops = -model.alpha / (5.0 * math.pi * m**3)
    if Prescription(prescription) is Prescription.PAPER:
        return loops + 3.0 * model.beta / (8.0 * model.mu_obs**3)
    return loops + (1.0 / model.mu_obs**3 - 1.0 / model.mu_bare**3) / 8.0
