"""Noncovariant Lamb-shift calculation for hydrogen and deuterium."""

from .constants import AtomSpec, PhysicalConstants, atom_from_constants, mhz_to_natural, natural_to_mhz
from .corrections import binding_energy, nuclear_size, relativistic_recoil, vacuum_polarization
from .hydrogenic import P2, S1, S2, StateLabel, expectation, momentum_density, p2_expectation, p4_expectation
from .pipeline import ExperimentTable, ShiftReport, analytic_shift, full_report, quadrature_shift, semiempirical_b2
from .quadrature import ConvergenceError, QuadratureConfig, QuadratureResult, integrate_semi_infinite
from .radiative import Prescription, RadiativeModel, b2_renormalized, beta, delta_e1, delta_e2, delta_e_rad

__all__ = [
    "AtomSpec", "PhysicalConstants", "atom_from_constants", "mhz_to_natural", "natural_to_mhz",
    "binding_energy", "nuclear_size", "relativistic_recoil", "vacuum_polarization",
    "P2", "S1", "S2", "StateLabel", "expectation", "momentum_density", "p2_expectation", "p4_expectation",
    "ExperimentTable", "ShiftReport", "analytic_shift", "full_report", "quadrature_shift", "semiempirical_b2",
    "ConvergenceError", "QuadratureConfig", "QuadratureResult", "integrate_semi_infinite",
    "Prescription", "RadiativeModel", "b2_renormalized", "beta", "delta_e1", "delta_e2", "delta_e_rad",
]
