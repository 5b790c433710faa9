"""Non-radiative corrections: vacuum polarization, relativistic recoil, nuclear size."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import AtomSpec
from .hydrogenic import StateLabel


@dataclass(frozen=True)
class CorrectionBreakdown:
    atom: str
    state: StateLabel
    vacuum_polarization_mhz: float
    relativistic_mhz: float
    nuclear_mhz: float

    @property
    def total_mhz(self) -> float:
        return self.vacuum_polarization_mhz + self.relativistic_mhz + self.nuclear_mhz


def vacuum_polarization(atom: AtomSpec, state: StateLabel) -> float:
    """Upward shift from the screened charge: 2 Z^4 alpha^3 R_y / (3 pi n^4)."""
    return 2.0 * atom.z**4 * atom.alpha**3 / (3.0 * math.pi * state.n**4) * atom.rydberg_mhz


def schroedinger_eigenvalue(atom: AtomSpec, state: StateLabel) -> float:
    """Coulomb eigenvalue -Z^2 alpha^2 mu / 2n^2, in MHz."""
    return -(atom.z**2) * atom.rydberg_mhz / state.n**2


def binding_energy(epsilon: float, total_mass: float) -> float:
    """B = M [1 - sqrt(1 + 2 eps/M)], in whatever unit eps and M share."""
    u = 2.0 * epsilon / total_mass
    if 1.0 + u < 0:
        raise ValueError("1 + 2*epsilon/M must be non-negative")
    # rationalized to avoid cancellation for |eps| << M
    return -total_mass * u / (1.0 + math.sqrt(1.0 + u))


def relativistic_recoil(atom: AtomSpec, state: StateLabel) -> float:
    """-eps^2 / 2M, the second-order term of the binding-energy relation."""
    eps = schroedinger_eigenvalue(atom, state)
    total_mass_mhz = atom.total_mass * atom.mu_obs_mhz
    return -eps**2 / (2.0 * total_mass_mhz)


def nuclear_size(atom: AtomSpec, state: StateLabel) -> float:
    """(4/5) n^-3 (r_N/a)^2 R_y, S states only."""
    if state.l != 0:
        return 0.0
    return 0.8 / state.n**3 * atom.nuclear_radius_over_bohr**2 * atom.rydberg_mhz


def corrections(atom: AtomSpec, state: StateLabel) -> CorrectionBreakdown:
    return CorrectionBreakdown(
        atom=atom.name,
        state=state,
        vacuum_polarization_mhz=vacuum_polarization(atom, state),
        relativistic_mhz=relativistic_recoil(atom, state),
        nuclear_mhz=nuclear_size(atom, state),
    )
