"""Physical constants, per-atom derived scales and MHz conversion.

Energies inside the package are measured in units of the observed reduced
mass of the atom (``mu_obs = 1``), momenta likewise. The hydrogen Rydberg
energy ``R_H = alpha**2 * mu_obs(H) / 2`` is the single anchor to MHz.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields
from pathlib import Path


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class PhysicalConstants:
    alpha: float = 1 / 137.0359895
    rydberg_h_mhz: float = 3.28805128e9
    mass_ratio_proton_electron: float = 1836.152701
    mass_ratio_deuteron_electron: float = 3670.483014
    # radii inverted from the 1S nuclear terms (0.697 MHz for H, D totals)
    nuclear_radius_proton_fm: float = 0.862
    nuclear_radius_deuteron_fm: float = 2.115
    bohr_radius_infinite_mass_m: float = 0.529177249e-10

    def __post_init__(self):
        if not 0 < self.alpha < 0.01:
            raise ConfigError(f"alpha out of range: {self.alpha!r}")
        for f in fields(self):
            v = getattr(self, f.name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ConfigError(f"{f.name} must be a positive finite number, got {v!r}")

    @classmethod
    def from_mapping(cls, overrides: dict) -> PhysicalConstants:
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ConfigError(f"unknown constant(s): {', '.join(unknown)}")
        return cls(**{k: float(v) for k, v in overrides.items()})

    @classmethod
    def from_json(cls, path: str | Path) -> PhysicalConstants:
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        try:
            return cls.from_mapping(data)
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc


@dataclass(frozen=True)
class AtomSpec:
    """One hydrogenlike species with its reduced-mass scales.

    ``mu_obs`` is 1 by construction (natural units); ``mu_obs_mhz`` carries the
    dimensional value. ``bohr_radius`` and ``total_mass`` are in the same
    natural units, ``bohr_radius_m`` in meters.
    """

    name: str
    z: int
    mass_ratio_nucleus_electron: float
    nuclear_radius_fm: float
    alpha: float
    mu_obs_mhz: float
    bohr_radius_m: float

    @property
    def reduced_mass_ratio(self) -> float:
        return reduced_mass_ratio(self.mass_ratio_nucleus_electron)

    @property
    def mu_obs(self) -> float:
        return 1.0

    @property
    def bohr_radius(self) -> float:
        return 1.0 / (self.alpha * self.mu_obs)

    @property
    def rydberg_mhz(self) -> float:
        return 0.5 * self.alpha**2 * self.mu_obs_mhz

    @property
    def total_mass(self) -> float:
        # M/mu = (1 + r)**2 / r with r = m_N/m_e
        r = self.mass_ratio_nucleus_electron
        return (1.0 + r) ** 2 / r

    @property
    def nuclear_radius_over_bohr(self) -> float:
        return self.nuclear_radius_fm * 1e-15 / self.bohr_radius_m


def reduced_mass_ratio(mass_ratio_nucleus_electron: float) -> float:
    """mu/m_e for a nucleus of mass ``r * m_e``: r/(1 + r)."""
    r = mass_ratio_nucleus_electron
    if not r > 0:
        raise ValueError(f"mass ratio must be positive, got {r!r}")
    if math.isinf(r):
        return 1.0
    return r / (1.0 + r)


_ELEMENTS = {
    "H": ("mass_ratio_proton_electron", "nuclear_radius_proton_fm"),
    "D": ("mass_ratio_deuteron_electron", "nuclear_radius_deuteron_fm"),
}


def atom_from_constants(constants: PhysicalConstants, which: str) -> AtomSpec:
    try:
        mass_key, radius_key = _ELEMENTS[which]
    except KeyError:
        raise ValueError(f"unknown element {which!r}; expected one of {sorted(_ELEMENTS)}") from None
    alpha = constants.alpha
    mu_h_mhz = 2.0 * constants.rydberg_h_mhz / alpha**2
    ratio = getattr(constants, mass_key)
    mu_ratio = reduced_mass_ratio(ratio)
    scale = mu_ratio / reduced_mass_ratio(constants.mass_ratio_proton_electron)
    return AtomSpec(
        name=which,
        z=1,
        mass_ratio_nucleus_electron=ratio,
        nuclear_radius_fm=getattr(constants, radius_key),
        alpha=alpha,
        mu_obs_mhz=mu_h_mhz * scale,
        bohr_radius_m=constants.bohr_radius_infinite_mass_m / mu_ratio,
    )


def natural_to_mhz(value, atom: AtomSpec):
    return value * atom.mu_obs_mhz


def mhz_to_natural(value, atom: AtomSpec):
    return value / atom.mu_obs_mhz
