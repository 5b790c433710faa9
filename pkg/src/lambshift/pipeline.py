"""Per-state Lamb-shift predictions in three modes, with experiment comparison."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .constants import AtomSpec, natural_to_mhz
from .corrections import corrections
from .hydrogenic import P2, S1, S2, StateLabel, expectation, p4_coefficient, p4_expectation
from .quadrature import ConvergenceError, QuadratureConfig
from .radiative import Prescription, RadiativeModel, delta_e_rad, loop_mass, p4_coefficient as rad_p4

SEMIEMPIRICAL = "semiempirical"
ANALYTIC = "analytic_b2r"
QUADRATURE = "full_quadrature"
MODES = (SEMIEMPIRICAL, ANALYTIC, QUADRATURE)

PAIR_2S_2P = (S2, P2)
Target = Union[StateLabel, tuple]
TARGETS = (S1, PAIR_2S_2P)

COLUMNS = ("atom", "state", "mode", "radiative_mhz", "vp_mhz", "rel_mhz", "nuc_mhz",
           "total_mhz", "experiment_mhz", "deviation_percent", "diagnostics")


@dataclass(frozen=True)
class ExperimentTable:
    h_2s_2p_mhz: float = 1057.845
    h_1s_mhz: float = 8172.86
    d_1s_mhz: float = 8184.00

    def lookup(self, atom: str, target: Target) -> float | None:
        key = (atom, target_name(target))
        return {
            ("H", "1S"): self.h_1s_mhz,
            ("H", "2S-2P"): self.h_2s_2p_mhz,
            ("D", "1S"): self.d_1s_mhz,
        }.get(key)


@dataclass
class ShiftReport:
    atom: str
    state: str
    mode: str
    radiative_mhz: float | None
    vp_mhz: float | None
    rel_mhz: float | None
    nuc_mhz: float | None
    total_mhz: float | None
    experiment_mhz: float | None
    deviation_percent: float | None
    diagnostics: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return "error" in self.diagnostics

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in COLUMNS}


def target_name(target: Target) -> str:
    if isinstance(target, StateLabel):
        return str(target)
    upper, lower = target
    return f"{upper}-{lower}"


def _states(target: Target) -> tuple[StateLabel, ...]:
    return (target,) if isinstance(target, StateLabel) else tuple(target)


def _difference(values: Sequence[float]) -> float:
    return values[0] if len(values) == 1 else values[0] - values[1]


def _assemble(atom: AtomSpec, target: Target, mode: str, radiative: float,
              experiment: ExperimentTable | None, diagnostics: dict) -> ShiftReport:
    parts = [corrections(atom, s) for s in _states(target)]
    vp = _difference([c.vacuum_polarization_mhz for c in parts])
    rel = _difference([c.relativistic_mhz for c in parts])
    nuc = _difference([c.nuclear_mhz for c in parts])
    total = radiative + vp + rel + nuc
    exp = experiment.lookup(atom.name, target) if experiment else None
    dev = None if exp is None else 100.0 * (total - exp) / exp
    if atom.name == "D":
        diagnostics["deuteron_corrections_inferred"] = True
    return ShiftReport(atom.name, target_name(target), mode, radiative, vp, rel, nuc, total,
                       exp, dev, diagnostics)


def semiempirical_b2(experiment: ExperimentTable, atom: AtomSpec) -> float:
    """b2/a^4 in MHz, fixed by the measured hydrogen 2S-2P splitting."""
    if atom.name != "H":
        raise ValueError("the semiempirical coefficient is fixed from hydrogen only")
    nuc_2s = corrections(atom, S2).nuclear_mhz
    coeff = float(p4_coefficient(S2) - p4_coefficient(P2))
    return (experiment.h_2s_2p_mhz - nuc_2s) / coeff


def semiempirical_shift(atom: AtomSpec, target: Target,
                        experiment: ExperimentTable | None = None) -> ShiftReport:
    experiment = experiment or ExperimentTable()
    b2 = semiempirical_b2(experiment, atom)
    coeff = float(_difference([p4_coefficient(s) for s in _states(target)]))
    return _assemble(atom, target, SEMIEMPIRICAL, coeff * b2, experiment,
                     {"b2_over_a4_mhz": b2, "p4_coefficient": coeff})


def analytic_shift(atom: AtomSpec, target: Target, model: RadiativeModel,
                   experiment: ExperimentTable | None = None) -> ShiftReport:
    """Radiative shift from the renormalized p^4 term alone: b2R <p^4>."""
    p4 = _difference([p4_expectation(s, atom.bohr_radius) for s in _states(target)])
    radiative = natural_to_mhz(model.b2_renormalized * p4, atom)
    diag = {"beta": model.beta, "kappa": model.kappa, "b2_renormalized": model.b2_renormalized,
            "p4_expectation": p4}
    return _assemble(atom, target, ANALYTIC, radiative, experiment or ExperimentTable(), diag)


def _radiative_expectation(atom, target, model, quad, prescription):
    m = loop_mass(model, prescription)
    results = [expectation(s, atom.bohr_radius, lambda p: delta_e_rad(p, model, prescription),
                           quad, special_point=m)
               for s in _states(target)]
    value = natural_to_mhz(_difference([r.value for r in results]), atom)
    err = natural_to_mhz(sum(r.error_estimate for r in results), atom)
    return value, err, sum(r.subdivisions_used for r in results)


def quadrature_shift(atom: AtomSpec, target: Target, model: RadiativeModel,
                     quad: QuadratureConfig | None = None,
                     experiment: ExperimentTable | None = None,
                     prescription: Prescription = Prescription.PAPER,
                     compare_prescriptions: bool = False) -> ShiftReport:
    """Radiative shift as the expectation value of the full delta_e_rad(p)."""
    quad = quad or QuadratureConfig()
    prescription = Prescription(prescription)
    value, err, nsub = _radiative_expectation(atom, target, model, quad, prescription)
    diag = {
        "beta": model.beta,
        "kappa": model.kappa,
        "prescription": prescription.value,
        "p4_coefficient": rad_p4(model, prescription),
        "quadrature_error_mhz": err,
        "subdivisions": nsub,
    }
    if compare_prescriptions:
        for other in Prescription:
            if other is not prescription:
                diag[f"radiative_mhz_{other.value}"] = _radiative_expectation(
                    atom, target, model, quad, other)[0]
    return _assemble(atom, target, QUADRATURE, value, experiment or ExperimentTable(), diag)


def _failed(atom: AtomSpec, target: Target, mode: str, exc: Exception) -> ShiftReport:
    return ShiftReport(atom.name, target_name(target), mode, None, None, None, None, None,
                       None, None, {"error": f"{type(exc).__name__}: {exc}"})


def full_report(atoms: Iterable[AtomSpec], modes: Iterable[str] = MODES,
                quad: QuadratureConfig | None = None,
                experiment: ExperimentTable | None = None,
                verbose: bool = False) -> list[ShiftReport]:
    """Reports for every atom x mode x (1S, 2S-2P), in that order.

    Semiempirical entries exist for hydrogen only. A failing entry is recorded
    with ``diagnostics['error']`` and the batch continues.
    """
    experiment = experiment or ExperimentTable()
    modes = [m for m in MODES if m in set(modes)]
    out = []
    for atom in atoms:
        model = RadiativeModel.build(atom.alpha, atom.mu_obs)
        for mode in modes:
            if mode == SEMIEMPIRICAL and atom.name != "H":
                continue
            for target in TARGETS:
                try:
                    if mode == SEMIEMPIRICAL:
                        rep = semiempirical_shift(atom, target, experiment)
                    elif mode == ANALYTIC:
                        rep = analytic_shift(atom, target, model, experiment)
                    else:
                        rep = quadrature_shift(atom, target, model, quad, experiment,
                                               compare_prescriptions=verbose)
                except (ConvergenceError, ArithmeticError, ValueError) as exc:
                    rep = _failed(atom, target, mode, exc)
                out.append(rep)
    return out


def to_json(reports: Sequence[ShiftReport]) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2) + "\n"


def to_csv(reports: Sequence[ShiftReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in reports:
        row = r.as_dict()
        row["diagnostics"] = json.dumps(row["diagnostics"], sort_keys=True, separators=(",", ":"))
        writer.writerow(["" if row[k] is None else (repr(row[k]) if isinstance(row[k], float) else row[k])
                         for k in COLUMNS])
    return buf.getvalue()


def _fmt(v, width=12, digits=3) -> str:
    return f"{'-':>{width}}" if v is None else f"{v:>{width}.{digits}f}"


def to_table(reports: Sequence[ShiftReport], verbose: bool = False) -> str:
    head = (f"{'atom':<4} {'state':<6} {'mode':<15} {'radiative':>12} {'vac.pol':>10} "
            f"{'relativ':>10} {'nuclear':>10} {'total':>12} {'experiment':>12} {'dev %':>8}")
    lines = [head, "-" * len(head)]
    for r in reports:
        lines.append(
            f"{r.atom:<4} {r.state:<6} {r.mode:<15} {_fmt(r.radiative_mhz)} {_fmt(r.vp_mhz, 10)} "
            f"{_fmt(r.rel_mhz, 10)} {_fmt(r.nuc_mhz, 10)} {_fmt(r.total_mhz)} "
            f"{_fmt(r.experiment_mhz)} {_fmt(r.deviation_percent, 8, 3)}"
        )
        if r.failed:
            lines.append(f"    error: {r.diagnostics['error']}")
        elif verbose:
            for k in sorted(r.diagnostics):
                lines.append(f"    {k} = {r.diagnostics[k]!r}")
    return "\n".join(lines) + "\n"
