"""Sweep specifications, figure presets and CSV/JSON emission."""
from dataclasses import asdict, dataclass, field
import csv
import json
import math
from pathlib import Path

import numpy as np

from . import units
from .model import ProbePoint, coupling_constants
from .polariton import Branch, CONVENTIONS, ORTHONORMAL, LITERAL, eigenfrequencies, polariton_modes
from .spectra import default_omega_grid, evaluate_spectra

KINDS = ("dispersion", "weights-vs-k", "weights-vs-theta", "spectra", "phases")
SWEEP_QUANTITY = {
    "dispersion": "wavenumber",
    "weights-vs-k": "wavenumber",
    "weights-vs-theta": "angle",
    "spectra": "frequency",
    "phases": "frequency",
}
BRANCHES = tuple(b.label for b in Branch)

REFERENCE_K = units.per_angstrom_to_per_m(5e-7)
ANGLE_SET = (0.0, math.pi / 8, math.pi / 4, 3 * math.pi / 8, math.pi / 2)
PHASE_NAMES = ("phase_t_s", "phase_t_p", "phase_r_s", "phase_r_p")


@dataclass(frozen=True)
class Grid:
    """Evenly spaced sweep grid, endpoints inclusive, in a named unit."""

    start: float
    stop: float
    count: int
    unit: str

    def __post_init__(self):
        if self.unit not in units.UNITS:
            raise ValueError(f"unit must be one of {units.UNITS}, got {self.unit!r}")
        if not isinstance(self.count, int) or self.count < 2:
            raise ValueError(f"grid needs count >= 2, got {self.count!r}")
        if not self.start < self.stop:
            raise ValueError(f"grid needs start < stop, got {self.start!r}..{self.stop!r}")

    def values(self):
        """Grid points in the internal unit (rad/s, 1/m or rad)."""
        return np.linspace(
            units.to_internal(self.start, self.unit), units.to_internal(self.stop, self.unit), self.count
        )


@dataclass(frozen=True)
class SweepSpec:
    kind: str
    grid: Grid | None = None
    k: float = REFERENCE_K
    thetas: tuple = (math.pi / 4,)
    drive: object = "s"
    conventions: tuple = (ORTHONORMAL,)
    branches: tuple = BRANCHES

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.grid is None and SWEEP_QUANTITY[self.kind] != "frequency":
            raise ValueError(f"{self.kind} sweep needs an explicit grid")
        if self.grid is not None and units.QUANTITY[self.grid.unit] != SWEEP_QUANTITY[self.kind]:
            raise ValueError(
                f"{self.kind} sweeps a {SWEEP_QUANTITY[self.kind]}; unit {self.grid.unit!r} does not fit"
            )
        if not self.k >= 0:
            raise ValueError("k must be >= 0")
        if not self.thetas:
            raise ValueError("at least one angle is required")
        if self.kind in ("dispersion", "weights-vs-k") and len(self.thetas) != 1:
            raise ValueError(f"{self.kind} takes a single fixed angle")
        for conv in self.conventions:
            if conv not in CONVENTIONS:
                raise ValueError(f"unknown convention {conv!r}")
        for b in self.branches:
            if b not in BRANCHES:
                raise ValueError(f"unknown branch {b!r}")

    def to_dict(self):
        d = asdict(self)
        d["thetas"] = list(self.thetas)
        d["conventions"] = list(self.conventions)
        d["branches"] = list(self.branches)
        if not isinstance(self.drive, str):
            d["drive"] = [[complex(z).real, complex(z).imag] for z in self.drive]
        return d


@dataclass(frozen=True)
class FigurePreset:
    id: str
    description: str
    spec: SweepSpec
    dual_convention: bool = False


def _k_grid(stop_per_angstrom):
    return Grid(0.0, stop_per_angstrom, 501, "1/A")


_THETA_GRID = Grid(0.0, 180.0, 181, "deg")


def _presets():
    p = []
    p.append(FigurePreset("fig4", "branch frequencies vs k at theta=pi/4",
                          SweepSpec("dispersion", _k_grid(1e-4))))
    for fid, branch, stop, what in (
        ("fig5", "upper", 1e-4, "upper-branch weights vs k"),
        ("fig6", "upper", 1e-5, "upper-branch weights vs k, small k"),
        ("fig7", "upper", 1e-3, "upper-branch weights vs k, larger k"),
        ("fig8", "lower", 1e-4, "lower-branch weights vs k"),
        ("fig9", "middle", 1e-4, "middle-branch weights vs k"),
    ):
        p.append(FigurePreset(fid, what + " at theta=pi/4",
                              SweepSpec("weights-vs-k", _k_grid(stop), branches=(branch,))))
    for fid, branch in (("fig10", "upper"), ("fig11", "lower"), ("fig12", "middle")):
        p.append(FigurePreset(fid, f"{branch}-branch weights vs theta at k=5e-7 1/A",
                              SweepSpec("weights-vs-theta", _THETA_GRID, branches=(branch,))))
    for fid, what in (("fig13", "T_s"), ("fig14", "R_s"), ("fig15", "T_p = R_p"), ("fig16", "A")):
        p.append(FigurePreset(fid, f"{what} spectra of s-polarized drive for five angles, k=5e-7 1/A",
                              SweepSpec("spectra", thetas=ANGLE_SET, conventions=(ORTHONORMAL, LITERAL)),
                              dual_convention=True))
    for fid, what in (("fig17", "transmitted s"), ("fig18", "reflected s"), ("fig19", "p-polarized")):
        p.append(FigurePreset(fid, f"{what} phase shifts at theta=pi/4, k=5e-7 1/A",
                              SweepSpec("phases")))
    return {x.id: x for x in p}


PRESETS = _presets()


@dataclass
class Table:
    header: list
    rows: list = field(default_factory=list)

    def column(self, name):
        i = self.header.index(name)
        return [row[i] for row in self.rows]


def format_value(v):
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    return f"{float(v):.16e}"


def _probe_modes(settings, k, theta, convention):
    cs = coupling_constants(settings.model, ProbePoint(float(k), float(theta)))
    return cs, polariton_modes(cs, settings.model.omega_A, convention)


def _dispersion(settings, spec):
    table = Table(["k_per_m", "k_per_angstrom", "omega_k_over_2pi_Hz"]
                  + [f"Omega_{b}_over_2pi_Hz" for b in BRANCHES])
    theta = spec.thetas[0]
    for k in spec.grid.values():
        cs = coupling_constants(settings.model, ProbePoint(float(k), theta))
        omegas = eigenfrequencies(cs, settings.model.omega_A)
        table.rows.append([k, units.per_m_to_per_angstrom(k), units.angular_to_hz(cs.omega_k)]
                          + [units.angular_to_hz(w) for w in omegas])
    return table


def _weights(settings, spec):
    header = ["convention", "k_per_m", "k_per_angstrom", "theta_rad"]
    for b in spec.branches:
        header += [f"abs_X_sq_{b}", f"abs_Ys_sq_{b}", f"abs_Yp_sq_{b}"]
    table = Table(header)
    if spec.kind == "weights-vs-k":
        points = [(k, spec.thetas[0]) for k in spec.grid.values()]
    else:
        points = [(spec.k, theta) for theta in spec.grid.values()]
    for conv in spec.conventions:
        for k, theta in points:
            _, modes = _probe_modes(settings, k, theta, conv)
            w = modes.weights
            row = [conv, k, units.per_m_to_per_angstrom(k), theta]
            for b in spec.branches:
                row += list(w[Branch[b.upper()]])
            table.rows.append(row)
    return table


def _spectra(settings, spec, unwrap_phases):
    omega_grid = spec.grid.values() if spec.grid is not None else default_omega_grid(settings.model, spec.k)
    if spec.kind == "spectra":
        values = ["T_s", "T_p", "R_s", "R_p", "A", *PHASE_NAMES, "I_s", "I_p"]
    else:
        values = list(PHASE_NAMES)
    names = {n: n + "_rad" for n in PHASE_NAMES}
    names.update(I_s="I_s_s_per_rad", I_p="I_p_s_per_rad")
    header = ["convention", "theta_rad", "omega_over_2pi_Hz"] + [names.get(v, v) for v in values]
    header.append("pole_shifted")
    if unwrap_phases:
        header += [n + "_unwrapped_rad" for n in PHASE_NAMES]
    table = Table(header)
    for conv in spec.conventions:
        for theta in spec.thetas:
            _, modes = _probe_modes(settings, spec.k, theta, conv)
            res = evaluate_spectra(modes, settings.damping, spec.drive, omega_grid)
            cols = [getattr(res, v) for v in values]
            unwrapped = [np.unwrap(getattr(res, n)) for n in PHASE_NAMES] if unwrap_phases else []
            for i, omega in enumerate(res.omega):
                row = [conv, theta, units.angular_to_hz(omega)] + [c[i] for c in cols]
                row.append(bool(res.pole_shifted[i]))
                row += [u[i] for u in unwrapped]
                table.rows.append(row)
    return table


def run_sweep(settings, spec, unwrap_phases=False):
    """Evaluate a sweep and return its table (header plus rows of raw values)."""
    if spec.kind == "dispersion":
        return _dispersion(settings, spec)
    if spec.kind in ("weights-vs-k", "weights-vs-theta"):
        return _weights(settings, spec)
    return _spectra(settings, spec, unwrap_phases)


def write_csv(table, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(table.header)
        for row in table.rows:
            writer.writerow([format_value(v) for v in row])


def write_outputs(settings, spec, outdir, name, run_info=None, unwrap_phases=False):
    """Run ``spec`` and write ``<name>.csv`` plus the ``<name>.json`` sidecar."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    table = run_sweep(settings, spec, unwrap_phases=unwrap_phases)
    csv_path = outdir / f"{name}.csv"
    write_csv(table, csv_path)
    sidecar = settings.resolved_document()
    sidecar["_run"] = {
        "target": name,
        "sweep": spec.to_dict(),
        "unwrap_phases": unwrap_phases,
        **(run_info or {}),
        **settings.report()["resolved"],
    }
    if spec.grid is None:
        grid = default_omega_grid(settings.model, spec.k)
        sidecar["_run"]["omega_grid_over_2pi_Hz"] = {
            "start": units.angular_to_hz(grid[0]), "stop": units.angular_to_hz(grid[-1]), "count": len(grid)
        }
    json_path = outdir / f"{name}.json"
    with open(json_path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(sidecar, fh, indent=2)
        fh.write("\n")
    return csv_path, json_path, table
