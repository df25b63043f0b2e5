"""Linear transmission, reflection and absorption of the polariton cavity.

Markovian input-output theory with real mirror couplings.  For each probe
frequency the intracavity photon amplitudes a = (a_s, a_p) satisfy

    (1 + gamma Lambda) a = Lambda (sqrt(gamma_U) b_in + sqrt(gamma_L) c_in)
    Lambda_ab = i sum_r conj(Y_r^a) Y_r^b / (omega - Omega_r + i Gamma_r)

with gamma = (gamma_U + gamma_L) / 2 and Gamma_r = Gamma_ex |X_r|^2, and the
outputs follow from sqrt(gamma_U) a = b_in + b_out, sqrt(gamma_L) a = c_in + c_out.
"""
from dataclasses import dataclass
import math

import numpy as np

from .model import ProbePoint, coupling_constants
from .polariton import ORTHONORMAL, polariton_modes

S, P = 0, 1
POLARIZATIONS = ("s", "p")


class PoleError(ArithmeticError):
    """Probe frequency sits on an undamped resonance."""


class SingularSystemError(ArithmeticError):
    pass


@dataclass(frozen=True)
class DampingConfig:
    """Mirror and excitation damping rates in rad/s."""

    gamma_U: float
    gamma_L: float
    Gamma_ex: float = 0.0

    def __post_init__(self):
        for name in ("gamma_U", "gamma_L", "Gamma_ex"):
            value = getattr(self, name)
            if not (value >= 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")

    @classmethod
    def symmetric(cls, gamma, Gamma_ex=0.0):
        """Identical mirrors, each with damping rate ``gamma``."""
        return cls(gamma, gamma, Gamma_ex)

    @property
    def gamma(self):
        return (self.gamma_U + self.gamma_L) / 2.0

    @property
    def identical_mirrors(self):
        return self.gamma_U == self.gamma_L


@dataclass(frozen=True)
class ComplexBranches:
    """Complex branch frequencies Omega_r - i Gamma_ex |X_r|^2 (rad/s)."""

    values: np.ndarray

    @property
    def damping(self):
        return -self.values.imag


@dataclass(frozen=True)
class IncidentField:
    """Complex input amplitudes at the upper mirror; the lower input is dark."""

    b_s: complex = 1.0
    b_p: complex = 0.0

    def __post_init__(self):
        if self.b_s == 0 and self.b_p == 0:
            raise ValueError("incident field has zero amplitude")

    @property
    def vector(self):
        return np.array([self.b_s, self.b_p], dtype=complex)

    @property
    def power(self):
        return abs(self.b_s) ** 2 + abs(self.b_p) ** 2

    @property
    def reference(self):
        """Amplitude that output phases are measured against."""
        return self.b_s if abs(self.b_s) >= abs(self.b_p) else self.b_p


S_DRIVE = IncidentField(1.0, 0.0)
P_DRIVE = IncidentField(0.0, 1.0)


@dataclass(frozen=True)
class ScatteringAmplitudes:
    """Output and intracavity amplitudes; arrays end in a polarization axis (s, p)."""

    b_out: np.ndarray
    c_out: np.ndarray
    a: np.ndarray


@dataclass(frozen=True)
class SpectraPoint:
    omega: float
    T_s: float
    T_p: float
    R_s: float
    R_p: float
    A: float
    phase_t_s: float
    phase_t_p: float
    phase_r_s: float
    phase_r_p: float
    I_s: float
    I_p: float
    pole_shifted: bool = False


@dataclass(frozen=True)
class SpectraArrays:
    """Vectorized counterpart of a list of SpectraPoint."""

    omega: np.ndarray
    T_s: np.ndarray
    T_p: np.ndarray
    R_s: np.ndarray
    R_p: np.ndarray
    A: np.ndarray
    phase_t_s: np.ndarray
    phase_t_p: np.ndarray
    phase_r_s: np.ndarray
    phase_r_p: np.ndarray
    I_s: np.ndarray
    I_p: np.ndarray
    pole_shifted: np.ndarray

    FIELDS = (
        "omega", "T_s", "T_p", "R_s", "R_p", "A",
        "phase_t_s", "phase_t_p", "phase_r_s", "phase_r_p", "I_s", "I_p",
    )

    def points(self):
        out = []
        for i in range(len(self.omega)):
            values = {name: float(getattr(self, name)[i]) for name in self.FIELDS}
            out.append(SpectraPoint(**values, pole_shifted=bool(self.pole_shifted[i])))
        return out


def complex_branches(modes, d):
    gamma_r = d.Gamma_ex * np.abs(modes.X) ** 2
    return ComplexBranches(modes.omegas - 1j * gamma_r)


def lambda_matrix(cb, modes, omega, pole_tol=0.0):
    """Polarization response kernel Lambda(omega), shape (..., 2, 2).

    ``omega`` may be a scalar or an array.  A :class:`PoleError` is raised
    if ``omega`` lies within ``pole_tol`` of an undamped branch that carries
    photon weight.
    """
    omega = np.asarray(omega, dtype=float)
    Y = modes.Y
    photon = np.sum(np.abs(Y) ** 2, axis=1) > 0
    undamped = (cb.damping == 0) & photon
    if np.any(undamped):
        dist = np.abs(omega[..., None] - cb.values.real[undamped])
        if np.any(dist <= pole_tol):
            raise PoleError(f"probe frequency within {pole_tol:g} rad/s of an undamped branch")
    residues = np.conj(Y)[:, :, None] * Y[:, None, :]
    denom = omega[..., None] - cb.values
    return 1j * np.einsum("...r,rab->...ab", 1.0 / denom, residues)


def solve_scattering(lam, d, inc, c_in=(0.0, 0.0)):
    """General two-port, two-polarization solve for arbitrary mirror rates.

    Parameters
    ----------
    lam : ndarray, shape (..., 2, 2)
    d : DampingConfig
    inc : IncidentField
        Upper-mirror input.
    c_in : sequence of complex
        Lower-mirror input (s, p); zero in the standard single-side drive.
    """
    lam = np.asarray(lam, dtype=complex)
    sU, sL = math.sqrt(d.gamma_U), math.sqrt(d.gamma_L)
    b_in = inc.vector
    c_in = np.asarray(c_in, dtype=complex)
    lhs = np.eye(2) + d.gamma * lam
    det = lhs[..., 0, 0] * lhs[..., 1, 1] - lhs[..., 0, 1] * lhs[..., 1, 0]
    if np.any(np.abs(det) < 1e-300):
        raise SingularSystemError("1 + gamma Lambda is singular")
    rhs = lam @ (sU * b_in + sL * c_in)
    a = np.linalg.solve(lhs, rhs[..., None])[..., 0]
    return ScatteringAmplitudes(b_out=sU * a - b_in, c_out=sL * a - c_in, a=a)


def closed_form_s_drive(lam, gamma):
    """Output ratios for unit s input, identical mirrors, no lower input.

    Returns ``(t_s, t_p, r_s, r_p)`` with t = c_out / b_in^s and
    r = b_out / b_in^s; t_p and r_p coincide.
    """
    lam = np.asarray(lam, dtype=complex)
    ss, sp = lam[..., 0, 0], lam[..., 0, 1]
    ps, pp = lam[..., 1, 0], lam[..., 1, 1]
    D = (1 + gamma * ss) * (1 + gamma * pp) - gamma**2 * sp * ps
    if np.any(np.abs(D) < 1e-300):
        raise SingularSystemError("D vanishes")
    t_s = (gamma * ss * (1 + gamma * pp) - gamma**2 * sp * ps) / D
    t_p = gamma * ps / D
    r_s = -(1 + gamma * pp) / D
    return t_s, t_p, r_s, t_p


def swap_polarizations(lam):
    """Exchange the s and p labels of a Lambda matrix (or stack)."""
    return np.asarray(lam)[..., ::-1, ::-1]


def _closed_form_amplitudes(lam, gamma, drive):
    if drive == "s":
        t_s, t_p, r_s, r_p = closed_form_s_drive(lam, gamma)
    else:
        # p drive: s-drive formulas with the labels exchanged
        t_p, t_s, r_p, r_s = closed_form_s_drive(swap_polarizations(lam), gamma)
    c_out = np.stack([t_s, t_p], axis=-1)
    b_out = np.stack([r_s, r_p], axis=-1)
    return ScatteringAmplitudes(b_out=b_out, c_out=c_out, a=c_out / math.sqrt(gamma))


def principal_angle(z):
    """Argument in (-pi, pi]."""
    phi = np.angle(z)
    return np.where(phi <= -np.pi, np.pi, phi)


def _observable_arrays(amps, inc):
    power = inc.power
    ref = inc.reference
    T = np.abs(amps.c_out) ** 2 / power
    R = np.abs(amps.b_out) ** 2 / power
    A = 1.0 - (T[..., S] + T[..., P] + R[..., S] + R[..., P])
    I = np.abs(amps.a) ** 2 / power
    phase_t = principal_angle(amps.c_out / ref)
    phase_r = principal_angle(amps.b_out / ref)
    return T, R, A, I, phase_t, phase_r


def observables(amps, inc, d, omega=float("nan")):
    """Intensities, phases and photon numbers at a single probe frequency.

    T and R are normalized to the total incident power and A is the deficit
    1 - sum(T) - sum(R).  Phases are taken relative to the incident
    amplitude (the larger component for a superposition).  ``d`` is
    accepted for symmetry with the other operations; the rates are already
    folded into ``amps``.
    """
    T, R, A, I, pt, pr = _observable_arrays(amps, inc)
    return SpectraPoint(
        omega=float(omega),
        T_s=float(T[S]), T_p=float(T[P]), R_s=float(R[S]), R_p=float(R[P]), A=float(A),
        phase_t_s=float(pt[S]), phase_t_p=float(pt[P]),
        phase_r_s=float(pr[S]), phase_r_p=float(pr[P]),
        I_s=float(I[S]), I_p=float(I[P]),
    )


def as_incident(drive):
    """Accept 's', 'p', an IncidentField or an (b_s, b_p) pair."""
    if isinstance(drive, IncidentField):
        return drive
    if drive == "s":
        return S_DRIVE
    if drive == "p":
        return P_DRIVE
    b_s, b_p = drive
    return IncidentField(complex(b_s), complex(b_p))


def _drive_tag(drive):
    if isinstance(drive, str):
        if drive not in POLARIZATIONS:
            raise ValueError(f"drive must be 's', 'p' or an amplitude pair, got {drive!r}")
        return drive
    inc = as_incident(drive)
    if inc.b_p == 0 and inc.b_s == 1:
        return "s"
    if inc.b_s == 0 and inc.b_p == 1:
        return "p"
    return None


def _shift_off_poles(omega_grid, cb, modes, pole_tol):
    """Move grid points sitting on undamped resonances just off them.

    A hit moves away from the pole by half a grid step, or to just outside
    ``pole_tol`` when the grid is finer than that; ordering is preserved.
    """
    omega = omega_grid.copy()
    shifted = np.zeros(len(omega), dtype=bool)
    photon = np.sum(np.abs(modes.Y) ** 2, axis=1) > 0
    poles = cb.values.real[(cb.damping == 0) & photon]
    for pole in poles:
        hits = np.nonzero(np.abs(omega - pole) <= pole_tol)[0]
        for i in hits:
            j = i + 1 if i + 1 < len(omega) else i - 1
            dist = max(0.5 * abs(omega_grid[j] - omega_grid[i]), 2.0 * pole_tol)
            omega[i] = pole - dist if omega_grid[i] < pole else pole + dist
            shifted[i] = True
    return omega, shifted


def evaluate_spectra(modes, d, drive, omega_grid, pole_rtol=1e-3):
    """Vectorized spectra of fixed modes over ``omega_grid`` (rad/s).

    Single-polarization drives with identical mirrors use the closed-form
    solution; anything else goes through :func:`solve_scattering`.
    """
    omega_grid = np.asarray(omega_grid, dtype=float)
    if omega_grid.ndim != 1 or len(omega_grid) < 2:
        raise ValueError("omega grid needs at least two points")
    if not np.all(np.diff(omega_grid) > 0):
        raise ValueError("omega grid must be strictly increasing")
    if not d.gamma > 0:
        raise ValueError("mirror damping gamma must be > 0")
    cb = complex_branches(modes, d)
    pole_tol = pole_rtol * d.gamma
    omega, shifted = _shift_off_poles(omega_grid, cb, modes, pole_tol)
    lam = lambda_matrix(cb, modes, omega, pole_tol=pole_tol)
    tag = _drive_tag(drive)
    inc = as_incident(drive)
    if tag is not None and d.identical_mirrors:
        amps = _closed_form_amplitudes(lam, d.gamma, tag)
    else:
        amps = solve_scattering(lam, d, inc)
    T, R, A, I, pt, pr = _observable_arrays(amps, inc)
    return SpectraArrays(
        omega=omega,
        T_s=T[:, S], T_p=T[:, P], R_s=R[:, S], R_p=R[:, P], A=A,
        phase_t_s=pt[:, S], phase_t_p=pt[:, P], phase_r_s=pr[:, S], phase_r_p=pr[:, P],
        I_s=I[:, S], I_p=I[:, P],
        pole_shifted=shifted,
    )


def spectrum_sweep(cfg, p, d, drive, omega_grid, convention=ORTHONORMAL):
    """All observables at probe point ``p`` over an increasing ``omega_grid``.

    Returns a list of :class:`SpectraPoint`; points moved off an undamped
    pole carry ``pole_shifted=True`` and the frequency actually used.
    """
    modes = polariton_modes(coupling_constants(cfg, p), cfg.omega_A, convention)
    return evaluate_spectra(modes, d, drive, omega_grid).points()


def default_omega_grid(cfg, k, count=2001):
    """omega_A -+ 6 |f|, with |f| = C_k / hbar the angle-free coupling scale."""
    cs = coupling_constants(cfg, ProbePoint(k, math.pi / 2))
    g = cs.C_k / cfg.hbar
    return np.linspace(cfg.omega_A - 6.0 * g, cfg.omega_A + 6.0 * g, count)

