"""Three-branch polaritons of one collective excitation and two cavity polarizations.

In the basis (excitation, s photon, p photon) the one-excitation Hamiltonian
is

    [[omega_A, f_s,     f_p    ],
     [f_s*,    omega_k, 0      ],
     [f_p*,    0,       omega_k]]

whose eigenvalues are (omega_k + omega_A)/2 +- Delta_k and omega_k, with
Delta_k = sqrt(delta_k^2 + |f|^2).  Row r of the amplitude matrix holds the
Hopfield coefficients (X_r, Y_r^s, Y_r^p) of A_r = X_r B + sum_nu Y_r^nu a_nu,
i.e. the complex conjugate of the r-th eigenvector.
"""
from dataclasses import dataclass
from enum import IntEnum
import math

import numpy as np

from .jacobi import hermitian_jacobi

ORTHONORMAL = "orthonormal"
LITERAL = "paper"
CONVENTIONS = (ORTHONORMAL, LITERAL)

DEGENERACY_EPS = 1e-14
_PIVOT_RTOL = 1e-12


class Branch(IntEnum):
    UPPER = 0
    MIDDLE = 1
    LOWER = 2

    @property
    def label(self):
        return self.name.lower()


class DegenerateCouplingError(ValueError):
    """|f| is too small for the mixing formulas; use :func:`decoupled_modes`."""


@dataclass(frozen=True)
class PolaritonModes:
    """Branch frequencies (rad/s, descending) and amplitude matrix.

    ``amplitudes[r]`` is (X_r, Y_r^s, Y_r^p) for r in (upper, middle, lower).
    """

    omegas: np.ndarray
    Delta_k: float
    amplitudes: np.ndarray
    convention: str

    @property
    def X(self):
        return self.amplitudes[:, 0]

    @property
    def Y(self):
        """3x2 photon block: Y[r, 0] = Y_r^s, Y[r, 1] = Y_r^p."""
        return self.amplitudes[:, 1:]

    @property
    def weights(self):
        return np.abs(self.amplitudes) ** 2

    def unitarity_defect(self):
        u = self.amplitudes
        return float(np.max(np.abs(u @ u.conj().T - np.eye(3))))


def fix_phase(row):
    """Rotate ``row`` so its first non-negligible entry is real and positive."""
    row = np.asarray(row, dtype=complex)
    mags = np.abs(row)
    big = mags > _PIVOT_RTOL * mags.max() if mags.max() > 0 else np.zeros(len(row), bool)
    if not big.any():
        return row.copy()
    z = row[np.argmax(big)]
    return row * (np.conj(z) / abs(z))


def _check_convention(convention):
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")


def eigenfrequencies(cs, omega_A):
    """Closed-form branch frequencies (Omega_+, Omega_0, Omega_-) in rad/s."""
    Delta = math.hypot(cs.delta_k, cs.f_abs)
    mean = (cs.omega_k + omega_A) / 2.0
    return np.array([mean + Delta, cs.omega_k, mean - Delta])


def _split(delta, f_abs):
    """Return (Delta, Delta - delta, Delta + delta) without cancellation."""
    Delta = math.hypot(delta, f_abs)
    if delta >= 0:
        dp = Delta + delta
        dm = f_abs**2 / dp
    else:
        dm = Delta - delta
        dp = f_abs**2 / dm
    return Delta, dm, dp


def hopfield_amplitudes(cs, omega_A, convention=ORTHONORMAL, eps=DEGENERACY_EPS):
    """Closed-form Hopfield coefficients of the three branches.

    The upper and lower rows follow X_+- = +-sqrt((Delta -+ delta)/(2 Delta)),
    Y_+-^nu = f^nu / sqrt(2 Delta (Delta -+ delta)).  The middle row is pure
    photon.  With ``convention="orthonormal"`` it is the polarization
    orthogonal to the dipole, (f_p*, -f_s*)/|f|, phase-fixed; this makes the
    amplitude matrix unitary.  ``convention="paper"`` uses f^nu/|f| literally;
    that row is not orthogonal to the other two and exists to reproduce the
    original curves.

    Raises
    ------
    DegenerateCouplingError
        If ``|f| <= eps * omega_A``.
    """
    _check_convention(convention)
    if cs.f_abs <= eps * omega_A:
        raise DegenerateCouplingError(
            f"|f| = {cs.f_abs:.3e} rad/s is below {eps:g} * omega_A; use decoupled_modes()"
        )
    Delta, dm, dp = _split(cs.delta_k, cs.f_abs)
    f = np.array([cs.f_s, cs.f_p], dtype=complex)
    upper = np.concatenate(([math.sqrt(dm / (2 * Delta))], f / math.sqrt(2 * Delta * dm)))
    lower = np.concatenate(([-math.sqrt(dp / (2 * Delta))], f / math.sqrt(2 * Delta * dp)))
    if convention == ORTHONORMAL:
        middle = fix_phase(np.array([0.0, np.conj(cs.f_p), -np.conj(cs.f_s)]) / cs.f_abs)
    else:
        middle = np.concatenate(([0.0], f / cs.f_abs))
    middle[0] = 0.0
    return PolaritonModes(
        omegas=eigenfrequencies(cs, omega_A),
        Delta_k=Delta,
        amplitudes=np.array([upper, middle, lower], dtype=complex),
        convention=convention,
    )


def decoupled_modes(cs, omega_A, convention=ORTHONORMAL):
    """Branches for vanishing coupling: pure excitation, s photon, p photon.

    Ordered by descending frequency; ties keep (excitation, s, p) order.
    """
    _check_convention(convention)
    freqs = np.array([omega_A, cs.omega_k, cs.omega_k])
    order = np.argsort(-freqs, kind="stable")
    return PolaritonModes(
        omegas=freqs[order],
        Delta_k=abs(cs.delta_k),
        amplitudes=np.eye(3, dtype=complex)[order],
        convention=convention,
    )


def polariton_modes(cs, omega_A, convention=ORTHONORMAL, eps=DEGENERACY_EPS):
    """Closed-form modes, falling back to the decoupled assignment at |f| ~ 0."""
    try:
        return hopfield_amplitudes(cs, omega_A, convention, eps)
    except DegenerateCouplingError:
        return decoupled_modes(cs, omega_A, convention)


def hamiltonian_matrix(cs, omega_A):
    return np.array(
        [
            [omega_A, cs.f_s, cs.f_p],
            [np.conj(cs.f_s), cs.omega_k, 0.0],
            [np.conj(cs.f_p), 0.0, cs.omega_k],
        ],
        dtype=complex,
    )


def diagonalize_oracle_many(coupling_sets, omega_A):
    """Numerically diagonalize the 3x3 Hamiltonian for each coupling set.

    Each matrix is shifted by its photon frequency omega_k before the Jacobi
    solve, so the two photon diagonal entries are exactly zero.  The small
    splitting |f|^2 / 2 delta between the photon-like branches at large
    detuning is then resolved to full relative precision; with any other
    shift it drowns in the rounding of the ~1e15 rad/s diagonal.
    """
    sets = list(coupling_sets)
    if not sets:
        return []
    shifts = np.array([cs.omega_k for cs in sets])
    h = np.stack([hamiltonian_matrix(cs, omega_A) for cs in sets])
    h[:, np.arange(3), np.arange(3)] -= shifts[:, None]
    evals, evecs = hermitian_jacobi(h)
    out = []
    for cs, shift, w, vecs in zip(sets, shifts, evals, evecs):
        rows = np.array([fix_phase(np.conj(vecs[:, r])) for r in range(3)])
        out.append(
            PolaritonModes(
                omegas=w + shift,
                Delta_k=math.hypot(cs.delta_k, cs.f_abs),
                amplitudes=rows,
                convention=ORTHONORMAL,
            )
        )
    return out


def diagonalize_oracle(cs, omega_A):
    """Independent eigen-decomposition of the one-excitation Hamiltonian."""
    return diagonalize_oracle_many([cs], omega_A)[0]


def large_detuning_approx(cs, omega_A):
    """Dispersive-limit branch frequencies (upper, middle, lower) in rad/s.

    For |delta| >> |f| the upper branch is the higher of (omega_k, omega_A)
    pushed up by |f|^2/(2|delta|) and the lower branch the other one pushed
    down by the same amount; the middle branch stays at omega_k.  The
    truncation error is |f|^4 / (8 |delta|^3).
    """
    delta = cs.delta_k
    if delta == 0:
        raise ValueError("large-detuning approximation needs delta_k != 0")
    shift = cs.f_abs**2 / (2.0 * abs(delta))
    hi, lo = max(cs.omega_k, omega_A), min(cs.omega_k, omega_A)
    return np.array([hi + shift, cs.omega_k, lo - shift])
