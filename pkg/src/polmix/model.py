"""Physical parameters, cavity dispersion and dipole-photon coupling constants.

A single two-level emitter per lattice site, with a real in-plane transition
dipole along x, sits at the midplane of a planar cavity of mirror spacing L.
For in-plane wavevector k making angle theta with the dipole, the TE (s) and
TM (p) photons of the m=1 mode couple to the collective excitation with

    hbar f_s = i C_k sin(theta)
    hbar f_p = C_k (omega_0 / omega_k) cos(theta)
    C_k = sqrt(hbar omega_k mu^2 / (L a^2 eps0)),  omega_0 = c pi / L
"""
from dataclasses import dataclass, field
import math

from scipy import constants

from . import units


@dataclass(frozen=True)
class ModelConfig:
    """Device and material parameters, SI units with angular frequencies.

    ``L`` may be left as ``None``; it is then chosen so that the k=0, m=1
    cavity mode is resonant with the transition (L = c pi / omega_A).
    """

    omega_A: float
    mu: float
    a: float
    L: float | None = None
    m_index: int = 1
    c: float = constants.c
    hbar: float = constants.hbar
    eps0: float = constants.epsilon_0
    L_derived: bool = field(default=False, init=False)

    def __post_init__(self):
        if self.L is None and self.omega_A > 0 and self.c > 0:
            object.__setattr__(self, "L", self.c * math.pi / self.omega_A)
            object.__setattr__(self, "L_derived", True)
        problems = []
        if not self.omega_A > 0:
            problems.append(f"omega_A must be > 0, got {self.omega_A!r}")
        if not self.mu >= 0:
            problems.append(f"mu must be >= 0, got {self.mu!r}")
        if not self.a > 0:
            problems.append(f"a must be > 0, got {self.a!r}")
        if self.L is None:
            problems.append("L cannot be derived without a valid omega_A and c")
        elif not self.L > 0:
            problems.append(f"L must be > 0, got {self.L!r}")
        if isinstance(self.m_index, bool) or not isinstance(self.m_index, int) or self.m_index < 1:
            problems.append(f"m_index must be an integer >= 1, got {self.m_index!r}")
        for name in ("c", "hbar", "eps0"):
            if not getattr(self, name) > 0:
                problems.append(f"{name} must be > 0")
        if problems:
            raise ValueError("; ".join(problems))

    @classmethod
    def from_lab_units(cls, omega_A_over_2pi_Hz, mu_eA, a_m, L_m=None, m_index=1, **constants_si):
        """Build from Hz / e*Angstrom / metre inputs."""
        return cls(
            omega_A=units.hz_to_angular(omega_A_over_2pi_Hz),
            mu=units.e_angstrom_to_si(mu_eA),
            a=a_m,
            L=L_m,
            m_index=m_index,
            **constants_si,
        )

    @property
    def omega_0(self):
        """Cutoff frequency c pi / L of the m=1 mode."""
        return self.c * math.pi / self.L


@dataclass(frozen=True)
class ProbePoint:
    """In-plane wavenumber |k| (1/m) and dipole-to-k angle theta (rad)."""

    k: float
    theta: float

    def __post_init__(self):
        if not self.k >= 0:
            raise ValueError(f"k must be >= 0, got {self.k!r}")
        if not math.isfinite(self.theta):
            raise ValueError(f"theta must be finite, got {self.theta!r}")

    @classmethod
    def from_lab_units(cls, k_per_angstrom, theta):
        return cls(units.per_angstrom_to_per_m(k_per_angstrom), theta)


@dataclass(frozen=True)
class CouplingSet:
    """Coupling constants (rad/s) and related quantities at one ProbePoint."""

    k: float
    theta: float
    omega_k: float
    omega_0: float
    delta_k: float
    C_k: float
    f_s: complex
    f_p: complex
    f_abs: float

    @property
    def f(self):
        return (self.f_s, self.f_p)


def cavity_dispersion(cfg, k, m=1):
    """Cavity photon frequency c sqrt(k^2 + (m pi / L)^2) in rad/s."""
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"mode index m must be an integer >= 1 (m=0 is not modeled), got {m!r}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k!r}")
    return cfg.c * math.hypot(k, m * math.pi / cfg.L)


def coupling_scale(cfg, omega_k):
    """C_k = sqrt(hbar omega_k mu^2 / (L a^2 eps0)), in joules."""
    if not omega_k > 0:
        raise ValueError(f"omega_k must be > 0, got {omega_k!r}")
    return cfg.mu * math.sqrt(cfg.hbar * omega_k / (cfg.L * cfg.a**2 * cfg.eps0))


def coupling_constants(cfg, p):
    """Evaluate the TE/TM coupling constants of the m=1 mode at ``p``.

    Parameters
    ----------
    cfg : ModelConfig
    p : ProbePoint

    Returns
    -------
    CouplingSet
        ``f_s`` is purely imaginary and ``f_p`` real (the dipole is real).
    """
    if cfg.m_index != 1:
        raise ValueError("only the m=1 cavity mode is modeled")
    omega_k = cavity_dispersion(cfg, p.k, 1)
    omega_0 = cfg.omega_0
    C_k = coupling_scale(cfg, omega_k)
    g = C_k / cfg.hbar
    f_s = complex(0.0, g * math.sin(p.theta))
    f_p = complex(g * (omega_0 / omega_k) * math.cos(p.theta), 0.0)
    return CouplingSet(
        k=p.k,
        theta=p.theta,
        omega_k=omega_k,
        omega_0=omega_0,
        delta_k=(omega_k - cfg.omega_A) / 2.0,
        C_k=C_k,
        f_s=f_s,
        f_p=f_p,
        f_abs=math.hypot(abs(f_s), abs(f_p)),
    )
