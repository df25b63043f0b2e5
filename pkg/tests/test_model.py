import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import constants

from polmix import units
from polmix.model import ModelConfig, ProbePoint, cavity_dispersion, coupling_constants, coupling_scale

from conftest import K_REF


def _mp_reference(k, theta):
    """High-precision evaluation of omega_k, C_k, f_s, f_p for the reference device."""
    with mp.workdps(40):
        c, hbar, eps0 = mp.mpf(constants.c), mp.mpf(constants.hbar), mp.mpf(constants.epsilon_0)
        omega_A = 2 * mp.pi * mp.mpf("2.5e14")
        L = c * mp.pi / omega_A
        mu = 2 * mp.mpf(constants.e) * mp.mpf("1e-10")
        a = mp.mpf("0.2e-6")
        omega_k = c * mp.sqrt(mp.mpf(k) ** 2 + (mp.pi / L) ** 2)
        C = mp.sqrt(hbar * omega_k * mu**2 / (L * a**2 * eps0))
        f_s = C / hbar * mp.sin(theta)
        f_p = C / hbar * (c * mp.pi / L) / omega_k * mp.cos(theta)
        return float(omega_k), float(C), float(f_s), float(f_p)


def test_derived_L_is_resonant(cfg):
    assert cfg.L_derived
    assert cfg.L == pytest.approx(5.99584916e-7, rel=1e-9)
    assert cfg.c * math.pi / cfg.L == pytest.approx(cfg.omega_A, rel=1e-12)


def test_explicit_L_overrides():
    cfg = ModelConfig.from_lab_units(2.5e14, 2.0, 0.2e-6, L_m=3.77e-6)
    assert not cfg.L_derived
    assert cfg.L == 3.77e-6


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(omega_A=0.0, mu=1e-29, a=2e-7),
        dict(omega_A=1e15, mu=-1e-29, a=2e-7),
        dict(omega_A=1e15, mu=1e-29, a=0.0),
        dict(omega_A=1e15, mu=1e-29, a=2e-7, L=-1.0),
        dict(omega_A=1e15, mu=1e-29, a=2e-7, m_index=0),
    ],
)
def test_invalid_config_rejected(kwargs):
    with pytest.raises(ValueError):
        ModelConfig(**kwargs)


def test_dispersion_at_zero_k_equals_transition(cfg):
    assert units.angular_to_hz(cavity_dispersion(cfg, 0.0, 1)) == pytest.approx(2.5e14, rel=1e-14)


def test_dispersion_reference_k(cfg):
    # mpmath value; the loosely quoted 2.5000001e14 is off in the 8th digit
    expected = 250000113828647.22895
    got = units.angular_to_hz(cavity_dispersion(cfg, 5e3, 1))
    assert got == pytest.approx(expected, rel=1e-14)
    assert got == pytest.approx(_mp_reference(5e3, 0.0)[0] / (2 * math.pi), rel=1e-14)


def test_dispersion_monotone(cfg):
    ks = np.linspace(0, 1e7, 50)
    w1 = [cavity_dispersion(cfg, k, 1) for k in ks]
    w2 = [cavity_dispersion(cfg, k, 2) for k in ks]
    assert np.all(np.diff(w1) > 0)
    assert all(b > a for a, b in zip(w1, w2))
    assert all(w > w1[0] for w in w1[1:])


def test_dispersion_rejects_m0(cfg):
    with pytest.raises(ValueError):
        cavity_dispersion(cfg, 1e3, 0)


def test_coupling_scale_reference(cfg):
    C = coupling_scale(cfg, cfg.omega_A)
    assert C / (2 * math.pi * cfg.hbar) == pytest.approx(42712271551.431838, rel=1e-12)
    assert C / (2 * math.pi * cfg.hbar) == pytest.approx(4.3e10, rel=0.01)


def test_coupling_scale_laws(cfg):
    C = coupling_scale(cfg, cfg.omega_A)
    assert coupling_scale(cfg, 2 * cfg.omega_A) == pytest.approx(math.sqrt(2) * C, rel=1e-14)
    dark = ModelConfig(cfg.omega_A, 0.0, cfg.a)
    assert coupling_scale(dark, cfg.omega_A) == 0.0


@pytest.mark.parametrize("theta", [0.0, 0.3, math.pi / 4, 1.2, math.pi / 2, 2.5, 4.0])
@pytest.mark.parametrize("k", [0.0, K_REF, 1e5, 3e6])
def test_coupling_constants_against_mpmath(cfg, k, theta):
    omega_k, C, f_s, f_p = _mp_reference(k, theta)
    cs = coupling_constants(cfg, ProbePoint(k, theta))
    assert cs.omega_k == pytest.approx(omega_k, rel=1e-14)
    assert cs.C_k == pytest.approx(C, rel=1e-13)
    assert cs.f_s.real == 0.0 and cs.f_p.imag == 0.0
    assert cs.f_s.imag == pytest.approx(f_s, rel=1e-12, abs=1e-12 * abs(C / constants.hbar))
    assert cs.f_p.real == pytest.approx(f_p, rel=1e-12, abs=1e-12 * abs(C / constants.hbar))
    assert cs.delta_k == (cs.omega_k - cfg.omega_A) / 2


def test_coupling_special_angles(cfg):
    hbar = cfg.hbar
    cs0 = coupling_constants(cfg, ProbePoint(K_REF, 0.0))
    assert cs0.f_s == 0
    assert hbar * cs0.f_p.real == pytest.approx(cs0.C_k * cs0.omega_0 / cs0.omega_k, rel=1e-15)

    cs90 = coupling_constants(cfg, ProbePoint(K_REF, math.pi / 2))
    assert hbar * cs90.f_s == pytest.approx(1j * cs90.C_k, rel=1e-15)
    assert abs(cs90.f_p) < 1e-15 * abs(cs90.f_s)

    cs45 = coupling_constants(cfg, ProbePoint(0.0, math.pi / 4))
    assert hbar * cs45.f_s == pytest.approx(1j * cs45.C_k / math.sqrt(2), rel=1e-15)
    assert hbar * cs45.f_p.real == pytest.approx(cs45.C_k / math.sqrt(2), rel=1e-15)


def test_coupling_rejects_other_modes():
    cfg = ModelConfig.from_lab_units(2.5e14, 2.0, 0.2e-6, m_index=2)
    with pytest.raises(ValueError):
        coupling_constants(cfg, ProbePoint(0.0, 0.0))


@given(st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi))
def test_total_coupling_angle_free_at_k0(cfg, t1, t2):
    a = coupling_constants(cfg, ProbePoint(0.0, t1)).f_abs
    b = coupling_constants(cfg, ProbePoint(0.0, t2)).f_abs
    assert a == pytest.approx(b, rel=1e-12)


@given(st.floats(0, 1e6), st.floats(-10, 10))
def test_coupling_symmetries(cfg, k, theta):
    cs = coupling_constants(cfg, ProbePoint(k, theta))
    neg = coupling_constants(cfg, ProbePoint(k, -theta))
    shifted = coupling_constants(cfg, ProbePoint(k, theta + math.pi))
    scale = cs.f_abs
    assert abs(neg.f_s + cs.f_s) <= 1e-15 * scale
    assert abs(neg.f_p - cs.f_p) <= 1e-15 * scale
    assert abs(shifted.f_s + cs.f_s) <= 1e-14 * scale
    assert abs(shifted.f_p + cs.f_p) <= 1e-14 * scale
    assert cs.f_abs**2 == pytest.approx(abs(cs.f_s) ** 2 + abs(cs.f_p) ** 2, rel=1e-15)


@given(st.floats(1e-6, 1e9))
def test_unit_round_trips(x):
    assert units.per_m_to_per_angstrom(units.per_angstrom_to_per_m(x)) == pytest.approx(x, rel=1e-15)
    assert units.si_to_e_angstrom(units.e_angstrom_to_si(x)) == pytest.approx(x, rel=1e-15)
    assert units.angular_to_hz(units.hz_to_angular(x)) == pytest.approx(x, rel=1e-15)
