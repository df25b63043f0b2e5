"""Unit conversions between the I/O conventions and internal SI-angular values.

Internally every frequency is angular (rad/s), wavenumbers are in 1/m and
dipoles in C*m.  Files and the CLI speak Hz (as omega/2pi), 1/Angstrom and e*Angstrom.
"""
import math

from scipy import constants

ANGSTROM = 1e-10
E_ANGSTROM = constants.e * ANGSTROM
TWO_PI = 2.0 * math.pi


def hz_to_angular(f):
    return TWO_PI * f


def angular_to_hz(omega):
    return omega / TWO_PI


def per_angstrom_to_per_m(k):
    return k / ANGSTROM


def per_m_to_per_angstrom(k):
    return k * ANGSTROM


def e_angstrom_to_si(mu):
    return mu * E_ANGSTROM


def si_to_e_angstrom(mu):
    return mu / E_ANGSTROM


def deg_to_rad(theta):
    return math.radians(theta)


def rad_to_deg(theta):
    return math.degrees(theta)


# factor that takes a value in the named unit to the internal SI-angular unit
_TO_INTERNAL = {
    "Hz": TWO_PI,
    "rad/s": 1.0,
    "1/m": 1.0,
    "rad": 1.0,
}
_DIVIDE_INTERNAL = {
    "1/A": ANGSTROM,
    "1/Å": ANGSTROM,
    "deg": 180.0 / math.pi,
}
UNITS = tuple(_TO_INTERNAL) + tuple(_DIVIDE_INTERNAL)

# which physical quantity each unit measures
QUANTITY = {
    "Hz": "frequency",
    "rad/s": "frequency",
    "1/m": "wavenumber",
    "1/A": "wavenumber",
    "1/Å": "wavenumber",
    "rad": "angle",
    "deg": "angle",
}


def to_internal(value, unit):
    """Convert ``value`` given in ``unit`` to rad/s, 1/m or rad."""
    if unit in _TO_INTERNAL:
        return value * _TO_INTERNAL[unit]
    if unit in _DIVIDE_INTERNAL:
        return value / _DIVIDE_INTERNAL[unit]
    raise ValueError(f"unknown unit {unit!r}; expected one of {', '.join(UNITS)}")
