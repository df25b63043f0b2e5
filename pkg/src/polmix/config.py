"""JSON run configuration: strict schema, aggregated validation, round-trip output.

Every key is optional; omitted keys take the reference device values below.
The reserved key ``_run`` (written into output sidecars) is ignored, so a
sidecar can be fed straight back in as a config.
"""
from dataclasses import dataclass
import json
import math
import numbers

from scipy import constants

from . import units
from .model import ModelConfig
from .spectra import DampingConfig

ALT_L_M = 3.77e-6
RESERVED_KEY = "_run"

DEFAULTS = {
    "omega_A_over_2pi_Hz": 2.5e14,
    "mu_eA": 2.0,
    "a_m": 0.2e-6,
    "L_m": None,
    "m_index": 1,
    "gamma_over_2pi_Hz": 1e9,
    "Gamma_ex_over_2pi_Hz": 1e8,
    "c_m_per_s": constants.c,
    "hbar_J_s": constants.hbar,
    "eps0_F_per_m": constants.epsilon_0,
}

# key -> (predicate, description of the accepted values)
_RULES = {
    "omega_A_over_2pi_Hz": (lambda v: v > 0, "a number > 0"),
    "mu_eA": (lambda v: v >= 0, "a number >= 0"),
    "a_m": (lambda v: v > 0, "a number > 0"),
    "L_m": (lambda v: v > 0, "null or a number > 0"),
    "m_index": (lambda v: v == 1, "the integer 1 (only the m=1 mode is modeled)"),
    "gamma_over_2pi_Hz": (lambda v: v > 0, "a number > 0"),
    "Gamma_ex_over_2pi_Hz": (lambda v: v >= 0, "a number >= 0"),
    "c_m_per_s": (lambda v: v > 0, "a number > 0"),
    "hbar_J_s": (lambda v: v > 0, "a number > 0"),
    "eps0_F_per_m": (lambda v: v > 0, "a number > 0"),
}


class ConfigError(ValueError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("invalid configuration:\n" + "\n".join(f"  - {p}" for p in self.problems))


@dataclass(frozen=True)
class Settings:
    """Validated configuration: the physical model plus damping rates."""

    model: ModelConfig
    damping: DampingConfig
    document: dict

    def resolved_document(self):
        """Config document with every default filled in, L included."""
        doc = dict(self.document)
        doc["L_m"] = self.model.L
        return doc

    def report(self):
        """Human-oriented summary in both Hz and rad/s."""
        m, d = self.model, self.damping
        return {
            "config": self.resolved_document(),
            "resolved": {
                "omega_A_rad_per_s": m.omega_A,
                "omega_A_over_2pi_Hz": self.document["omega_A_over_2pi_Hz"],
                "omega_0_rad_per_s": m.omega_0,
                "omega_0_over_2pi_Hz": units.angular_to_hz(m.omega_0),
                "L_m": m.L,
                "L_derived_from_resonance": m.L_derived,
                "mu_C_m": m.mu,
                "gamma_rad_per_s": d.gamma,
                "gamma_over_2pi_Hz": self.document["gamma_over_2pi_Hz"],
                "Gamma_ex_rad_per_s": d.Gamma_ex,
                "Gamma_ex_over_2pi_Hz": self.document["Gamma_ex_over_2pi_Hz"],
            },
        }


def _is_number(v):
    return isinstance(v, numbers.Real) and not isinstance(v, bool) and math.isfinite(v)


def parse_config(doc, L_override=None):
    """Validate a config mapping and build :class:`Settings`.

    All problems are collected before raising :class:`ConfigError`.
    """
    if not isinstance(doc, dict):
        raise ConfigError([f"top level must be a JSON object, got {type(doc).__name__}"])
    problems = []
    for key in doc:
        if key not in DEFAULTS and key != RESERVED_KEY:
            problems.append(f"unknown key {key!r}")
    values = {}
    for key, default in DEFAULTS.items():
        value = doc.get(key, default)
        check, accepted = _RULES[key]
        if key == "L_m" and value is None:
            ok = True
        elif key == "m_index":
            ok = isinstance(value, int) and not isinstance(value, bool) and check(value)
        else:
            ok = _is_number(value) and check(value)
        if not ok:
            problems.append(f"{key} must be {accepted}, got {value!r}")
        values[key] = value
    if L_override is not None:
        if _is_number(L_override) and L_override > 0:
            values["L_m"] = float(L_override)
        else:
            problems.append(f"--paper-L must be a number > 0, got {L_override!r}")
    if problems:
        raise ConfigError(problems)

    model = ModelConfig.from_lab_units(
        values["omega_A_over_2pi_Hz"],
        values["mu_eA"],
        values["a_m"],
        values["L_m"],
        values["m_index"],
        c=values["c_m_per_s"],
        hbar=values["hbar_J_s"],
        eps0=values["eps0_F_per_m"],
    )
    damping = DampingConfig.symmetric(
        units.hz_to_angular(values["gamma_over_2pi_Hz"]),
        units.hz_to_angular(values["Gamma_ex_over_2pi_Hz"]),
    )
    return Settings(model=model, damping=damping, document=values)


def load_config(path, L_override=None):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError([f"{path}: not valid JSON ({exc})"]) from exc
    except OSError as exc:
        raise ConfigError([f"{path}: cannot read ({exc.strerror})"]) from exc
    return parse_config(doc, L_override=L_override)
