import pytest

from polmix import units
from polmix.model import ModelConfig
from polmix.spectra import DampingConfig

# reference device: 2.5e14 Hz transition, 2 e*A dipole, 0.2 um lattice,
# resonance-derived mirror spacing, gamma/2pi = 1 GHz, Gamma_ex/2pi = 100 MHz
K_REF = units.per_angstrom_to_per_m(5e-7)

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def cfg():
    return ModelConfig.from_lab_units(2.5e14, 2.0, 0.2e-6)


@pytest.fixture(scope="session")
def damping():
    return DampingConfig.symmetric(units.hz_to_angular(1e9), units.hz_to_angular(1e8))


@pytest.fixture(scope="session")
def lossless():
    return DampingConfig.symmetric(units.hz_to_angular(1e9), 0.0)


@pytest.fixture
def criterion():
    """Record one acceptance criterion and assert it."""

    def record(number, title, passed, detail=""):
        line = f"AC-{number:02d} {'PASS' if passed else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)

