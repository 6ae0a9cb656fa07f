import numpy as np
import pytest

import cases
from slcap import ImpedanceProfile, impedance_profile, synthesize_series_rlc


@pytest.fixture
def rlc_profile() -> ImpedanceProfile:
    """Extracted profile of the canonical RLC, series-through fixture."""
    net = synthesize_series_rlc(cases.RLC, cases.rlc_sweep())
    return impedance_profile(net)


@pytest.fixture
def envelope_profile() -> ImpedanceProfile:
    f, z = cases.envelope_impedance()
    return ImpedanceProfile(frequencies_hz=f, z=z)


@pytest.fixture
def lossy_profile() -> ImpedanceProfile:
    f, z = cases.lossy_capacitive_impedance()
    return ImpedanceProfile(frequencies_hz=f, z=z)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20251104)
