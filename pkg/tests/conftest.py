import math

import numpy as np
import pytest

from model.params import DeltaParams, NablaParams, TwoLevelParams

HALF_PI = math.pi / 2


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def transparent_atom():
    """Both directions pass unscattered at every detuning."""
    return TwoLevelParams(theta2=HALF_PI, phi0=HALF_PI)


@pytest.fixture
def one_way_atom():
    """Blocks photons coming from the left at resonance."""
    return TwoLevelParams(gamma_ext=4.0, theta2=HALF_PI, phi0=HALF_PI)


@pytest.fixture
def chiral_nabla():
    return NablaParams(rabi=5.0, theta2=HALF_PI, phi_a0=HALF_PI)


@pytest.fixture
def circulator():
    return NablaParams(rabi=2.0,
                       theta2=HALF_PI,
                       theta4=3 * HALF_PI,
                       phi_a0=HALF_PI,
                       phi_b0=HALF_PI)


@pytest.fixture
def phase_loop():
    return DeltaParams(drive=30.0,
                       beta=HALF_PI,
                       theta2=HALF_PI,
                       theta4=HALF_PI,
                       phi_a0=HALF_PI,
                       phi_b0=HALF_PI)
