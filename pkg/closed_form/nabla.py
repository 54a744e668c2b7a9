from dataclasses import dataclass
from typing import Any

import numpy as np

from closed_form.contrast import contrast_ratio
from closed_form.two_level import SINGULAR_FACTOR, phase_accumulated
from model.exceptions import UnsupportedConfigurationError
from model.params import NablaParams


@dataclass(frozen=True)
class NablaAmplitudes:
    s12: Any
    s21: Any
    s13: Any
    s14: Any
    s23: Any
    s24: Any
    # Equal to s23 up to a phase set by the frame convention.
    s41: Any
    f: Any

    def probability(self, name):
        return abs(getattr(self, name))**2


def transfer_kernel(p: NablaParams, delta_prime):
    """Response of the driven level |e2>, dressed by its decay into W_b."""
    return 1 / (delta_prime + 1j * (p.gamma_e2 / 2 + p.gamma2_wg))


def perturbed_transfer_kernel(p: NablaParams, delta_prime):
    # Wrong sign on the decay term; the oracle suite must reject it.
    return 1 / (delta_prime - 1j * (p.gamma_e2 / 2 + p.gamma2_wg))


def nabla_amplitudes(p: NablaParams,
                     delta_prime,
                     kernel=transfer_kernel) -> NablaAmplitudes:
    if not p.single_point_b:
        raise UnsupportedConfigurationError(
            "Closed forms need a single coupling point on W_b "
            "(phi_b0 = tau_b = 0 and theta3 = theta4); use the solver")

    phi = phase_accumulated(p.phi_a0, p.tau_a, delta_prime)
    gamma1, theta = p.gamma1_wg, p.theta
    f = kernel(p, delta_prime)

    shifted = delta_prime + 0.5j * p.gamma_e1 - p.rabi**2 * f
    den = shifted + 2j * gamma1 * (1 + np.exp(1j * phi) * np.cos(theta))
    s12 = (shifted - 2 * gamma1 * np.exp(1j * theta) * np.sin(phi)) / den
    s21 = (shifted - 2 * gamma1 * np.exp(-1j * theta) * np.sin(phi)) / den

    g1, g2 = np.sqrt(p.gamma1_wg), np.sqrt(p.gamma2_wg)
    transfer = (g2 / g1) * p.rabi * np.exp(1j * (p.theta3 - p.alpha)) * f

    s13 = transfer * _excitation(s12, p.theta1, p.theta2, phi, gamma1, den)
    s23 = transfer * _excitation(s21, p.theta2, p.theta1, phi, gamma1, den)

    s12, s21, s13, s23, f = map(_value, (s12, s21, s13, s23, f))
    return NablaAmplitudes(s12=s12,
                           s21=s21,
                           s13=s13,
                           s14=s13,
                           s23=s23,
                           s24=s23,
                           s41=s23,
                           f=f)


def chirality_C(p: NablaParams, delta_prime):
    a = nabla_amplitudes(p, delta_prime)
    return contrast_ratio(a.probability("s23"), a.probability("s14"))


def _excitation(s, first, second, phi, gamma1, den):
    """(s - 1) divided by the path factor of the incoming direction.

    Where the path factor vanishes both sides of the quotient do, and the
    expanded form takes over.
    """
    factor = np.exp(1j * first) + np.exp(1j * (second - phi))
    expanded = -1j * gamma1 * (np.exp(-1j * first) +
                               np.exp(-1j * second) * np.exp(1j * phi)) / den
    with np.errstate(divide="ignore", invalid="ignore"):
        factored = (s - 1) / factor
    return np.where(abs(factor) >= SINGULAR_FACTOR, factored, expanded)


def _value(x):
    return complex(x) if not np.ndim(x) else np.asarray(x, dtype=complex)
