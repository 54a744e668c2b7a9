from dataclasses import dataclass
from typing import Any, Tuple

import numpy as np

from closed_form.contrast import contrast_ratio
from model.builder import two_level_to_model
from model.exceptions import ParameterError, SingularSystemError
from model.params import TwoLevelParams, point_params

# Below this modulus the factored reflection formula is 0/0.
SINGULAR_FACTOR = 1e-8


@dataclass(frozen=True)
class TwoLevelAmplitudes:
    """Amplitudes at one point, or arrays of them over a grid."""
    t: Any
    r: Any
    t_rev: Any
    r_rev: Any
    u_fwd: Any
    u_rev: Any
    # Names of the amplitudes taken from the solver instead.
    solver_evaluated: Tuple[str, ...] = ()

    @property
    def T_1to2(self):
        return abs(self.t)**2

    @property
    def T_2to1(self):
        return abs(self.t_rev)**2

    @property
    def R(self):
        return abs(self.r)**2

    @property
    def R_rev(self):
        return abs(self.r_rev)**2


def phase_accumulated(phi0, tau, delta):
    return phi0 + tau * delta


def two_level_amplitudes(p: TwoLevelParams, delta) -> TwoLevelAmplitudes:
    """Closed-form amplitudes; `p`'s fields and `delta` may be arrays of a
    common shape."""
    phi = phase_accumulated(p.phi0, p.tau, delta)
    theta = p.theta

    den = _denominator(p, delta, phi)
    zero = den == 0
    if np.any(zero):
        where = np.broadcast_to(delta, np.shape(den))[zero][0]
        raise SingularSystemError(float(where), 1, np.inf)

    t_num, t_rev_num = _transmission_numerators(p, delta, phi)
    t, t_rev = t_num / den, t_rev_num / den
    u_fwd, u_rev = (u / den for u in _excitation_numerators(p, phi))

    delegated = []
    r = _reflection(t, 1 + np.exp(1j * (theta + phi)),
                    1 + np.exp(1j * (theta - phi)))
    r = _delegate(r, p, delta, 1, delegated, "r")
    r_rev = _reflection(t_rev, 1 + np.exp(1j * (phi - theta)),
                        1 + np.exp(-1j * (theta + phi)))
    r_rev = _delegate(r_rev, p, delta, 2, delegated, "r_rev")

    return TwoLevelAmplitudes(t=_value(t),
                              r=_value(r),
                              t_rev=_value(t_rev),
                              r_rev=_value(r_rev),
                              u_fwd=_value(u_fwd),
                              u_rev=_value(u_rev),
                              solver_evaluated=tuple(delegated))


def effective_lamb_and_width(p: TwoLevelParams, delta):
    """Phase-dependent effective detuning and decay rate of the atom."""
    phi = phase_accumulated(p.phi0, p.tau, delta)
    cos_theta = np.cos(p.theta)
    detuning = delta - 2 * p.gamma_wg * cos_theta * np.sin(phi)
    width = p.gamma_ext / 2 + 2 * p.gamma_wg * (1 + cos_theta * np.cos(phi))
    return detuning, width


def contrast_I(p: TwoLevelParams, delta):
    # Both transmissions share one denominator.
    phi = phase_accumulated(p.phi0, p.tau, delta)
    t_num, t_rev_num = _transmission_numerators(p, delta, phi)
    return contrast_ratio(abs(t_num)**2, abs(t_rev_num)**2)


def contrast_D(p: TwoLevelParams, delta):
    phi = phase_accumulated(p.phi0, p.tau, delta)
    u_fwd, u_rev = _excitation_numerators(p, phi)
    return contrast_ratio(abs(u_fwd)**2, abs(u_rev)**2)


def perfect_reflection_residual(p: TwoLevelParams, delta):
    """Vanishes exactly where the reflection probability reaches one."""
    phi = phase_accumulated(p.phi0, p.tau, delta)
    gamma, gamma_e, theta = p.gamma_wg, p.gamma_ext, p.theta
    return ((delta - 2 * gamma * np.sin(phi) * np.cos(theta))**2 +
            gamma_e**2 / 4 + 2 * gamma_e * gamma *
            (1 + np.cos(theta) * np.cos(phi)) +
            4 * gamma**2 * np.sin(phi)**2 * np.sin(theta)**2)


def perfect_reflection_detuning(p: TwoLevelParams):
    """Markovian detuning of total reflection, if the atom has one."""
    if p.gamma_ext != 0 or p.tau != 0:
        return None
    if abs(np.sin(p.phi0) * np.sin(p.theta)) > 1e-12:
        return None
    return 2 * p.gamma_wg * np.sin(p.phi0) * np.cos(p.theta)


def optimal_blocking_gamma(delta, gamma_wg):
    if not gamma_wg > 0:
        raise ParameterError(f"'gamma_wg' must be > 0 (got {gamma_wg})")
    return 2 * np.sqrt(delta**2 + 4 * gamma_wg**2)


def transparency(p: TwoLevelParams, delta):
    """(forward, backward) flags: the photon passes without exciting the
    atom."""
    phi = phase_accumulated(p.phi0, p.tau, delta)
    forward = abs(1 + np.cos(phi - p.theta)) < 1e-12
    backward = abs(1 + np.cos(phi + p.theta)) < 1e-12
    return forward, backward


def markovian_ratio(p: TwoLevelParams):
    """Travel time over atomic lifetime; small values mean Markovian."""
    return p.tau * (2 * p.gamma_wg + p.gamma_ext / 2)


def _denominator(p, delta, phi):
    return (delta + 0.5j * p.gamma_ext + 2j * p.gamma_wg *
            (1 + np.exp(1j * phi) * np.cos(p.theta)))


def _transmission_numerators(p, delta, phi):
    common = delta + 0.5j * p.gamma_ext
    swing = 2 * p.gamma_wg * np.sin(phi)
    return (common - swing * np.exp(1j * p.theta),
            common - swing * np.exp(-1j * p.theta))


def _excitation_numerators(p, phi):
    g = p.coupling
    return (g * (np.exp(-1j * p.theta1) +
                 np.exp(-1j * p.theta2) * np.exp(1j * phi)),
            g * (np.exp(-1j * p.theta2) +
                 np.exp(-1j * p.theta1) * np.exp(1j * phi)))


def _reflection(t, numerator, factor):
    """(t - 1)·numerator/factor; NaN where the factor vanishes."""
    with np.errstate(divide="ignore", invalid="ignore"):
        r = (t - 1) * numerator / factor
    return np.where(abs(factor) < SINGULAR_FACTOR, np.nan, r)


def _delegate(r, p, delta, incidence, delegated, name):
    missing = np.flatnonzero(np.isnan(r))
    if not missing.size:
        return r
    delegated.append(name)
    if not np.ndim(r):
        return _solver_reflection(p, delta, incidence)

    r = np.array(r, dtype=complex)
    deltas = np.broadcast_to(delta, r.shape)
    for i in missing:
        r[i] = _solver_reflection(point_params(p, i), float(deltas[i]),
                                  incidence)
    return r


def _value(x):
    return complex(x) if not np.ndim(x) else np.asarray(x, dtype=complex)


def _solver_reflection(p, delta, incidence):
    from solver.scattering import solve_scattering

    solution = solve_scattering(two_level_to_model(p), delta, incidence)
    return solution.amplitude(incidence)
