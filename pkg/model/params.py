import dataclasses
from dataclasses import dataclass

import numpy as np

from model.exceptions import ParameterError


@dataclass(frozen=True)
class TwoLevelParams:
    """Two-level giant atom with two coupling points on one waveguide.

    Rates are in units of the waveguide emission rate `gamma_wg`, detunings
    are measured from the atomic transition and `tau` is the travel time
    between the coupling points.
    """
    gamma_wg: float = 1.0
    gamma_ext: float = 0.0
    theta1: float = 0.0
    theta2: float = 0.0
    phi0: float = 0.0
    tau: float = 0.0

    ANGLES = ("theta1", "theta2", "phi0")

    def __post_init__(self):
        _check_positive(self, "gamma_wg")
        _check_non_negative(self, "gamma_ext", "tau")

    @property
    def theta(self):
        return self.theta2 - self.theta1

    @property
    def coupling(self):
        return np.sqrt(self.gamma_wg)

    def exchanged(self):
        """Same atom seen by a photon coming from the right."""
        return dataclasses.replace(self,
                                   theta1=self.theta2,
                                   theta2=self.theta1)

    def replace(self, **overrides):
        return _replace(self, overrides, theta=("theta1", "theta2"))


@dataclass(frozen=True)
class NablaParams:
    """Nabla-type atom: |g> <-> |e1> on W_a, |g> <-> |e2> on W_b, with the
    excited states coupled by a classical field `rabi`·e^{i·alpha}."""
    gamma1_wg: float = 1.0
    gamma2_wg: float = 1.0
    gamma_e1: float = 0.0
    gamma_e2: float = 0.0
    rabi: float = 0.0
    alpha: float = 0.0
    theta1: float = 0.0
    theta2: float = 0.0
    theta3: float = 0.0
    theta4: float = 0.0
    phi_a0: float = 0.0
    phi_b0: float = 0.0
    tau_a: float = 0.0
    tau_b: float = 0.0

    ANGLES = ("alpha", "theta1", "theta2", "theta3", "theta4", "phi_a0",
              "phi_b0")

    def __post_init__(self):
        _check_positive(self, "gamma1_wg")
        _check_non_negative(self, "gamma2_wg", "gamma_e1", "gamma_e2",
                            "tau_a", "tau_b")

    @property
    def theta(self):
        return self.theta2 - self.theta1

    @property
    def theta_prime(self):
        return self.theta4 - self.theta3

    @property
    def single_point_b(self):
        return bool(
            np.all((self.phi_b0 == 0) & (self.tau_b == 0)
                   & (self.theta3 == self.theta4)))

    def replace(self, **overrides):
        return _replace(self,
                        overrides,
                        theta=("theta1", "theta2"),
                        theta_prime=("theta3", "theta4"))


@dataclass(frozen=True)
class DeltaParams:
    """Delta-type atom: |g1> <-> |e> on W_a, |g2> <-> |e> on W_b, with the
    ground states coupled by a classical field `drive`·e^{i·beta}."""
    gamma1_wg: float = 1.0
    gamma2_wg: float = 1.0
    gamma_g2: float = 0.0
    gamma_e: float = 0.0
    drive: float = 0.0
    beta: float = 0.0
    theta1: float = 0.0
    theta2: float = 0.0
    theta3: float = 0.0
    theta4: float = 0.0
    phi_a0: float = 0.0
    phi_b0: float = 0.0
    tau_a: float = 0.0
    tau_b: float = 0.0
    omega_g2: float = 0.0

    ANGLES = ("beta", "theta1", "theta2", "theta3", "theta4", "phi_a0",
              "phi_b0")

    def __post_init__(self):
        _check_positive(self, "gamma1_wg")
        _check_non_negative(self, "gamma2_wg", "gamma_g2", "gamma_e",
                            "drive", "tau_a", "tau_b")

    @property
    def theta(self):
        return self.theta2 - self.theta1

    @property
    def theta_prime(self):
        return self.theta4 - self.theta3

    def replace(self, **overrides):
        return _replace(self,
                        overrides,
                        theta=("theta1", "theta2"),
                        theta_prime=("theta3", "theta4"))


PARAMS_BY_KIND = {
    "two-level": TwoLevelParams,
    "nabla": NablaParams,
    "delta": DeltaParams,
}


def params_class(kind):
    if kind not in PARAMS_BY_KIND:
        raise ParameterError(f"Unknown model kind: '{kind}'")
    return PARAMS_BY_KIND[kind]


def field_names(kind):
    return [f.name for f in dataclasses.fields(params_class(kind))]


def axis_names(kind):
    """Names a sweep axis may vary for `kind`."""
    derived = ["theta"] if kind == "two-level" else ["theta", "theta_prime"]
    return ["delta", *field_names(kind), *derived]


def params_from_dict(kind, mapping=None, **kwargs):
    values = {**(mapping or {}), **kwargs}
    names = field_names(kind)
    derived = {k: values.pop(k) for k in ("theta", "theta_prime")
               if k in values}

    unknown = sorted(set(values) - set(names))
    if unknown:
        raise ParameterError(
            f"Unknown parameters for '{kind}': {', '.join(unknown)}")

    try:
        values = {k: float(v) for (k, v) in values.items()}
    except (TypeError, ValueError) as e:
        raise ParameterError(f"Parameters must be numbers: {e}") from e

    params = params_class(kind)(**values)
    return params.replace(**derived) if derived else params


def point_params(params, index):
    """Scalar record for entry `index` of a record whose swept fields hold
    arrays."""
    values = {}
    for f in dataclasses.fields(params):
        value = getattr(params, f.name)
        if np.ndim(value):
            values[f.name] = float(value[index])
    return dataclasses.replace(params, **values) if values else params


def _replace(params, overrides, **derived):
    overrides = dict(overrides)

    # Derived phase differences keep the first phase of the pair.
    for name, (first, second) in derived.items():
        if name in overrides:
            start = overrides.get(first, getattr(params, first))
            overrides[second] = start + overrides.pop(name)

    unknown = sorted(set(overrides) -
                     {f.name for f in dataclasses.fields(params)})
    if unknown:
        raise ParameterError(f"Unknown parameters: {', '.join(unknown)}")
    return dataclasses.replace(params, **overrides)


def _check_positive(params, *names):
    for name in names:
        value = getattr(params, name)
        if not np.all(np.isfinite(value) & (np.asarray(value) > 0)):
            raise ParameterError(f"'{name}' must be > 0 (got {value})")


def _check_non_negative(params, *names):
    for name in names:
        value = getattr(params, name)
        if not np.all(np.isfinite(value) & (np.asarray(value) >= 0)):
            raise ParameterError(f"'{name}' must be >= 0 (got {value})")
