import dataclasses
import math
from datetime import datetime

from commons.util import create_if_missing, normpath

from model.constant import TWO_LEVEL
from model.exceptions import ParameterError
from model.params import field_names, params_from_dict
from sweep import Axis, figure_preset

DEGREE = math.pi / 180

ANGLE_NAMES = ("theta1", "theta2", "theta3", "theta4", "theta",
               "theta_prime", "phi0", "phi_a0", "phi_b0", "alpha", "beta")

PARAM_DESTS = ("gamma_wg", "gamma_e", "phi0", "tau", "theta1", "theta2",
               "theta3", "theta4", "theta", "theta_prime", "gamma1_wg",
               "gamma2_wg", "gamma_e1", "gamma_e2", "gamma_g2", "rabi",
               "alpha", "drive", "beta", "omega_g2", "phi_a0", "phi_b0",
               "tau_a", "tau_b")


def format_dir(dir, **kwargs):
    params = {
        "datetime": datetime.now(),
        **kwargs,
    }
    return normpath(dir.format(**params)) if dir is not None else '.'


def output_path(workdir, out, default_name):
    create_if_missing(workdir)
    return normpath(f"{workdir}/{out or default_name}")


def angle_factor(deg=False, **kwargs):
    return DEGREE if deg else 1.0


def param_values(model, deg=False, **kwargs):
    """Parameter flags that were given, named as the model kind names
    them."""
    factor = angle_factor(deg)
    values = {}
    for dest in PARAM_DESTS:
        value = kwargs.get(dest)
        if value is None:
            continue
        try:
            value = float(value)
        except (TypeError, ValueError) as e:
            raise ParameterError(f"'{dest}' must be a number: {e}") from e
        values[dest] = value * factor if dest in ANGLE_NAMES else value

    # Two-level atoms call the same rate gamma_ext.
    if model == TWO_LEVEL and "gamma_e" in values:
        values["gamma_ext"] = values.pop("gamma_e")
    return values


def build_params(model, **kwargs):
    return params_from_dict(model, param_values(model, **kwargs))


def build_device_params(model, preset=None, **kwargs):
    """Kind and parameters of a device run; flags override a preset."""
    if preset is None:
        return model, build_params(model, **kwargs)

    base = figure_preset(preset)
    values = param_values(base.model_kind, **kwargs)
    unknown = sorted(set(values) - set(field_names(base.model_kind)) -
                     {"theta", "theta_prime"})
    if unknown:
        raise ParameterError(f"Unknown parameters for '{base.model_kind}': "
                             f"{', '.join(unknown)}")
    return base.model_kind, base.base_params.replace(**values)


def parse_axis(text, name=None, deg=False):
    """Axis from 'min:max:count', or 'name:min:max:count' when `name` is
    not given."""
    if name is None:
        name, _, text = str(text).partition(":")
    axis = Axis.parse(name, text)
    return axis.scaled(DEGREE) if deg and name in ANGLE_NAMES else axis


def parse_names(value):
    if isinstance(value, (list, tuple)):
        return tuple(str(v).strip() for v in value)
    return tuple(v.strip() for v in str(value).split(",") if v.strip())


def parse_ports(value, sep=","):
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        items = value
    else:
        items = [v for v in str(value).replace(":", sep).split(sep) if v]
    try:
        return [int(v) for v in items]
    except ValueError as e:
        raise ParameterError(f"Ports must be integers: '{value}'") from e


def with_engine(spec, engine):
    return dataclasses.replace(spec, engine=engine)
