import math

from model.constant import DELTA, NABLA, TWO_LEVEL, WAVEGUIDE_A, WAVEGUIDE_B
from model.exceptions import ParameterError
from model.params import DeltaParams, NablaParams, TwoLevelParams
from model.scatter_model import Channel, Coupling, Drive, Level, ScatterModel


def two_level_to_model(p: TwoLevelParams) -> ScatterModel:
    _check_type(p, TwoLevelParams)
    g = math.sqrt(p.gamma_wg)
    levels = (Level("g"), Level("e", complex(0, -p.gamma_ext / 2)))
    channels = (Channel(WAVEGUIDE_A, 0), )
    couplings = (
        Coupling(WAVEGUIDE_A, (0, 1), g, p.theta1, 0.0, 0.0),
        Coupling(WAVEGUIDE_A, (0, 1), g, p.theta2, p.phi0, p.tau),
    )
    return ScatterModel(levels, channels, couplings,
                        label=TWO_LEVEL).validate()


def nabla_to_model(p: NablaParams) -> ScatterModel:
    _check_type(p, NablaParams)
    g1, g2 = math.sqrt(p.gamma1_wg), math.sqrt(p.gamma2_wg)
    levels = (
        Level("g"),
        Level("e1", complex(0, -p.gamma_e1 / 2)),
        Level("e2", complex(0, -p.gamma_e2 / 2)),
    )
    channels = (Channel(WAVEGUIDE_A, 0), Channel(WAVEGUIDE_B, 0))

    couplings = [
        Coupling(WAVEGUIDE_A, (0, 1), g1, p.theta1, 0.0, 0.0),
        Coupling(WAVEGUIDE_A, (0, 1), g1, p.theta2, p.phi_a0, p.tau_a),
        Coupling(WAVEGUIDE_B, (0, 2), g2, p.theta3, 0.0, 0.0),
    ]
    if not p.single_point_b:
        couplings.append(
            Coupling(WAVEGUIDE_B, (0, 2), g2, p.theta4, p.phi_b0, p.tau_b))

    drives = (Drive((1, 2), p.rabi, p.alpha), )
    return ScatterModel(levels, channels, tuple(couplings), drives,
                        label=NABLA).validate()


def delta_to_model(p: DeltaParams) -> ScatterModel:
    _check_type(p, DeltaParams)
    g1, g2 = math.sqrt(p.gamma1_wg), math.sqrt(p.gamma2_wg)
    g2_energy = complex(p.omega_g2, -p.gamma_g2 / 2)
    levels = (
        Level("g1"),
        Level("g2", g2_energy),
        Level("e", complex(0, -p.gamma_e / 2)),
    )
    # Photons enter W_a with the atom in |g1> and W_b with it in |g2>; the
    # drive can flip the atom while the photon travels, so both waveguides
    # carry both ground levels.
    channels = (
        Channel(WAVEGUIDE_A, 0),
        Channel(WAVEGUIDE_B, 1, g2_energy),
        Channel(WAVEGUIDE_A, 1, g2_energy),
        Channel(WAVEGUIDE_B, 0),
    )
    couplings = (
        Coupling(WAVEGUIDE_A, (0, 2), g1, p.theta1, 0.0, 0.0),
        Coupling(WAVEGUIDE_A, (0, 2), g1, p.theta2, p.phi_a0, p.tau_a),
        Coupling(WAVEGUIDE_B, (1, 2), g2, p.theta3, 0.0, 0.0),
        Coupling(WAVEGUIDE_B, (1, 2), g2, p.theta4, p.phi_b0, p.tau_b),
    )
    drives = (Drive((0, 1), p.drive, p.beta), )
    return ScatterModel(levels, channels, couplings, drives,
                        label=DELTA).validate()


class ModelBuilder():
    def build(self, kind, params):
        BUILDER_FN = {
            TWO_LEVEL: two_level_to_model,
            NABLA: nabla_to_model,
            DELTA: delta_to_model,
        }
        if kind not in BUILDER_FN:
            raise ParameterError(f"Unknown model kind: '{kind}'")
        return BUILDER_FN[kind](params)


def _check_type(params, expected):
    if not isinstance(params, expected):
        raise ParameterError(
            f"Expected {expected.__name__}, got {type(params).__name__}")
