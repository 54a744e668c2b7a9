import math

from model.constant import DELTA, NABLA, TWO_LEVEL
from model.exceptions import ParameterError
from model.params import DeltaParams, NablaParams, TwoLevelParams
from sweep.spec import Axis, SweepSpec

PI = math.pi
TWO_PI = 2 * math.pi

# Detuning axis shared by every spectrum, in units of the emission rate.
DETUNING = Axis("delta", -10.0, 10.0, 1001)
PHASE_MAP = Axis("theta", 0.0, TWO_PI, 201)
PHASE_LINE = Axis("theta", 0.0, TWO_PI, 1001)

# Propagation time between coupling points used by the two-level panels.
TAU_MARKOVIAN = 0.01

FIG_6_7 = NablaParams(gamma1_wg=1.0,
                      gamma2_wg=1.0,
                      rabi=5.0,
                      phi_a0=PI / 2)


def _two_level(gamma_ext=0.0, theta=PI / 2, phi0=PI / 2,
               tau=TAU_MARKOVIAN):
    return TwoLevelParams(gamma_ext=gamma_ext,
                          theta2=theta,
                          phi0=phi0,
                          tau=tau)


def _fig8(rabi, theta_prime):
    return NablaParams(rabi=rabi,
                       theta2=PI / 2,
                       theta4=theta_prime,
                       phi_a0=PI / 2,
                       phi_b0=PI / 2)


def _row(source):
    return tuple(f"S_{source}to{j}" for j in range(1, 5))


def _build_presets():
    presets = {}

    for panel, gamma_ext, obs in (("a", 0.0, "T_1to2"), ("b", 0.0, "T_2to1"),
                                  ("c", 10.0, "T_1to2"), ("d", 10.0,
                                                          "T_2to1")):
        presets[f"fig2{panel}"] = SweepSpec(TWO_LEVEL,
                                            _two_level(gamma_ext),
                                            DETUNING, (obs, ),
                                            axis2=PHASE_MAP)

    for panel, gamma_ext in (("a", 0.0), ("b", 4.0), ("c", 20.0)):
        presets[f"fig3{panel}"] = SweepSpec(
            TWO_LEVEL,
            _two_level(gamma_ext),
            DETUNING, ("T_1to2", "T_2to1"),
            axis2=Axis.of_values("theta", (PI / 2, PI)))

    presets["fig3d"] = SweepSpec(TWO_LEVEL,
                                 _two_level(),
                                 PHASE_LINE, ("I", "D"),
                                 axis2=Axis.of_values("gamma_ext",
                                                      (0.0, 4.0, 20.0)))
    presets["fig3e"] = SweepSpec(TWO_LEVEL,
                                 _two_level(),
                                 Axis("theta", 0.0, TWO_PI, 1001), ("D", ),
                                 axis2=Axis("phi0", 0.0, TWO_PI, 201))

    presets["fig4"] = SweepSpec(TWO_LEVEL,
                                _two_level(),
                                DETUNING, ("R", ),
                                axis2=Axis.of_values("tau", (0.0, 1.0)))
    presets["fig4inset"] = SweepSpec(TWO_LEVEL,
                                     _two_level(phi0=PI, tau=1.0),
                                     DETUNING, ("R", ))

    for panel, obs in zip("abcd", ("S_1to2", "S_2to1", "S_1to4", "S_4to1")):
        presets[f"fig6{panel}"] = SweepSpec(NABLA,
                                            FIG_6_7,
                                            DETUNING, (obs, ),
                                            axis2=PHASE_MAP)

    presets["fig7a"] = SweepSpec(NABLA, FIG_6_7, PHASE_LINE, ("C", ))
    for panel, theta in (("b", PI / 2), ("c", 3 * PI / 2)):
        presets[f"fig7{panel}"] = SweepSpec(NABLA,
                                            FIG_6_7.replace(theta=theta),
                                            DETUNING, ("S_1to4", "S_2to3"))

    presets["fig8a"] = SweepSpec(NABLA, _fig8(0.0, PI / 2), DETUNING,
                                 _row(1))
    presets["fig8b"] = SweepSpec(NABLA, _fig8(2.0, PI / 2), DETUNING,
                                 _row(1))
    presets["fig8c"] = SweepSpec(NABLA, _fig8(2.0, 3 * PI / 2), DETUNING,
                                 _row(1))
    presets["fig8d"] = SweepSpec(NABLA, _fig8(2.0, 3 * PI / 2), DETUNING,
                                 sum((_row(i) for i in range(1, 5)), ()))

    presets["fig9"] = SweepSpec(DELTA,
                                DeltaParams(drive=30.0,
                                            beta=PI / 2,
                                            theta2=PI / 2,
                                            theta4=PI / 2,
                                            phi_a0=PI / 2,
                                            phi_b0=PI / 2),
                                DETUNING,
                                ("S_1to2", "S_2to1", "S_1to4", "S_4to1"),
                                axis2=Axis.of_values("beta",
                                                     (0.0, PI / 2, PI)))
    return presets


PRESETS = _build_presets()
PRESET_IDS = tuple(PRESETS)


def figure_preset(id) -> SweepSpec:
    if id not in PRESETS:
        raise ParameterError(f"Unknown figure preset: '{id}'")
    return PRESETS[id]
