import dataclasses
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
from commons.log import log
from scipy.linalg import lu_factor, lu_solve

from model.exceptions import SingularSystemError
from model.scatter_model import ScatterModel
from solver.linear_system import LinearSystem, build_system

MAX_CONDITION = 1e12
MAX_RESIDUAL = 1e-12


@dataclass(frozen=True)
class ScatterSolution:
    incidence: int
    delta: float
    # Per port (index 0 is port 1): the outgoing photon's amplitude for each
    # channel level of its waveguide, entry level first.
    components: Tuple[np.ndarray, ...]
    segments: Dict[str, complex]
    atomic: Dict[str, complex]

    @property
    def outgoing(self):
        """Amplitude leaving through each port with the atom back in the
        port's entry level."""
        return np.array([c[0] for c in self.components], dtype=complex)

    def amplitude(self, port):
        return self.outgoing[port - 1]

    def probabilities(self):
        return np.array([np.sum(np.abs(c)**2) for c in self.components])


@dataclass(frozen=True)
class SMatrix:
    n_ports: int
    probabilities: np.ndarray
    delta: float = 0.0

    def entry(self, source, target):
        """S_{source -> target}."""
        return float(self.probabilities[source - 1, target - 1])

    def row(self, source):
        return self.probabilities[source - 1]


def solve_system(system: LinearSystem) -> np.ndarray:
    matrix, rhs = system.matrix, system.rhs
    if system.size == 0:
        return np.zeros(0, dtype=complex)

    condition = np.linalg.cond(matrix)
    if not np.isfinite(condition) or condition > MAX_CONDITION:
        log(f"WARNING: Rejected system at delta={system.delta} "
            f"(condition {condition:.3g})")
        raise SingularSystemError(system.delta, system.incidence, condition)

    x = lu_solve(lu_factor(matrix), rhs)

    scale = (np.linalg.norm(matrix, np.inf) * np.linalg.norm(x, np.inf) +
             np.linalg.norm(rhs, np.inf))
    residual = np.linalg.norm(matrix @ x - rhs, np.inf)
    if scale and residual / scale > MAX_RESIDUAL:
        raise SingularSystemError(system.delta, system.incidence, condition)
    return x


def solve_scattering(model: ScatterModel, delta,
                     incidence=1) -> ScatterSolution:
    system = build_system(model, delta, incidence)
    x = solve_system(system)
    incident_guide, side = model.port_waveguide(incidence)

    def value(index, fixed):
        return fixed if index is None else x[index]

    components = []
    for w, guide in enumerate(system.guides):
        n = guide.n_points
        left = np.zeros(len(guide.companions), dtype=complex)
        right = np.zeros(len(guide.companions), dtype=complex)
        if n == 0:
            # Nothing scatters: the photon keeps going.
            if w == incident_guide:
                (right if side == "left" else left)[0] = 1
        else:
            o = guide.frame_origin
            left = guide.mixing @ np.array([
                value(m.left(0), m.incoming_left) / m.phases[o]
                for m in guide.modes
            ])
            right = guide.mixing @ np.array([
                value(m.right(n), m.incoming_right) * m.phases[o]
                for m in guide.modes
            ])
        components += [left, right]

    n_fields = len(system.unknown_labels) - len(system.atomic_index)
    segments = dict(zip(system.unknown_labels[:n_fields], x[:n_fields]))
    atomic = {lv.name: 0j for lv in
              (model.levels[i] for i in model.amplitude_levels)}
    for level, index in system.atomic_index.items():
        atomic[model.levels[level].name] = x[index]

    return ScatterSolution(incidence=incidence,
                           delta=delta,
                           components=tuple(components),
                           segments=segments,
                           atomic=atomic)


def s_matrix(model: ScatterModel, delta) -> SMatrix:
    rows = [
        solve_scattering(model, delta, port).probabilities()
        for port in range(1, model.n_ports + 1)
    ]
    return SMatrix(n_ports=model.n_ports,
                   probabilities=np.vstack(rows),
                   delta=delta)


def small_atom_limit(model: ScatterModel) -> ScatterModel:
    """Collapses every waveguide's coupling points onto one position."""
    couplings = tuple(
        dataclasses.replace(cp, phase_offset=0.0, delay=0.0)
        for cp in model.couplings)
    return dataclasses.replace(model, couplings=couplings)
