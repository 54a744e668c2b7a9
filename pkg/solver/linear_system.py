from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from model.exceptions import SingularSystemError
from model.scatter_model import Coupling, ScatterModel

MAX_MIXING_CONDITION = 1e12


@dataclass
class ModeLayout:
    """Where one mode's right (R_1..R_n) and left (L_0..L_{n-1}) movers
    live in the unknown vector; `phases` holds e^{i·phi_j}."""
    offset: int
    phases: np.ndarray
    energy: complex = 0j
    incoming_right: complex = 0j
    incoming_left: complex = 0j

    @property
    def n_points(self):
        return len(self.phases)

    def right(self, k):
        """Unknown index of R_k, or None when it is fixed by the incidence."""
        return None if k == 0 else self.offset + k - 1

    def left(self, k):
        return None if k == self.n_points else self.offset + self.n_points + k


@dataclass
class GuideLayout:
    """Modes of one waveguide.

    Column m of `mixing` holds the companion-level components of mode m;
    a single undriven channel gives the 1x1 identity.
    """
    name: str
    companions: List[int]
    points: List[Coupling]
    energies: np.ndarray
    mixing: np.ndarray
    unmixing: np.ndarray
    modes: List[ModeLayout] = field(default_factory=list)
    frame_origin: int = 0

    @property
    def n_points(self):
        return len(self.points)

    def emission(self, m, cp):
        c = self.companions.index(cp.lower)
        return cp.strength * np.exp(1j * cp.theta) * self.unmixing[m, c]

    def absorption(self, m, cp):
        c = self.companions.index(cp.lower)
        return cp.strength * np.exp(-1j * cp.theta) * self.mixing[c, m]


@dataclass
class LinearSystem:
    matrix: np.ndarray
    rhs: np.ndarray
    unknown_labels: List[str]
    incidence: int
    delta: float
    guides: List[GuideLayout] = field(repr=False, default_factory=list)
    atomic_index: Dict[int, int] = field(repr=False, default_factory=dict)

    @property
    def size(self):
        return len(self.unknown_labels)


def build_system(model: ScatterModel, delta, incidence) -> LinearSystem:
    """Boundary-matching equations of `model` at detuning `delta` for a
    photon entering through port `incidence`.

    Each coupling point contributes a jump condition for the right movers
    and one for the left movers of every mode; each active excited level
    contributes its Schrodinger equation. The field at a point is the mean
    of its one-sided limits.
    """
    incident_guide, side = model.port_waveguide(incidence)

    # Unknown layout:
    labels, guides = [], []
    for w, name in enumerate(model.waveguides):
        guide = _guide_layout(model, name, delta, incidence)
        n = guide.n_points
        # The atom sits in the entry channel's level at the first point hit.
        entry = guide.unmixing[:, 0]

        for m, energy in enumerate(guide.energies):
            phases = np.array(
                [np.exp(1j * cp.phase(delta, energy)) for cp in guide.points],
                dtype=complex)
            mode = ModeLayout(offset=len(labels), phases=phases,
                              energy=energy)
            tag = name if len(guide.companions) == 1 else f"{name}.{m}"
            labels += [f"{tag}:R{j}" for j in range(1, n + 1)]
            labels += [f"{tag}:L{j}" for j in range(n)]

            if w == incident_guide and n > 0:
                if side == "left":
                    mode.incoming_right = entry[m] / phases[0]
                else:
                    mode.incoming_left = entry[m] * phases[-1]
            guide.modes.append(mode)

        if w == incident_guide and side == "right" and n > 0:
            guide.frame_origin = n - 1
        guides.append(guide)

    active = _active_levels(model)
    atomic_index = {}
    for level in active:
        atomic_index[level] = len(labels)
        labels.append(f"u_{model.levels[level].name}")

    system = _Assembler(len(labels))
    row = 0

    # Jump conditions:
    for guide in guides:
        for j, cp in enumerate(guide.points):
            u = atomic_index.get(cp.upper)
            for m, mode in enumerate(guide.modes):
                p = mode.phases[j]
                system.add_right(row, mode, j + 1, -1j * p)
                system.add_right(row, mode, j, 1j * p)
                system.add_left(row + 1, mode, j, -1j / p)
                system.add_left(row + 1, mode, j + 1, 1j / p)

                if u is not None and cp.strength:
                    source = guide.emission(m, cp)
                    system.matrix[row, u] += source
                    system.matrix[row + 1, u] += source
                row += 2

    # Atomic equations:
    for level in active:
        u = atomic_index[level]
        system.matrix[row, u] += delta - model.levels[level].energy

        for guide in guides:
            for j, cp in enumerate(guide.points):
                if cp.upper != level or not cp.strength:
                    continue
                for m, mode in enumerate(guide.modes):
                    system.add_field(row, mode, j,
                                     -guide.absorption(m, cp))

        for d in model.drives:
            a, b = d.levels
            if a == level and b in atomic_index:
                system.matrix[row, atomic_index[b]] -= \
                    d.amplitude * np.exp(1j * d.phase)
            elif b == level and a in atomic_index:
                system.matrix[row, atomic_index[a]] -= \
                    d.amplitude * np.exp(-1j * d.phase)
        row += 1

    assert row == len(labels), "Equation count must match unknown count"
    return LinearSystem(matrix=system.matrix,
                        rhs=system.rhs,
                        unknown_labels=labels,
                        incidence=incidence,
                        delta=delta,
                        guides=guides,
                        atomic_index=atomic_index)


def _guide_layout(model, name, delta, incidence) -> GuideLayout:
    """Diagonalizes the ground-state Hamiltonian seen by `name`'s photons.

    Without a drive between companions the modes are the channels
    themselves. A drive mixes them, so each mode travels with its own wave
    vector while the atom keeps rotating between its ground states.
    """
    channels = model.channels_of(name)
    companions = [c.companion for c in channels]
    h = model.ground_hamiltonian(name)
    off_diagonal = h - np.diag(np.diag(h))

    if not off_diagonal.any():
        energies = np.diag(h)
        mixing = np.eye(len(channels), dtype=complex)
        unmixing = mixing
    elif np.allclose(h, h.conj().T):
        energies, mixing = np.linalg.eigh(h)
        unmixing = mixing.conj().T
    else:
        energies, mixing = np.linalg.eig(h)
        condition = np.linalg.cond(mixing)
        if not np.isfinite(condition) or condition > MAX_MIXING_CONDITION:
            # Exceptional point of the lossy ground-state doublet.
            raise SingularSystemError(delta, incidence, condition)
        unmixing = np.linalg.inv(mixing)

    return GuideLayout(name=name,
                       companions=companions,
                       points=model.couplings_on(name),
                       energies=np.asarray(energies, dtype=complex),
                       mixing=mixing,
                       unmixing=unmixing)


class _Assembler:
    def __init__(self, size):
        self.matrix = np.zeros((size, size), dtype=complex)
        self.rhs = np.zeros(size, dtype=complex)

    def add_right(self, row, mode, j, coefficient):
        self.__add(row, mode.right(j), coefficient, mode.incoming_right)

    def add_left(self, row, mode, j, coefficient):
        self.__add(row, mode.left(j), coefficient, mode.incoming_left)

    def add_field(self, row, mode, j, coefficient):
        # Mean of the one-sided limits at point j.
        p = mode.phases[j]
        for i in (j, j + 1):
            self.add_right(row, mode, i, coefficient * p / 2)
            self.add_left(row, mode, i, coefficient / (2 * p))

    def __add(self, row, index, coefficient, fixed):
        if index is None:
            self.rhs[row] -= coefficient * fixed
        else:
            self.matrix[row, index] += coefficient


def _active_levels(model) -> List[int]:
    """Excited levels reachable from a waveguide; the others stay empty."""
    candidates = set(model.amplitude_levels)
    active = {cp.upper for cp in model.couplings if cp.strength}
    links = [
        tuple(d.levels) for d in model.drives
        if d.amplitude and set(d.levels) <= candidates
    ]

    grown = True
    while grown:
        grown = False
        for (a, b) in links:
            if (a in active) != (b in active):
                active |= {a, b}
                grown = True
    return sorted(active & candidates)
