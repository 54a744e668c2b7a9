from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from model.exceptions import ModelError


@dataclass(frozen=True)
class Level:
    name: str
    # Real part: frequency offset; imaginary part: -gamma/2.
    energy: complex = 0j


@dataclass(frozen=True)
class Channel:
    """Photon propagating in `waveguide` while the atom sits in level
    `companion`; `reference_energy` is subtracted from the photon energy
    when computing propagation phases."""
    waveguide: str
    companion: int
    reference_energy: complex = 0j


@dataclass(frozen=True)
class Coupling:
    waveguide: str
    transition: Tuple[int, int]
    strength: float
    theta: float = 0.0
    phase_offset: float = 0.0
    delay: float = 0.0

    @property
    def lower(self):
        return self.transition[0]

    @property
    def upper(self):
        return self.transition[1]

    def phase(self, delta, reference_energy=0j):
        """Accumulated phase at this point; complex when the reference
        energy carries a decay rate."""
        return self.phase_offset + self.delay * (delta - reference_energy)


@dataclass(frozen=True)
class Drive:
    levels: Tuple[int, int]
    amplitude: float
    phase: float = 0.0



@dataclass(frozen=True)
class ScatterModel:
    """Levels, channels, coupling points and classical drives.

    Ports follow the waveguides in the order their first channel appears:
    ports 1 and 2 are the left and right ends of the first waveguide, 3 and
    4 those of the second. The first channel listed for a waveguide names
    the level the atom occupies when a photon enters through it.
    """
    levels: Tuple[Level, ...]
    channels: Tuple[Channel, ...]
    couplings: Tuple[Coupling, ...] = ()
    drives: Tuple[Drive, ...] = ()
    label: str = field(default="", compare=False)

    @property
    def waveguides(self):
        return tuple(dict.fromkeys(c.waveguide for c in self.channels))

    @property
    def n_ports(self):
        return 2 * len(self.waveguides)

    @property
    def companions(self):
        return {c.companion for c in self.channels}

    @property
    def amplitude_levels(self):
        """Indices of levels that carry an atomic amplitude."""
        companions = self.companions
        return [i for i in range(len(self.levels)) if i not in companions]

    def channels_of(self, waveguide):
        """Channels travelling in `waveguide`, entry channel first."""
        return [c for c in self.channels if c.waveguide == waveguide]

    def channel_index(self, waveguide, companion):
        for i, c in enumerate(self.channels):
            if c.waveguide == waveguide and c.companion == companion:
                return i
        raise ModelError(f"No channel for waveguide '{waveguide}' "
                         f"with companion level {companion}")

    def couplings_on(self, waveguide):
        """Coupling points of `waveguide`, in position order."""
        return [cp for cp in self.couplings if cp.waveguide == waveguide]

    def ground_hamiltonian(self, waveguide):
        """Companion energies of `waveguide`'s channels on the diagonal,
        drives between them off the diagonal."""
        companions = [c.companion for c in self.channels_of(waveguide)]
        position = {level: i for i, level in enumerate(companions)}
        h = np.diag([c.reference_energy
                     for c in self.channels_of(waveguide)]).astype(complex)
        for d in self.drives:
            a, b = d.levels
            if d.amplitude and a in position and b in position:
                h[position[a], position[b]] += d.amplitude * np.exp(
                    1j * d.phase)
                h[position[b], position[a]] += d.amplitude * np.exp(
                    -1j * d.phase)
        return h

    def port_waveguide(self, port):
        """(waveguide index, side) for a 1-based port; side is 'left' or
        'right'."""
        if not (isinstance(port, int) and 1 <= port <= self.n_ports):
            raise ModelError(
                f"Port {port} out of range 1..{self.n_ports}")
        return (port - 1) // 2, ("left" if port % 2 == 1 else "right")

    def validate(self):
        n = len(self.levels)
        companions = self.companions

        for i, c in enumerate(self.channels):
            if not 0 <= c.companion < n:
                raise ModelError(f"Channel companion {c.companion} unknown")
            if self.channel_index(c.waveguide, c.companion) != i:
                raise ModelError(
                    f"Waveguide '{c.waveguide}' lists level {c.companion} "
                    f"twice")

        for cp in self.couplings:
            lower, upper = cp.transition
            if not (0 <= lower < n and 0 <= upper < n) or lower == upper:
                raise ModelError(
                    f"Coupling transition {cp.transition} must join two "
                    f"distinct levels")
            if lower not in companions or upper in companions:
                raise ModelError(
                    f"Coupling transition {cp.transition} must go from a "
                    f"channel companion to an excited level")
            self.channel_index(cp.waveguide, lower)
            if cp.delay < 0 or cp.strength < 0:
                raise ModelError("Coupling strength and delay must be >= 0")

        for wg in self.waveguides:
            points = self.couplings_on(wg)
            for (a, b) in zip(points, points[1:]):
                if b.phase_offset < a.phase_offset or b.delay < a.delay:
                    raise ModelError(
                        f"Couplings on waveguide '{wg}' are not ordered")

        for d in self.drives:
            i, j = d.levels
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ModelError(f"Drive levels {d.levels} are invalid")
            if (i in companions) != (j in companions):
                raise ModelError(
                    f"Drive {d.levels} must join two excited levels or "
                    f"two channel companions")
            if i in companions:
                # The drive rotates the atom while the photon travels on.
                for wg in self.waveguides:
                    carried = {c.companion for c in self.channels_of(wg)}
                    if (i in carried) != (j in carried):
                        raise ModelError(
                            f"Drive {d.levels} needs both levels as "
                            f"channels of waveguide '{wg}'")

        for lv in self.levels:
            if lv.energy.imag > 0:
                raise ModelError(
                    f"Level '{lv.name}' has a gain (positive imaginary "
                    f"energy)")
        return self
