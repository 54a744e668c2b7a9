import math

import pytest

from model import Channel, Coupling, Drive, Level, ScatterModel
from model.exceptions import ModelError


def _model(**kwargs):
    values = dict(levels=(Level("g"), Level("e", -0.5j)),
                  channels=(Channel("a", 0), ),
                  couplings=(Coupling("a", (0, 1), 1.0),
                             Coupling("a", (0, 1), 1.0, 0.0, 1.0, 0.5)))
    values.update(kwargs)
    return ScatterModel(**values)


def test_valid_model():
    model = _model().validate()
    assert model.n_ports == 2
    assert model.amplitude_levels == [1]
    assert model.port_waveguide(1) == (0, "left")
    assert model.port_waveguide(2) == (0, "right")


def test_port_out_of_range():
    with pytest.raises(ModelError):
        _model().port_waveguide(3)


@pytest.mark.parametrize("couplings", [
    (Coupling("a", (1, 0), 1.0), ),
    (Coupling("a", (0, 0), 1.0), ),
    (Coupling("b", (0, 1), 1.0), ),
    (Coupling("a", (0, 1), -1.0), ),
    (Coupling("a", (0, 1), 1.0, 0.0, 1.0, 0.5), Coupling("a", (0, 1), 1.0)),
])
def test_invalid_couplings(couplings):
    with pytest.raises(ModelError):
        _model(couplings=couplings).validate()


def test_drive_must_join_levels_of_the_same_kind():
    with pytest.raises(ModelError):
        _model(drives=(Drive((0, 1), 1.0), )).validate()


def test_gain_is_rejected():
    with pytest.raises(ModelError, match="gain"):
        _model(levels=(Level("g"), Level("e", 0.5j))).validate()


def test_phase_uses_reference_energy():
    cp = Coupling("b", (1, 2), 1.0, 0.0, 0.5, 2.0)
    assert cp.phase(1.0) == pytest.approx(2.5)
    assert cp.phase(1.0, 0.25 - 0.5j) == pytest.approx(2.0 + 1.0j)


def test_ports_follow_waveguides():
    model = ScatterModel(
        (Level("g1"), Level("g2"), Level("e")),
        (Channel("a", 0), Channel("b", 1), Channel("a", 1), Channel("b", 0)),
        (Coupling("a", (0, 2), 1.0), Coupling("b", (1, 2), 1.0)),
        (Drive((0, 1), 2.0, 0.5), )).validate()
    assert model.waveguides == ("a", "b")
    assert model.n_ports == 4
    assert model.port_waveguide(4) == (1, "right")
    assert [c.companion for c in model.channels_of("b")] == [1, 0]


def test_ground_hamiltonian():
    model = ScatterModel((Level("g1"), Level("g2", 0.5 - 0.1j), Level("e")),
                         (Channel("a", 0), Channel("a", 1, 0.5 - 0.1j)),
                         drives=(Drive((0, 1), 2.0, 0.5), )).validate()
    h = model.ground_hamiltonian("a")
    assert h[0, 0] == 0
    assert h[1, 1] == 0.5 - 0.1j
    assert h[0, 1] == pytest.approx(2 * complex(math.cos(0.5),
                                                math.sin(0.5)))
    assert h[1, 0] == pytest.approx(h[0, 1].conjugate())


def test_ground_state_drive_needs_both_levels_on_each_waveguide():
    levels = (Level("g1"), Level("g2"), Level("e"))
    with pytest.raises(ModelError, match="both levels"):
        ScatterModel(levels, (Channel("a", 0), Channel("b", 1)),
                     (Coupling("a", (0, 2), 1.0), ),
                     (Drive((0, 1), 1.0), )).validate()


def test_repeated_channel_is_rejected():
    with pytest.raises(ModelError, match="twice"):
        _model(channels=(Channel("a", 0), Channel("a", 0))).validate()
