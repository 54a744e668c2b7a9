import math

import numpy as np
import pytest

from model import NablaParams, TwoLevelParams
from model.exceptions import ParameterError
from sweep import Axis, SweepSpec, SweepTable


def test_parse_axis():
    axis = Axis.parse("delta", "-1:1:5")
    np.testing.assert_allclose(axis.points(), [-1, -0.5, 0, 0.5, 1])
    assert axis.size == 5


@pytest.mark.parametrize("text", ["1:2", "a:b:c", "0:1:2:3", ""])
def test_parse_axis_rejects_malformed_text(text):
    with pytest.raises(ParameterError):
        Axis.parse("delta", text)


@pytest.mark.parametrize("axis", [
    Axis("delta", 0.0, 1.0, 1),
    Axis("delta", 1.0, 0.0, 5),
    Axis("delta", 0.0, 1.0, 0),
    Axis("delta", values=()),
])
def test_invalid_axes(axis):
    with pytest.raises(ParameterError):
        axis.validate()


def test_one_point_axis():
    axis = Axis("delta", 2.0, 2.0, 1).validate()
    np.testing.assert_allclose(axis.points(), [2.0])


def test_values_axis_and_scaling():
    axis = Axis.of_values("theta", (90, 180))
    assert (axis.minimum, axis.maximum, axis.size) == (90, 180, 2)
    np.testing.assert_allclose(
        axis.scaled(math.pi / 180).points(), [math.pi / 2, math.pi])


def _spec(**kwargs):
    values = dict(model_kind="two-level",
                  base_params=TwoLevelParams(),
                  axis1=Axis("delta", -1, 1, 3),
                  observables=("T_1to2", ))
    values.update(kwargs)
    return SweepSpec(**values)


def test_valid_spec():
    spec = _spec(axis2=Axis("theta", 0, 1, 4)).validate()
    assert spec.shape == (3, 4)


@pytest.mark.parametrize("kwargs", [
    dict(base_params=NablaParams()),
    dict(engine="fastest"),
    dict(axis1=Axis("rabi", 0, 1, 3)),
    dict(axis2=Axis("delta", 0, 1, 3)),
    dict(observables=()),
    dict(observables=("S_1to4", )),
    dict(observables=("C", )),
])
def test_invalid_specs(kwargs):
    with pytest.raises(ParameterError):
        _spec(**kwargs).validate()


def test_csv_format(tmp_path):
    table = SweepTable(columns=["delta", "C"],
                       rows=np.array([[0.1, 1 / 3], [0.2, np.nan]]))
    path = tmp_path / "table.csv"
    table.to_csv(path)
    assert path.read_bytes() == b"delta,C\n0.1,0.333333333333\n0.2,\n"
