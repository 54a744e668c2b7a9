from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

import numpy as np
import pandas as pd

from model.exceptions import ParameterError
from model.params import axis_names, params_class

ENGINES = ("auto", "closed-form", "solver")


@dataclass(frozen=True)
class Axis:
    name: str
    minimum: float = 0.0
    maximum: float = 0.0
    count: int = 1
    values: Optional[Tuple[float, ...]] = None

    @classmethod
    def parse(cls, name, text):
        """Builds an axis from 'min:max:count'."""
        try:
            lo, hi, n = str(text).split(":")
            return cls(name, float(lo), float(hi), int(n))
        except ValueError as e:
            raise ParameterError(
                f"Axis '{name}' must look like min:max:count "
                f"(got '{text}')") from e

    @classmethod
    def of_values(cls, name, values):
        values = tuple(float(v) for v in values)
        return cls(name, min(values), max(values), len(values), values)

    @property
    def size(self):
        return len(self.values) if self.values is not None else self.count

    def points(self):
        if self.values is not None:
            return np.asarray(self.values, dtype=float)
        return np.linspace(self.minimum, self.maximum, self.count)

    def validate(self):
        if self.values is not None:
            if not self.values:
                raise ParameterError(f"Axis '{self.name}' has no values")
        elif self.count == 1:
            if self.minimum != self.maximum:
                raise ParameterError(
                    f"Axis '{self.name}' with one point needs min == max")
        elif self.count < 2 or not self.minimum < self.maximum:
            raise ParameterError(
                f"Axis '{self.name}' needs count >= 2 and min < max")
        return self

    def scaled(self, factor):
        values = None if self.values is None else \
            tuple(v * factor for v in self.values)
        return Axis(self.name, self.minimum * factor, self.maximum * factor,
                    self.count, values)


@dataclass(frozen=True)
class SweepSpec:
    model_kind: str
    base_params: Any
    axis1: Axis
    observables: Tuple[str, ...]
    axis2: Optional[Axis] = None
    # Detuning used when no axis sweeps it.
    delta: float = 0.0
    engine: str = "auto"

    @property
    def axes(self):
        return [a for a in (self.axis1, self.axis2) if a is not None]

    @property
    def shape(self):
        return tuple(a.size for a in self.axes)

    def validate(self):
        from sweep.observable import observable_names

        if not isinstance(self.base_params, params_class(self.model_kind)):
            raise ParameterError(
                f"Parameters do not match model kind '{self.model_kind}'")
        if self.engine not in ENGINES:
            raise ParameterError(f"Unknown engine: '{self.engine}'")

        known = axis_names(self.model_kind)
        for axis in self.axes:
            if axis.name not in known:
                raise ParameterError(
                    f"Unknown axis parameter for '{self.model_kind}': "
                    f"'{axis.name}'")
            axis.validate()
        if self.axis2 is not None and self.axis2.name == self.axis1.name:
            raise ParameterError("Both axes sweep the same parameter")

        if not self.observables:
            raise ParameterError("No observables requested")
        available = observable_names(self.model_kind)
        for name in self.observables:
            if name not in available:
                raise ParameterError(
                    f"Unknown observable for '{self.model_kind}': '{name}'")
        return self


@dataclass
class SweepTable:
    columns: List[str]
    # Undefined values (e.g. contrasts of two zeros) are NaN.
    rows: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.rows)

    def column(self, name):
        return self.rows[:, self.columns.index(name)]

    def to_frame(self):
        return pd.DataFrame(self.rows, columns=self.columns)

    def to_csv(self, path):
        self.to_frame().to_csv(path,
                               index=False,
                               float_format="%.12g",
                               na_rep="",
                               lineterminator="\n")
