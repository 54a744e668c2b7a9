import dataclasses
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional

import numpy as np

from closed_form import (chirality_C, contrast_D, contrast_I, contrast_ratio,
                         effective_lamb_and_width, markovian_ratio,
                         nabla_amplitudes, perfect_reflection_residual,
                         two_level_amplitudes)
from metrics.device import conservation_deficit, port_contrast
from model.builder import ModelBuilder
from model.constant import DELTA, NABLA, TWO_LEVEL
from model.exceptions import (ParameterError, UndefinedContrastError,
                              UnsupportedConfigurationError)
from solver.scattering import s_matrix, solve_scattering

N_PORTS = {TWO_LEVEL: 2, NABLA: 4, DELTA: 4}

NABLA_CLOSED = {
    (1, 2): "s12",
    (2, 1): "s21",
    (1, 3): "s13",
    (1, 4): "s14",
    (2, 3): "s23",
    (2, 4): "s24",
    (4, 1): "s41",
}


class Evaluator:
    """Lazily computed amplitudes for one parameter point."""
    def __init__(self, kind, params, delta):
        self.kind = kind
        self.params = params
        self.delta = delta

    @cached_property
    def model(self):
        return ModelBuilder().build(self.kind, self.params)

    @cached_property
    def smatrix(self):
        return s_matrix(self.model, self.delta)

    @cached_property
    def two_level(self):
        return two_level_amplitudes(self.params, self.delta)

    @cached_property
    def nabla(self):
        return nabla_amplitudes(self.params, self.delta)

    @property
    def has_closed_form(self):
        if self.kind == TWO_LEVEL:
            return True
        return self.kind == NABLA and self.params.single_point_b

    def atomic_excitation(self, port):
        solution = solve_scattering(self.model, self.delta, port)
        return sum(abs(u)**2 for u in solution.atomic.values())


@dataclass(frozen=True)
class Observable:
    name: str
    kinds: tuple
    solver: Optional[Callable] = None
    closed: Optional[Callable] = None
    # Formula values that do not depend on the engine.
    analytic: Optional[Callable] = None

    def closed_available(self, ev):
        return self.closed is not None and ev.has_closed_form

    def evaluate(self, ev, engine="auto"):
        if self.analytic is not None:
            return self.analytic(ev)
        if engine == "solver":
            return self.solver(ev)
        if self.closed_available(ev):
            return self.closed(ev)
        if engine == "closed-form":
            raise UnsupportedConfigurationError(
                f"No closed form for '{self.name}' in this configuration")
        return self.solver(ev)


def _entry(i, j):
    return lambda ev: ev.smatrix.entry(i, j)


def _two_level_entry(i, j):
    names = {(1, 1): "r", (1, 2): "t", (2, 1): "t_rev", (2, 2): "r_rev"}
    return lambda ev: abs(getattr(ev.two_level, names[(i, j)]))**2


def _nabla_entry(name):
    return lambda ev: ev.nabla.probability(name)


def _closed_entry(kind, i, j):
    if kind == TWO_LEVEL:
        return _two_level_entry(i, j)
    if kind == NABLA and (i, j) in NABLA_CLOSED:
        return _nabla_entry(NABLA_CLOSED[(i, j)])
    return None


def _closed_deficit(port):
    def deficit(ev):
        a = ev.two_level
        if port == 1:
            return 1 - a.T_1to2 - a.R
        return 1 - a.T_2to1 - a.R_rev

    return deficit


def _solver_D(ev):
    return contrast_ratio(ev.atomic_excitation(1), ev.atomic_excitation(2))


def _solver_C(ev):
    return contrast_ratio(ev.smatrix.entry(2, 3), ev.smatrix.entry(1, 4))


def _deficit(port):
    return lambda ev: conservation_deficit(ev.smatrix, port)


ALIASES = {
    "T_1to2": "S_1to2",
    "T_2to1": "S_2to1",
    "R": "S_1to1",
    "R_rev": "S_2to2",
    "conservation_deficit": "deficit_1",
}


def _build_registry():
    table = {kind: {} for kind in N_PORTS}

    def add(observable):
        for kind in observable.kinds:
            table[kind][observable.name] = observable

    for kind, n in N_PORTS.items():
        for i in range(1, n + 1):
            add(Observable(
                f"deficit_{i}", (kind, ),
                solver=_deficit(i),
                closed=_closed_deficit(i) if kind == TWO_LEVEL else None))
            for j in range(1, n + 1):
                add(Observable(f"S_{i}to{j}", (kind, ),
                               solver=_entry(i, j),
                               closed=_closed_entry(kind, i, j)))
        for alias, target in ALIASES.items():
            add(dataclasses.replace(table[kind][target], name=alias))

    two_level = (TWO_LEVEL, )
    add(Observable("I",
                   two_level,
                   solver=lambda ev: port_contrast(ev.smatrix, 1, 2),
                   closed=lambda ev: contrast_I(ev.params, ev.delta)))
    add(Observable("D",
                   two_level,
                   solver=_solver_D,
                   closed=lambda ev: contrast_D(ev.params, ev.delta)))
    add(Observable("lamb_shift",
                   two_level,
                   analytic=lambda ev: effective_lamb_and_width(
                       ev.params, ev.delta)[0]))
    add(Observable("width",
                   two_level,
                   analytic=lambda ev: effective_lamb_and_width(
                       ev.params, ev.delta)[1]))
    add(Observable("reflection_residual",
                   two_level,
                   analytic=lambda ev: perfect_reflection_residual(
                       ev.params, ev.delta)))
    add(Observable("markovian_ratio",
                   two_level,
                   analytic=lambda ev: markovian_ratio(ev.params)))
    add(Observable("C", (NABLA, DELTA),
                   solver=_solver_C,
                   closed=lambda ev: chirality_C(ev.params, ev.delta)))
    return table


OBSERVABLES = _build_registry()


def observable_names(kind):
    if kind not in OBSERVABLES:
        raise ParameterError(f"Unknown model kind: '{kind}'")
    return list(OBSERVABLES[kind])


def evaluate(name, ev, engine="auto"):
    """Value of observable `name` at `ev`; NaN when a contrast is
    undefined."""
    try:
        return float(_lookup(name, ev.kind).evaluate(ev, engine))
    except UndefinedContrastError:
        return float("nan")


def evaluate_array(name, ev, engine="auto"):
    """Values of `name` over an evaluator whose swept fields and detuning
    hold arrays; undefined contrasts come back as NaN."""
    value = _lookup(name, ev.kind).evaluate(ev, engine)
    return np.broadcast_to(np.asarray(value, dtype=float),
                           np.shape(ev.delta)).copy()


def vectorizable(names, ev, engine="auto"):
    """True when every observable in `names` has a formula at `ev`."""
    if engine == "solver":
        return False
    registry = OBSERVABLES[ev.kind]
    return all(
        name in registry and (registry[name].analytic is not None
                              or registry[name].closed_available(ev))
        for name in names)


def _lookup(name, kind):
    registry = OBSERVABLES[kind]
    if name not in registry:
        raise ParameterError(f"Unknown observable for '{kind}': '{name}'")
    return registry[name]
