import math

import numpy as np
import pytest
from joblib import parallel_backend

import sweep.runner as runner
from model import NablaParams, TwoLevelParams
from model.exceptions import UnsupportedConfigurationError
from sweep import (Axis, Evaluator, SweepSpec, evaluate, grid_points,
                   observable_names, run_sweep)

HALF_PI = math.pi / 2
DETUNING = Axis("delta", -10, 10, 1001)


def test_grid_order_first_axis_slowest():
    spec = SweepSpec("two-level", TwoLevelParams(), Axis("delta", 0, 1, 2),
                     ("R", ), axis2=Axis.of_values("tau", (0, 1, 2)))
    assert grid_points(spec) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1),
                                 (1, 2)]


def test_transparency_plateau(transparent_atom):
    spec = SweepSpec("two-level", transparent_atom, DETUNING,
                     ("T_1to2", "T_2to1"))
    table = run_sweep(spec)
    assert table.columns == ["delta", "T_1to2", "T_2to1"]
    assert len(table) == 1001
    np.testing.assert_allclose(table.column("T_1to2"), 1, atol=1e-9)
    np.testing.assert_allclose(table.column("T_2to1"), 1, atol=1e-9)


def test_engines_agree():
    p = TwoLevelParams(gamma_ext=1.5, theta2=0.8, phi0=1.1, tau=0.6)
    observables = ("R", "T_1to2", "T_2to1", "R_rev", "I", "D",
                   "deficit_1")
    tables = [
        run_sweep(SweepSpec("two-level", p, Axis("delta", -6, 6, 121),
                            observables, engine=engine))
        for engine in ("closed-form", "solver")
    ]
    np.testing.assert_allclose(tables[0].rows, tables[1].rows, atol=1e-9)


def test_sweeps_derived_phase_difference():
    spec = SweepSpec("two-level",
                     TwoLevelParams(phi0=HALF_PI),
                     Axis("theta", 0, 2 * math.pi, 101), ("D", ),
                     delta=0.0)
    table = run_sweep(spec)
    theta = table.column("theta")
    d = table.column("D")
    assert d[np.argmin(np.abs(theta - HALF_PI))] == pytest.approx(-1)
    assert d[np.argmin(np.abs(theta - 3 * HALF_PI))] == pytest.approx(1)


def test_undefined_contrast_is_nan():
    spec = SweepSpec("nabla", NablaParams(), Axis("delta", -1, 1, 3),
                     ("C", ))
    assert np.isnan(run_sweep(spec).column("C")).all()


def test_closed_form_engine_needs_a_closed_form():
    spec = SweepSpec("nabla", NablaParams(rabi=1.0, phi_b0=1.0),
                     Axis("delta", -1, 1, 3), ("S_1to4", ),
                     engine="closed-form")
    with pytest.raises(UnsupportedConfigurationError):
        run_sweep(spec)


def test_auto_engine_falls_back_to_solver():
    p = NablaParams(rabi=1.0, phi_b0=1.0)
    ev = Evaluator("nabla", p, 0.3)
    assert not ev.has_closed_form
    assert evaluate("S_1to4", ev) == pytest.approx(ev.smatrix.entry(1, 4))


def test_observable_names():
    assert {"T_1to2", "R", "I", "D", "lamb_shift", "width",
            "reflection_residual",
            "markovian_ratio"} <= set(observable_names("two-level"))
    assert {"S_4to1", "C", "deficit_4"} <= set(observable_names("delta"))
    assert "I" not in observable_names("nabla")


def test_parallel_sweep_matches_serial(monkeypatch, chiral_nabla):
    spec = SweepSpec("nabla", chiral_nabla, Axis("delta", -5, 5, 51),
                     ("S_1to4", "C"),
                     axis2=Axis.of_values("theta", (0.5, HALF_PI)),
                     engine="solver")
    serial = run_sweep(spec)

    monkeypatch.setattr(runner, "CHUNK_SIZE", 10)
    with parallel_backend("threading"):
        parallel = run_sweep(spec, n_jobs=2)
    np.testing.assert_allclose(parallel.rows, serial.rows)


def test_formula_sweeps_match_pointwise_evaluation(monkeypatch, rng):
    spec = SweepSpec("two-level",
                     TwoLevelParams(gamma_ext=0.7, tau=0.4),
                     Axis("phi0", 0, 2 * math.pi, 9),
                     ("S_1to1", "S_1to2", "I", "D", "width"),
                     axis2=Axis.of_values("theta", rng.uniform(0, 6, 4)))
    monkeypatch.setattr(runner, "VECTOR_CHUNK_SIZE", 7)
    table = run_sweep(spec)

    expected = [[*values, *runner.evaluate_point(spec, values)]
                for values in grid_points(spec)]
    np.testing.assert_allclose(table.rows, expected, atol=1e-12)


def test_solver_observables_skip_the_vector_path():
    spec = SweepSpec("nabla", NablaParams(rabi=1.0, phi_b0=1.0),
                     Axis("delta", -1, 1, 3), ("S_1to4", ))
    columns = runner.grid_columns(spec)
    assert runner.evaluate_columns(spec, columns) is None
    assert len(run_sweep(spec)) == 3


def test_atom_contrast_on_a_grid_through_the_dark_point():
    # theta = 0 and phi0 = pi make the two-level system singular at
    # resonance; the excitation contrast never needs the reflection there.
    spec = SweepSpec("two-level", TwoLevelParams(),
                     Axis("theta", 0, 2 * math.pi, 5), ("D", ),
                     axis2=Axis("phi0", 0, 2 * math.pi, 5))
    table = run_sweep(spec)
    d = table.column("D").reshape(5, 5)
    assert np.isnan(d[0, 2])
    assert d[1, 1] == pytest.approx(-1)


def test_markovian_ratio():
    spec = SweepSpec("two-level", TwoLevelParams(gamma_ext=2.0),
                     Axis.of_values("tau", (0, 0.01, 1)),
                     ("markovian_ratio", ))
    np.testing.assert_allclose(
        run_sweep(spec).column("markovian_ratio"), [0, 0.03, 3])
