import numpy as np
from commons.log import auto_log_progress, log
from joblib import Parallel, delayed

from sweep.observable import (Evaluator, evaluate, evaluate_array,
                              vectorizable)
from sweep.spec import SweepSpec, SweepTable

CHUNK_SIZE = 2000
# Rows evaluated at once when every observable has a formula.
VECTOR_CHUNK_SIZE = 100_000


def grid_columns(spec: SweepSpec):
    """Axis values of every grid point in row order: the first axis varies
    slowest."""
    mesh = np.meshgrid(*(a.points() for a in spec.axes), indexing="ij")
    return [m.ravel() for m in mesh]


def grid_points(spec: SweepSpec):
    return list(zip(*(c.tolist() for c in grid_columns(spec))))


def evaluate_point(spec: SweepSpec, values):
    ev = _evaluator(spec, values)
    return [evaluate(name, ev, spec.engine) for name in spec.observables]


def evaluate_columns(spec: SweepSpec, columns):
    """Observable columns for a block of grid points, or None when some
    observable needs the solver."""
    ev = _evaluator(spec, columns)
    ev.delta = np.broadcast_to(np.asarray(ev.delta, dtype=float),
                               np.shape(columns[0])).copy()
    if not vectorizable(spec.observables, ev, spec.engine):
        return None
    return [evaluate_array(name, ev, spec.engine) for name in spec.observables]


def _evaluator(spec, values):
    names = [a.name for a in spec.axes]
    overrides = dict(zip(names, values))
    delta = overrides.pop("delta", spec.delta)
    params = spec.base_params.replace(**overrides) if overrides \
        else spec.base_params
    return Evaluator(spec.model_kind, params, delta)


def _evaluate_chunk(spec, chunk):
    return [[*values, *evaluate_point(spec, values)] for values in chunk]


def _run_vectorized(spec, columns):
    n = len(columns[0])
    blocks = []
    for start in range(0, n, VECTOR_CHUNK_SIZE):
        block = [c[start:start + VECTOR_CHUNK_SIZE] for c in columns]
        values = evaluate_columns(spec, block)
        if values is None:
            return None
        blocks.append(np.column_stack([*block, *values]))
    return np.vstack(blocks)


def _run_pointwise(spec, points, n_jobs):
    chunks = [
        points[i:i + CHUNK_SIZE] for i in range(0, len(points), CHUNK_SIZE)
    ]
    if n_jobs == 1 or len(chunks) == 1:
        results = [
            _evaluate_chunk(spec, c)
            for c in auto_log_progress(chunks, message="Sweeping... ")
        ]
    else:
        results = Parallel(n_jobs=n_jobs)(delayed(_evaluate_chunk)(spec, c)
                                          for c in chunks)
    return [row for chunk in results for row in chunk]


def run_sweep(spec: SweepSpec, n_jobs=1) -> SweepTable:
    spec.validate()
    columns = grid_columns(spec)
    names = [a.name for a in spec.axes] + list(spec.observables)
    n = len(columns[0])
    log(f"Sweeping {n} points of '{spec.model_kind}' "
        f"({', '.join(spec.observables)})...")

    rows = _run_vectorized(spec, columns)
    if rows is None:
        rows = _run_pointwise(spec, grid_points(spec), n_jobs)

    rows = np.asarray(rows, dtype=float).reshape(n, len(names))
    log(f"Sweep done: {len(rows)} rows")
    return SweepTable(columns=names, rows=rows)
