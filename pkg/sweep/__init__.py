from .spec import ENGINES, Axis, SweepSpec, SweepTable
from .observable import Evaluator, evaluate, observable_names
from .runner import evaluate_point, grid_points, run_sweep
from .preset import PRESET_IDS, figure_preset
