from .linear_system import LinearSystem, build_system
from .scattering import (ScatterSolution, SMatrix, s_matrix, small_atom_limit,
                         solve_scattering, solve_system)
