from .contrast import contrast_ratio
from .two_level import (TwoLevelAmplitudes, contrast_D, contrast_I,
                        effective_lamb_and_width, markovian_ratio,
                        optimal_blocking_gamma, perfect_reflection_detuning,
                        perfect_reflection_residual, phase_accumulated,
                        transparency, two_level_amplitudes)
from .nabla import (NablaAmplitudes, chirality_C, nabla_amplitudes,
                    perturbed_transfer_kernel, transfer_kernel)
from .oracle import OracleReport, run_oracle_suite
