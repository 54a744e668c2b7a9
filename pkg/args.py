from model.constant import MODEL_KINDS
from sweep import ENGINES, PRESET_IDS
from util import Argument

COMMON_ARGUMENTS = [
    Argument('-v', '--verbose', action='store_true', help='Log run details'),
    Argument('-e', '--engine', options=ENGINES, default='auto',
             help='Closed forms when available, or always the solver'),
    Argument('-j', '--n-jobs', type=int, default=1, help='Number of jobs'),
    Argument('-w', '--workdir', default='.', help='Output directory'),
    Argument('--deg', action='store_true',
             help='Angles and angle axes are given in degrees'),
]

PARAM_ARGUMENTS = [
    Argument('-m', '--model', options=MODEL_KINDS, default='two-level',
             help='Model kind'),
    # Two-level atom:
    Argument('--gamma-wg', type=float, help='Waveguide emission rate'),
    Argument('--gamma-e', '--gamma-ext', type=float, dest='gamma_e',
             help='Non-waveguide decay rate of the excited state'),
    Argument('--phi0', type=float, help='Phase between coupling points'),
    Argument('--tau', type=float, help='Travel time between coupling points'),
    # Coupling phases:
    Argument('--theta1', type=float, help='Phase of coupling point 1'),
    Argument('--theta2', type=float, help='Phase of coupling point 2'),
    Argument('--theta3', type=float, help='Phase of coupling point 3'),
    Argument('--theta4', type=float, help='Phase of coupling point 4'),
    Argument('--theta', type=float, help='theta2 - theta1'),
    Argument('--theta-prime', type=float, help='theta4 - theta3'),
    # Three-level atoms:
    Argument('--gamma1-wg', type=float, help='Emission rate into W_a'),
    Argument('--gamma2-wg', type=float, help='Emission rate into W_b'),
    Argument('--gamma-e1', type=float, help='Extra decay of |e1>'),
    Argument('--gamma-e2', type=float, help='Extra decay of |e2>'),
    Argument('--gamma-g2', type=float, help='Extra decay of |g2>'),
    Argument('--rabi', type=float, help='Drive between excited states'),
    Argument('--alpha', type=float, help='Phase of the excited-state drive'),
    Argument('--drive', type=float, help='Drive between ground states'),
    Argument('--beta', type=float, help='Phase of the ground-state drive'),
    Argument('--omega-g2', type=float, help='Energy of |g2>'),
    Argument('--phi-a0', type=float, help='Phase between points on W_a'),
    Argument('--phi-b0', type=float, help='Phase between points on W_b'),
    Argument('--tau-a', type=float, help='Travel time on W_a'),
    Argument('--tau-b', type=float, help='Travel time on W_b'),
]

SWEEP_ARGUMENTS = [
    *PARAM_ARGUMENTS,
    Argument('-d', '--delta', default='-10:10:1001',
             help='Detuning axis as min:max:count'),
    Argument('-s', '--obs', required=True,
             help='Comma-separated observables'),
    Argument('-o', '--out', help='CSV file name inside workdir'),
]

COMMANDS = {
    'spectrum': SWEEP_ARGUMENTS,
    'map': [
        *SWEEP_ARGUMENTS,
        Argument('-a', '--axis2', required=True,
                 help='Second axis as name:min:max:count'),
    ],
    'figure': [
        Argument('id', nargs='?',
                 help='Figure preset: ' + ', '.join(PRESET_IDS)),
        Argument('--all', action='store_true', help='Every figure preset'),
        Argument('--out-dir', help='Directory for <id>.csv files'),
    ],
    'verify': [
        Argument('-k', '--seed', type=int, default=42, help='Seed'),
        Argument('-t', '--trials', type=int, default=200,
                 help='Random points per configuration family'),
        Argument('--tol', type=float, default=1e-10,
                 help='Largest accepted deviation'),
        Argument('--negative-control', action='store_true',
                 help='Check against a deliberately perturbed closed form'),
    ],
    'device': [
        *PARAM_ARGUMENTS,
        Argument('-p', '--preset', options=PRESET_IDS,
                 help='Take the model and parameters of a figure preset'),
        Argument('-d', '--delta', type=float, default=0.0,
                 help='Detuning'),
        Argument('--router', help='Routing as source:target'),
        Argument('--cycle', help='Circulator cycle as 1,3,4,2'),
        Argument('--contrast', help='Port pair as i,j'),
        Argument('--label', help='Label printed with the report'),
    ],
}
