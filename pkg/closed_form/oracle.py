import math
from dataclasses import dataclass, field
from typing import List

import numpy as np
from commons.log import log

from closed_form.nabla import nabla_amplitudes, transfer_kernel
from closed_form.two_level import two_level_amplitudes
from model.builder import nabla_to_model, two_level_to_model
from model.params import NablaParams, TwoLevelParams
from solver.scattering import solve_scattering

TWO_PI = 2 * math.pi


@dataclass
class OracleReport:
    trials: int
    max_deviation: float = 0.0
    worst: str = ""
    checked: List[str] = field(default_factory=list)

    def passed(self, tol):
        return self.max_deviation < tol

    def record(self, name, closed, exact, context):
        deviation = abs(closed - exact)
        if not np.isfinite(deviation):
            deviation = math.inf
        if deviation > self.max_deviation or not self.worst:
            self.max_deviation = max(deviation, self.max_deviation)
            self.worst = f"{name} at {context}"
        self.checked.append(name)


def random_two_level(rng):
    return TwoLevelParams(gamma_wg=rng.uniform(0.2, 3),
                          gamma_ext=rng.uniform(0, 5),
                          theta1=rng.uniform(0, TWO_PI),
                          theta2=rng.uniform(0, TWO_PI),
                          phi0=rng.uniform(0, TWO_PI),
                          tau=rng.uniform(0, 2))


def random_nabla(rng):
    theta_b = rng.uniform(0, TWO_PI)
    return NablaParams(gamma1_wg=rng.uniform(0.2, 3),
                       gamma2_wg=rng.uniform(0.2, 3),
                       gamma_e1=rng.uniform(0, 3),
                       gamma_e2=rng.uniform(0, 3),
                       rabi=rng.uniform(0, 6),
                       alpha=rng.uniform(0, TWO_PI),
                       theta1=rng.uniform(0, TWO_PI),
                       theta2=rng.uniform(0, TWO_PI),
                       theta3=theta_b,
                       theta4=theta_b,
                       phi_a0=rng.uniform(0, TWO_PI),
                       tau_a=rng.uniform(0, 2))


def check_two_level(report, p, delta):
    model = two_level_to_model(p)
    closed = two_level_amplitudes(p, delta)
    left = solve_scattering(model, delta, 1)
    right = solve_scattering(model, delta, 2)
    context = f"{p}, delta={delta:.6g}"

    report.record("t", closed.t, left.amplitude(2), context)
    report.record("r", closed.r, left.amplitude(1), context)
    report.record("t_rev", closed.t_rev, right.amplitude(1), context)
    report.record("r_rev", closed.r_rev, right.amplitude(2), context)
    report.record("u_fwd", closed.u_fwd, left.atomic["e"], context)
    report.record("u_rev", closed.u_rev, right.atomic["e"], context)


def check_nabla(report, p, delta_prime, kernel=transfer_kernel):
    model = nabla_to_model(p)
    closed = nabla_amplitudes(p, delta_prime, kernel=kernel)
    context = f"{p}, delta_prime={delta_prime:.6g}"

    from_1 = solve_scattering(model, delta_prime, 1)
    from_2 = solve_scattering(model, delta_prime, 2)
    from_4 = solve_scattering(model, delta_prime, 4)

    for (name, solution, port) in (("s12", from_1, 2), ("s13", from_1, 3),
                                   ("s14", from_1, 4), ("s21", from_2, 1),
                                   ("s23", from_2, 3), ("s24", from_2, 4)):
        report.record(name, getattr(closed, name), solution.amplitude(port),
                      context)

    # Only the modulus of s41 is frame independent.
    report.record("|s41|", abs(closed.s41), abs(from_4.amplitude(1)),
                  context)


def run_oracle_suite(seed=42, trials=200, kernel=transfer_kernel):
    """Compares every closed form with the solver at random points."""
    rng = np.random.default_rng(seed)
    report = OracleReport(trials=trials)

    for _ in range(trials):
        check_two_level(report, random_two_level(rng), rng.uniform(-10, 10))
        check_nabla(report,
                    random_nabla(rng),
                    rng.uniform(-10, 10),
                    kernel=kernel)

    log(f"Oracle suite: {trials} trials, max deviation "
        f"{report.max_deviation:.3e} ({report.worst})")
    return report
