from dataclasses import dataclass, field
from typing import Dict, Optional

from closed_form.contrast import contrast_ratio
from model.exceptions import ParameterError, UndefinedContrastError
from solver.scattering import SMatrix, s_matrix


@dataclass
class DeviceReport:
    config_label: str
    at_detuning: float
    values: Dict[str, Optional[float]] = field(default_factory=dict)

    def lines(self, digits=6):
        out = [f"config={self.config_label}", f"delta={self.at_detuning:g}"]
        for name, value in self.values.items():
            out.append(f"{name}=" + ("" if value is None else
                                      f"{value:.{digits}f}"))
        return out


def conservation_deficit(s: SMatrix, incidence):
    _check_port(s, incidence)
    return 1 - float(s.row(incidence).sum())


def port_contrast(s: SMatrix, i, j):
    _check_port(s, i)
    _check_port(s, j)
    return contrast_ratio(s.entry(i, j), s.entry(j, i))


def router_efficiency(s: SMatrix, source, target):
    _check_port(s, source)
    _check_port(s, target)
    return s.entry(source, target)


def circulator_fidelity(s: SMatrix, cycle):
    cycle = [int(p) for p in cycle]
    if sorted(cycle) != list(range(1, s.n_ports + 1)):
        raise ParameterError(
            f"Cycle {cycle} must visit each of the {s.n_ports} ports once")
    edges = zip(cycle, cycle[1:] + cycle[:1])
    return sum(s.entry(a, b) for (a, b) in edges) / len(cycle)


def device_report(label, model, delta, router=None, cycle=None,
                  contrast=None):
    s = s_matrix(model, delta)
    report = DeviceReport(config_label=label, at_detuning=delta)

    if router is not None:
        source, target = router
        report.values[f"efficiency_{source}to{target}"] = \
            router_efficiency(s, source, target)
    if cycle is not None:
        name = "".join(str(p) for p in cycle)
        report.values[f"fidelity_{name}"] = circulator_fidelity(s, cycle)
    if contrast is not None:
        i, j = contrast
        try:
            value = port_contrast(s, i, j)
        except UndefinedContrastError:
            value = None
        report.values[f"contrast_{i}_{j}"] = value

    for port in range(1, s.n_ports + 1):
        report.values[f"conservation_deficit_{port}"] = \
            conservation_deficit(s, port)
    return report


def _check_port(s, port):
    if not (isinstance(port, int) and 1 <= port <= s.n_ports):
        raise ParameterError(f"Port {port} out of range 1..{s.n_ports}")
