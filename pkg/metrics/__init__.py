from .device import (DeviceReport, circulator_fidelity, conservation_deficit,
                     device_report, port_contrast, router_efficiency)
from .spectrum import fit_lorentzian, lorentzian, reflection_peaks
