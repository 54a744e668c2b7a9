import numpy as np
from scipy.optimize import curve_fit
from scipy.signal import find_peaks


def lorentzian(delta, center, half_width, peak):
    return peak * half_width**2 / ((delta - center)**2 + half_width**2)


def fit_lorentzian(delta, values):
    """Returns (center, half_width, peak) of the best Lorentzian fit."""
    delta = np.asarray(delta, dtype=float)
    values = np.asarray(values, dtype=float)
    top = int(np.argmax(values))

    # Seed the half width from the samples above half maximum.
    above = delta[values >= values[top] / 2]
    width0 = max((above.max() - above.min()) / 2, np.diff(delta).min())

    (center, half_width, peak), _ = curve_fit(
        lorentzian, delta, values, p0=(delta[top], width0, values[top]))
    return float(center), float(abs(half_width)), float(peak)


def reflection_peaks(delta, values, height=None):
    """Detunings of the local maxima of a sampled spectrum."""
    delta = np.asarray(delta, dtype=float)
    indices, _ = find_peaks(np.asarray(values, dtype=float), height=height)
    return delta[indices]
