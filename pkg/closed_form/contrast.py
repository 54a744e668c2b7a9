import numpy as np

from model.exceptions import UndefinedContrastError

# Probabilities summing below this are treated as both zero.
MIN_TOTAL = 1e-24


def contrast_ratio(first, second):
    """(second - first) / (second + first) for two probabilities.

    Arrays give NaN where both vanish; a pair of scalars raises instead.
    """
    if np.ndim(first) or np.ndim(second):
        first, second = np.broadcast_arrays(first, second)
        total = first + second
        defined = total > MIN_TOTAL
        return np.divide(second - first,
                         total,
                         out=np.full(total.shape, np.nan),
                         where=defined)

    total = first + second
    if total <= MIN_TOTAL:
        raise UndefinedContrastError(
            f"Contrast undefined: both probabilities vanish ({first:.3g}, "
            f"{second:.3g})")
    return (second - first) / total
