class ScatteringError(Exception):
    pass


class ParameterError(ScatteringError, ValueError):
    pass


class ModelError(ScatteringError, ValueError):
    pass


class UnsupportedConfigurationError(ScatteringError):
    pass


class UndefinedContrastError(ScatteringError, ZeroDivisionError):
    pass


class SingularSystemError(ScatteringError):
    def __init__(self, delta, incidence, condition):
        self.delta = delta
        self.incidence = incidence
        self.condition = condition
        super().__init__(
            f"Singular scattering system at delta={delta!r}, "
            f"incidence port {incidence} (condition estimate {condition:.3g})")
