from .exceptions import (ModelError, ParameterError, ScatteringError,
                         SingularSystemError, UndefinedContrastError,
                         UnsupportedConfigurationError)
from .params import (DeltaParams, NablaParams, TwoLevelParams, axis_names,
                     params_class, params_from_dict, point_params)
from .scatter_model import Channel, Coupling, Drive, Level, ScatterModel
from .builder import (ModelBuilder, delta_to_model, nabla_to_model,
                      two_level_to_model)
