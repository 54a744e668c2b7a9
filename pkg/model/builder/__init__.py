from .model_builder import (ModelBuilder, delta_to_model, nabla_to_model,
                            two_level_to_model)
