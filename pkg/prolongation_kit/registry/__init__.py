from .reduction_registry import REDUCTION_CONFIG, ReductionConfig, get_reduction_config, register_reduction

__all__ = ["REDUCTION_CONFIG", "ReductionConfig", "get_reduction_config", "register_reduction"]
