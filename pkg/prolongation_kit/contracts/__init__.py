from .ansatz import OmegaSource
from .coefficient import Coefficient

__all__ = ["Coefficient", "OmegaSource"]
