"""High-order SBP ghost-point solver for 2D elastic waves on two curvilinear
blocks joined by a 1:2 nonconforming interface."""
from .errors import ElastiqError

__version__ = "0.1.0"
__all__ = ["ElastiqError", "__version__"]
