"""Low-ply tree drawing toolkit: fractal 1-ply layouts, heavy-path
logarithmic-ply layouts, exact ply measurement, and 2-tree lower-bound
certificates."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
