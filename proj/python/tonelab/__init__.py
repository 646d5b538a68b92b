"""Python bindings for tonelab: t-tone colorings of graphs.

Everything lives in the compiled ``_tonelab`` module; this package re-exports it.
"""

from ._tonelab import *  # noqa: F401,F403
from ._tonelab import __doc__  # noqa: F401

__version__ = "0.1.0"
