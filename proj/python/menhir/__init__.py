"""Menhir loop, its k-deformations and relativistic velocity composition."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
