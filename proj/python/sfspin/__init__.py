"""Spin-resolved tunnel ionization of hydrogenlike ions in strong laser fields."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
