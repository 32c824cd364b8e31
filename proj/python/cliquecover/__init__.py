"""Python bindings for the clique-cover extraction core."""

from ._core import *  # noqa: F401,F403
from . import _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
