"""Unsharp negation and implication on finite meet-semilattices."""

from ._core import *  # noqa: F401,F403
from ._core import UnsharpError, MeetSemilattice

__all__ = [name for name in dir() if not name.startswith("_")]
