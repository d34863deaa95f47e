"""Penetration and efficiency of fibrous filter media."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, evaluate, find_mpps, sweep

__version__ = "0.1.0"
