"""Interval arithmetic, gH-calculus and gH-subgradients of interval-valued functions."""

from ._ghsub import *  # noqa: F401,F403
from ._ghsub import GhsubError, Interval, IVector, Ivf, catalog  # noqa: F401
