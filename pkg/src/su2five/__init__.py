"""Exact toolkit for SO(3)- and SU(2)-actions on simply-connected 5-manifolds."""

__version__ = "0.1.0"
