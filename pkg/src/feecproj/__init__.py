"""Finite element exterior calculus with smoothed commuting projections."""

__version__ = "0.1.0"
