"""Exact generators, oracles and dataset writers for algebraic-combinatorics
benchmark datasets."""

__version__ = "0.1.0"
