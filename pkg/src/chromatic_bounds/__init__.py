"""Spectral lower bounds on the chromatic number.

The package computes the Hoffman family of eigenvalue bounds (including the
all-eigenvalue generalisation and the S+/S- ratio), checks the diagonal-unitary
conversion identities behind them, and searches small graphs for violations
of the conjectured bound ``chi >= 1 + S+/S-``.
"""

from chromatic_bounds.config import DEFAULT_CONFIG, Config
from chromatic_bounds.errors import (
    ImproperColoringError,
    InputError,
    NumericalError,
    ParseError,
)
from chromatic_bounds.graphs import Graph, adjacency_matrix, from_edge_list, generate, parse_dimacs
from chromatic_bounds.linalg import Spectrum, eig_symmetric, inertia_of, spectral_sums
from chromatic_bounds.bounds import BoundReport, compute_report

__all__ = [
    "BoundReport",
    "Config",
    "DEFAULT_CONFIG",
    "Graph",
    "ImproperColoringError",
    "InputError",
    "NumericalError",
    "ParseError",
    "Spectrum",
    "adjacency_matrix",
    "compute_report",
    "eig_symmetric",
    "from_edge_list",
    "generate",
    "inertia_of",
    "parse_dimacs",
    "spectral_sums",
]

__version__ = "0.1.0"
