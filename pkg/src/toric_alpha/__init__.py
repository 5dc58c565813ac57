"""Exact computation of alpha-invariants and minimal log discrepancies of
toric log pairs, with the lattice-geometry and Diophantine tools behind
their sharp bounds."""
from .exact import INF, format_rational
from .fano_rank1 import RankOneFano, extremal_example, from_barycentric, mld_scan, to_toric_pair
from .polytope import Polytope, dual, gamma_point, lattice_points, normalized_volume
from .sylvester import gamma_bound, u
from .toric import (
    ToricLogPair,
    alpha_invariant,
    gamma_anticanonical,
    gb_vb_checks,
    mld,
    moment_polytope,
)

__all__ = [
    "INF", "format_rational", "RankOneFano", "extremal_example", "from_barycentric",
    "mld_scan", "to_toric_pair", "Polytope", "dual", "gamma_point", "lattice_points",
    "normalized_volume", "gamma_bound", "u", "ToricLogPair", "alpha_invariant",
    "gamma_anticanonical", "gb_vb_checks", "mld", "moment_polytope",
]
