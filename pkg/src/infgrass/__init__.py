"""Ext^1 dimensions and compatibility for rank-one objects of the infinite-rank
Grassmannian category, with a matrix-factorization oracle to check them."""

from .errors import *  # noqa: F401,F403
from .ext import ExtReport, compatible, ext_dimension, ext_report, reduce_common
from .ideals import GradedIdeal, contains_monomial, ideal_from_subset, normalize_generators, subset_from_ideal
from .mf_oracle import build_complex, complex_dimensions, ext_dimension_oracle, matrix_factorization, verify_factorization
from .plucker import evaluate_plucker, maximal_noncrossing, plucker_relation, verify_relation
from .staircase import CrossingGrid, alpha, beta, grid_A, grid_B, render_grid
from .subsets import KSubset, crosses, enumerate_window, intersection_size, new_ksubset, shift

__version__ = "0.1.0"
