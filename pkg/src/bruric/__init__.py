"""Bruhat-order Hasse diagrams of finite Coxeter groups and their Ricci curvature."""

from .curvature import (CurvatureReport, delta_op, gamma2_formula, gamma2_op, gamma_op,
                        global_ricci, local_ricci, lower_bound_triangle_free, reduce_to_a,
                        simplified_lower_bound, upper_bound_triangles)
from .embedding import verify_embedding
from .errors import *  # noqa: F401,F403
from .gamma import GammaGraphB, SignedGraph, gamma_b, gamma_d, gamma_tilde_b, min_gamma_degree
from .groups import CoxeterSpec, GroupTable, enumerate_group, generic_covers
from .hasse import (Graph, HasseGraph, LocalBall, build_bruhat_graph, build_hasse,
                    degree_report, is_triangle_free, local_ball, max_triangle_pairs)
from .jacobi import jacobi_eigen
from .perms import (Reflection, cover_neighbors_a, cover_neighbors_b, cover_neighbors_d,
                    format_window, parse_window)

__version__ = "0.1.0"
