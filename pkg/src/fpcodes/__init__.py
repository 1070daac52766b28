"""Footprint bounds and exact parameters of Reed-Muller-type codes over finite point sets."""

from .ci import (CIShape, classify_ci_dim1, degree_case_i, degree_case_ii, fp_bruteforce,
                 fp_closed_form, kl_decompose)
from .codes import (PointSet, cartesian_pointset, evaluate_matrix, hilbert_X, min_distance_enum,
                    min_hyperplane_cover, normalize_point, point_set, projective_space_pointset,
                    reg_X, torus_pointset)
from .ff import Fq, fq_make, parse_field
from .monomial import MonomialIdeal, degree_with_monomial, hilbert_oracle, minimalize

__version__ = "0.1.0"
