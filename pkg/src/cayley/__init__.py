"""Exact-arithmetic toolkit for the complex Cayley Grassmannian.

Everything runs over the Gaussian rationals: octonion cross products, the
three calibration forms, Pluecker charts of Gr(4, 8) with straightening,
the torus action with its 44 fixed points, Jacobian smoothness
certificates, tangent-weight tables, and the singular locus with its
parabolic stabilizer.  The ``cayley`` command line drives the full check
suite against golden tables.
"""

from .exactnum import GaussianRational, Matrix, Polynomial, PolynomialRing, gq
from .octonion import Octonion, bilinear, cross2, cross3, cross4, norm
from .exterior import MultiVector, VectorValuedForm, build_calibrations
from .grassmann import (Chart, PluckerPoint, chart, is_cayley_plane,
                        localized_equations, plucker_of_plane,
                        plucker_relations, straighten)
from .liegroups import (cartan_roots_parabolic, eigenbasis_change,
                        g2_lie_algebra, sl2_unipotent, torus_matrix,
                        verify_spin7_invariance, weight_of_basis,
                        weight_of_plucker)
from .geometry import (FixedPointRecord, bb_cell_counts, classify_smoothness,
                       fixed_point_candidates, fixed_points_in_x,
                       isolation_certificates, stabilizer_check,
                       tangent_weights, verify_sigma_description)

__version__ = "0.1.0"

__all__ = [
    "GaussianRational", "Matrix", "Polynomial", "PolynomialRing", "gq",
    "Octonion", "bilinear", "cross2", "cross3", "cross4", "norm",
    "MultiVector", "VectorValuedForm", "build_calibrations",
    "Chart", "PluckerPoint", "chart", "is_cayley_plane",
    "localized_equations", "plucker_of_plane", "plucker_relations",
    "straighten",
    "cartan_roots_parabolic", "eigenbasis_change", "g2_lie_algebra",
    "sl2_unipotent", "torus_matrix", "verify_spin7_invariance",
    "weight_of_basis", "weight_of_plucker",
    "FixedPointRecord", "bb_cell_counts", "classify_smoothness",
    "fixed_point_candidates", "fixed_points_in_x", "isolation_certificates",
    "stabilizer_check", "tangent_weights", "verify_sigma_description",
    "__version__",
]
