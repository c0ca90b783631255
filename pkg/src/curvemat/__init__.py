"""Exact models of space curves and plane point schemes via commuting matrices.

The package computes, entirely over the Gaussian rationals, the dictionary
between point schemes and commuting matrix pairs, curve models as commuting
matrix polynomials with their splitting types, and the moment-map model of
rational space curve moduli with its real signatures.
"""

from .scalars import GaussianRational, DualNumber, gq
from .unipoly import UniPoly, RatFunc, poly_gcd, gaussian_roots
from .linalg import FieldMatrix, SignatureReport, inertia, rank_kernel
from .multipoly import MultiPoly, buchberger, normal_form, standard_monomials
from .points import (
    ADHMData,
    CommPair,
    HatPair,
    algebra_dim,
    centralizer_dim,
    cyclic_vector,
    hat_moment,
    hat_pair,
    is_stable,
    krylov_canonical_form,
    line_test,
    moment_G,
    mult_matrices_from_ideal,
    mult_matrices_from_points,
    recover_points,
    unhat,
)
from .curves import (
    CurveIdeal,
    MatPolyModel,
    SplitMultiset,
    SplittingType,
    cohomological_obstruction,
    fiber_algebra,
    genus_from_splitting,
    infinity_chart,
    project_model,
    splitting_type,
    verify_model,
)
from .biquat import Mat2, TangentQuad, Subspace, mat2_act, metric_g, omega, quotient_dimension, subspace_analysis
from .moduli import (
    GroupElem,
    LieElem,
    MPoint,
    MomentValue,
    act,
    classify_point,
    fundamental_field,
    md_check,
    moment,
    real_signature,
    sigma,
    twisted_cubic_model,
)

__version__ = "0.1.0"
