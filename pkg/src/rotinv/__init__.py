"""Exact SO(2) moment invariants.

Construction, counting and numeric evaluation of rotation invariants of 2D
moments: Kravchuk eigenforms of the rotation derivation, Hilbert-basis
minimal generating sets, Poincare series, anchored transcendence bases, and
their values on raster images and weighted point clouds.
"""

from .counting import (
    PoincareData,
    closed_form_check,
    closed_form_series,
    degree_weight_counts,
    dim_invariants,
    poincare_series,
)
from .derivation import (
    DerivationMatrix,
    apply_D,
    build_matrix,
    character,
    expand_monomial,
    is_invariant,
    matrix_apply,
    rotate_moment_vector,
)
from .errors import (
    DegenerateInputError,
    DegenerateShapeError,
    DegreeCapExceededError,
    DomainError,
    IncompleteTableError,
    InvalidAnchorError,
    InvalidEigenvalueError,
    RotinvError,
)
from .gaussian import GaussianRational
from .eigen import (
    EigenSymbol,
    ExponentVector,
    LinearForm,
    binomial,
    complex_moment_form,
    dim_moment_space,
    eigenvector,
    kravchuk,
    multiplicity,
    pair_product_closed_form,
    spectrum,
    zero_weight_closed_form,
)
from .moments import (
    InvarianceReport,
    MomentTable,
    PointCloud,
    RasterImage,
    central_moments,
    evaluate_form,
    evaluate_invariant,
    geometric_moments,
    moment_pipeline,
    normalized_moments,
    rotate_point_cloud,
    verify_invariance,
)
from .monoid import (
    WeightVector,
    generating_vector,
    hilbert_basis,
    minimal_nonneg_solutions,
    polynomial_generators,
)
from .poly import SparsePoly
from .rational import (
    RationalGenerator,
    count_rational,
    default_anchor,
    hu_classical,
    independence_check,
    phi_from_beta,
    rational_generators,
)

__version__ = "0.1.0"
