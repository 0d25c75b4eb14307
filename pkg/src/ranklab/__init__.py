"""Exact rank-metric code laboratory.

Constructions, duality transforms, representation conversions, and
small-parameter exhaustive exploration for codes in M_{n x m}(F_q) with the
rank distance, all in exact arithmetic.
"""

from .errors import (
    ArgumentError,
    ConstructionRejected,
    DomainError,
    RanklabError,
    ResourceLimitError,
    StructureError,
    UnsupportedParameterError,
)
from .fields import GF, FieldDescriptor, FieldElement, field_arith, field_from_order, frobenius, norm_trace
from .matrices import MatrixGF, SubspaceBasis, gaussian_binomial
from .linearized import SigmaPolynomial, adjoint, is_scattered, random_sigma_polynomial
from .representations import (
    DicksonMatrix,
    VectorRep,
    dickson_matrix,
    linpoly_interpolate,
    linpoly_to_matrix,
    matrix_to_linpoly,
    matrix_to_vector,
    moore_matrix,
    vector_rank,
    vector_to_matrix,
)
from .codes import (
    RankDistribution,
    RankMetricCode,
    additive_singleton_dimension,
    delsarte_rank_distribution,
    is_mrd,
    min_distance,
    rank_distribution,
    singleton_bound,
    weight_enumerator,
)
from .constructions import (
    AdditiveMap,
    SkewPolynomial,
    TwistSpec,
    albert_twisted_field,
    gabidulin,
    scattered_pair_code,
    skew_mrd,
    twist_maps,
    twisted_code,
)
from .transforms import (
    EquivalenceMove,
    Idealisers,
    apply_equivalence,
    delsarte_dual,
    idealisers,
    lift,
    linearized_dual,
    macwilliams_transform,
    puncture,
    shorten,
    subspace_distance,
)
from .semifields import (
    IsotopyResult,
    PresemifieldReport,
    SemifieldMultiplication,
    isotopic,
    mult_from_spread,
    spread_set_of,
    verify_presemifield,
)
from .symmetric import (
    TypeDistribution,
    commutative_to_symmetric,
    schmidt_bound,
    symmetric_dual,
    symmetric_type,
    type_distribution,
)

__all__ = [
    "ArgumentError",
    "ConstructionRejected",
    "DomainError",
    "RanklabError",
    "ResourceLimitError",
    "StructureError",
    "UnsupportedParameterError",
    "GF",
    "FieldDescriptor",
    "FieldElement",
    "field_arith",
    "field_from_order",
    "frobenius",
    "norm_trace",
    "MatrixGF",
    "SubspaceBasis",
    "gaussian_binomial",
    "SigmaPolynomial",
    "adjoint",
    "is_scattered",
    "random_sigma_polynomial",
    "DicksonMatrix",
    "VectorRep",
    "dickson_matrix",
    "linpoly_interpolate",
    "linpoly_to_matrix",
    "matrix_to_linpoly",
    "matrix_to_vector",
    "moore_matrix",
    "vector_rank",
    "vector_to_matrix",
    "RankDistribution",
    "RankMetricCode",
    "additive_singleton_dimension",
    "delsarte_rank_distribution",
    "is_mrd",
    "min_distance",
    "rank_distribution",
    "singleton_bound",
    "weight_enumerator",
    "AdditiveMap",
    "SkewPolynomial",
    "TwistSpec",
    "albert_twisted_field",
    "gabidulin",
    "scattered_pair_code",
    "skew_mrd",
    "spread_set_of",
    "twist_maps",
    "twisted_code",
    "EquivalenceMove",
    "Idealisers",
    "apply_equivalence",
    "delsarte_dual",
    "idealisers",
    "lift",
    "linearized_dual",
    "macwilliams_transform",
    "puncture",
    "shorten",
    "subspace_distance",
    "IsotopyResult",
    "PresemifieldReport",
    "SemifieldMultiplication",
    "isotopic",
    "mult_from_spread",
    "verify_presemifield",
    "TypeDistribution",
    "commutative_to_symmetric",
    "schmidt_bound",
    "symmetric_dual",
    "symmetric_type",
    "type_distribution",
]
