"""Exact-arithmetic admissibility certificates for Mukai vectors on a
Picard-rank-1 K3 surface and for the induced bundles on its Hilbert
schemes of points."""

from .conditions import (
    AdmissibilityReport,
    HypothesisNotMet,
    InconsistentCertificate,
    admissibility_report,
    check_fineness,
    check_inequality,
    check_local_freeness,
    check_nonempty,
    extension_euler_direct,
    extension_euler_formula,
    vanishing_certificate,
)
from .certificate import Certificate, build_certificate
from .hilb import (
    DestabilizerCase,
    HilbNSClass,
    NegativeRank,
    ProductClass,
    destabilizer_case,
    image_c1,
    image_rank,
    product_c1,
    product_selfintersection,
    slope_on_product,
    taut_c1,
    taut_rank,
)
from .lattice import (
    K3Surface,
    MukaiVector,
    dual_vector,
    euler_char,
    euler_pair,
    ideal_sheaf_vector,
    mukai_pairing,
    mukai_square,
    slope_on_X,
    twisted_chi,
)
from .pfunctor import (
    GradedDims,
    NegativeExt,
    TangentMatch,
    ext_dims_on_hilb,
    ext_dims_on_X,
    graded_tensor,
    moduli_dim,
    projective_space_cohomology,
    tangent_match,
)
from .search import InvalidQuery, SearchHit, SearchQuery, enumerate_hits, search_bounds

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "Certificate",
    "DestabilizerCase",
    "GradedDims",
    "HilbNSClass",
    "HypothesisNotMet",
    "InconsistentCertificate",
    "InvalidQuery",
    "K3Surface",
    "MukaiVector",
    "NegativeExt",
    "NegativeRank",
    "ProductClass",
    "SearchHit",
    "SearchQuery",
    "TangentMatch",
    "admissibility_report",
    "build_certificate",
    "check_fineness",
    "check_inequality",
    "check_local_freeness",
    "check_nonempty",
    "destabilizer_case",
    "dual_vector",
    "enumerate_hits",
    "euler_char",
    "euler_pair",
    "ext_dims_on_X",
    "ext_dims_on_hilb",
    "extension_euler_direct",
    "extension_euler_formula",
    "graded_tensor",
    "ideal_sheaf_vector",
    "image_c1",
    "image_rank",
    "moduli_dim",
    "mukai_pairing",
    "mukai_square",
    "product_c1",
    "product_selfintersection",
    "projective_space_cohomology",
    "search_bounds",
    "slope_on_X",
    "slope_on_product",
    "tangent_match",
    "taut_c1",
    "taut_rank",
    "twisted_chi",
    "vanishing_certificate",
]
