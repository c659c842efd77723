"""MacWilliams identities for linear codes over finite commutative Frobenius rings.

Rings are finite tables; codes are enumerated exhaustively; every identity
is checked by exact polynomial comparison.
"""

__version__ = "0.1.0"

from .catalog import CATALOG, builtin, paper_order
from .codes import LinearCode, column_span_size, dual, span
from .enumerators import (canonical_families, count_A, count_B, sse, swe, tuple_sse, tuple_swe)
from .errors import (AssignmentError, DimensionError, FamilyError, FrobringError, InternalError,
                     NonPrincipalError, OrderError, PreconditionError, SizeError, SpecError,
                     StructureError, ValidationError)
from .ideals import ClassData, PosetData, associate_classes, mobius_matrix, poset, zeta_matrix
from .poly import Enumerator, Poly, hamming, specialize
from .ring import (FiniteRing, Modular, Presentation, Product, Tables, build_ring, is_frobenius)
from .transform import (PosetMatrices, build_matrices, chain_ring_closed_form, kronecker_check,
                        pir_decomposition, qaj_order)
from .verify import VerifyReport, transform_sse, transform_swe, verify_identity

__all__ = [
    "AssignmentError", "CATALOG", "ClassData", "DimensionError", "Enumerator", "FamilyError",
    "FiniteRing", "FrobringError", "InternalError", "LinearCode", "Modular", "NonPrincipalError",
    "OrderError", "Poly", "PosetData", "PosetMatrices", "PreconditionError", "Presentation",
    "Product", "SizeError", "SpecError", "StructureError", "Tables", "ValidationError",
    "VerifyReport", "associate_classes", "build_matrices", "build_ring", "builtin",
    "canonical_families", "chain_ring_closed_form", "column_span_size", "count_A", "count_B",
    "dual", "hamming", "is_frobenius", "kronecker_check", "mobius_matrix", "paper_order",
    "pir_decomposition", "poset", "qaj_order", "span", "specialize", "sse", "swe",
    "transform_sse", "transform_swe", "tuple_sse", "tuple_swe", "verify_identity", "zeta_matrix",
]
