from .algebra import CDGA, CDGAError, SparseMatrix, monomial_basis, differential_matrix
from .linalg import matrix_rank
from .oracle import (GradedDims, VerificationResult, cohomology_dimensions, verify_bg,
                     square_is_zero)

__all__ = [
    "CDGA", "CDGAError", "SparseMatrix", "monomial_basis", "differential_matrix",
    "matrix_rank", "GradedDims", "VerificationResult",
    "cohomology_dimensions", "verify_bg", "square_is_zero",
]
