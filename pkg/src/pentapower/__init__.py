"""Closed-form integer powers of complex two-band pentadiagonal Toeplitz matrices.

The matrices have value a on the +2 diagonal and b on the -2 diagonal,
nothing anywhere else. Powers, eigenvalues and diagonalising transforms
are available in closed form via Chebyshev polynomials of the second
kind, and every fast path can be checked against a brute-force dense
oracle shipped alongside.
"""

from .chebyshev import chebyshev_u, chebyshev_u_sequence, fibonacci_poly, ipow
from .oracle import (
    VerificationReport,
    build_dense,
    compare,
    determinant,
    determinant_corollary_check,
    mat_mul,
    naive_power,
)
from .power import (
    PowerRequest,
    power_entry_even,
    power_entry_odd,
    power_matrix,
    power_via_spectral,
)
from .spectrum import (
    DerivedScalars,
    MatrixSpec,
    SpectralDecomposition,
    char_function,
    eigenvalues_even,
    eigenvalues_odd,
    transform_even,
    transform_odd,
    tridiag_charpoly,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "chebyshev_u",
    "chebyshev_u_sequence",
    "fibonacci_poly",
    "ipow",
    "MatrixSpec",
    "DerivedScalars",
    "SpectralDecomposition",
    "eigenvalues_even",
    "eigenvalues_odd",
    "transform_even",
    "transform_odd",
    "tridiag_charpoly",
    "char_function",
    "PowerRequest",
    "power_entry_even",
    "power_entry_odd",
    "power_matrix",
    "power_via_spectral",
    "VerificationReport",
    "build_dense",
    "mat_mul",
    "naive_power",
    "determinant",
    "determinant_corollary_check",
    "compare",
]
