"""Wronskian Laguerre and Hermite polynomials indexed by integer partitions.

Exact arithmetic throughout: polynomials in ``x``, ``alpha``, ``beta`` with
rational coefficients, determinants of Wronskian matrices, the recurrences
down the Young lattice, and checks of the identities they satisfy.
"""

from .partitions import (
    Partition,
    border_strips_down,
    border_strips_up,
    conjugate,
    covers_down,
    covers_up,
    degree_vector,
    f_count,
    f_count_oracle,
    meet_join,
    parse_partition,
    partitions_of,
    partitions_up_to,
    rectangle,
)
from .polyalg import ALPHA, BETA, X, MPoly, determinant, parse_mpoly, serialize, solve_linear
from .recurrence import proof_decomposition, whp_recurrence, wlp_alt, wlp_thm1
from .sequences import (
    AppellSpec,
    appell_from_coeffs,
    c_from_z,
    classical_laguerre,
    hermite,
    modified_jacobi,
    modified_laguerre,
)
from .wronskian import (
    CLASSICAL_LAGUERRE,
    HERMITE,
    LAGUERRE,
    WronskianRequest,
    jacobi,
    wronskian_classical_monic,
    wronskian_matrix,
    wronskian_poly,
)

__version__ = "0.1.0"
