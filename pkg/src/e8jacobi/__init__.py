"""Weyl invariant E8 weak Jacobi forms.

Exact construction of all weak Jacobi forms of given weight and index,
free-module generator tables, membership certificates, and an
independent numeric theta-function oracle.
"""

from .construct import (Certificate, ConsistencyError, JacobiBasis,
                        Rejection, certificate_identity, certify,
                        index_profile, jacobi_basis, jacobi_dim, lb_analysis,
                        module_generators, rank_series)
from .grading import (AB, Alphabet, BiDegree, Frac, GradingError, Poly,
                      S_ALPHABET, ab)

__version__ = "0.1.0"

__all__ = [
    "AB", "ab", "S_ALPHABET", "Alphabet", "BiDegree", "Poly", "Frac",
    "GradingError", "ConsistencyError", "Certificate", "Rejection",
    "JacobiBasis", "jacobi_basis", "jacobi_dim", "certify",
    "certificate_identity", "index_profile", "module_generators",
    "rank_series", "lb_analysis", "__version__",
]
