"""
octoeigen - right eigenvalues of 3x3 octonionic Hermitian matrices

Includes:
- Octonion arithmetic over a configurable Fano-plane multiplication table
- The exceptional Jordan algebra (Jordan/Freudenthal products, trace, sigma, det)
- Real eigenvalue families and a numerical search for non-real eigenpairs
- Orthogonality and decomposition checks, and a verification harness
"""

__version__ = "0.1.0"

from .core.eigen import EigenPair, eigen_search, real_eigen_families, residual
from .core.jordan import JordanMatrix, OctVec3
from .core.octonion import MultiplicationTable, Octonion

__all__ = [
    "EigenPair",
    "JordanMatrix",
    "MultiplicationTable",
    "OctVec3",
    "Octonion",
    "eigen_search",
    "real_eigen_families",
    "residual",
    "__version__",
]
