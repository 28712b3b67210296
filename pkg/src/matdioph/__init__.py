"""Square integer-matrix solutions of X^n + Y^p = Z^q.

Submodules:

* :mod:`~matdioph.bigmatrix`  exact integer matrices
* :mod:`~matdioph.eisenstein` arithmetic in Z[w] and its 2x2 embedding
* :mod:`~matdioph.homopoly`   homogeneous bivariate polynomials
* :mod:`~matdioph.cayham`     companion matrices, two-variable Cayley-Hamilton
* :mod:`~matdioph.solver`     solution constructions
* :mod:`~matdioph.verifier`   independent brute-force checks
* :mod:`~matdioph.cli`        command-line entry point
"""

from .bigmatrix import BigMat
from .eisenstein import EisInt
from .errors import MatDiophError, Unsolvable, VerificationError
from .homopoly import HomoPoly
from .reports import LemmaReport, VerifyReport
from .solver import SolutionTriple, solve
from .verifier import verify_equation

__version__ = "0.1.0"

__all__ = [
    "BigMat",
    "EisInt",
    "HomoPoly",
    "LemmaReport",
    "MatDiophError",
    "SolutionTriple",
    "Unsolvable",
    "VerificationError",
    "VerifyReport",
    "solve",
    "verify_equation",
]
