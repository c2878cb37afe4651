"""Exact q-Catalan toolkit.

Exact Laurent-polynomial arithmetic, q-binomial and q-Catalan families,
parity-unimodality verification, truncated bivariate series with the
positive-part and section operators, golden comparison against transcribed
closed forms, and the Dyck-path/tableau statistics whose distributions
reproduce the q-Catalan polynomials.
"""

__version__ = "0.1.0"

from qcatalan.errors import (
    ExactnessError,
    InexactDivisionError,
    NonCoprimeError,
)
from qcatalan.laurent import (
    LaurentPoly,
    UnimodalityReport,
    extract,
    is_parity_unimodal,
    is_unimodal,
    lemma5_witnesses,
    normalize,
    reciprocal_subst,
    symmetry_class,
)
from qcatalan.qseries import (
    QCatalanFamily,
    cbar,
    check_pair,
    conjecture13_scan,
    k_poly,
    prop7_identity,
    q_binomial,
    q_catalan,
    q_integer,
    rational_q_catalan,
    sweep,
)

__all__ = [
    "__version__",
    "ExactnessError",
    "InexactDivisionError",
    "NonCoprimeError",
    "LaurentPoly",
    "UnimodalityReport",
    "extract",
    "is_parity_unimodal",
    "is_unimodal",
    "lemma5_witnesses",
    "normalize",
    "reciprocal_subst",
    "symmetry_class",
    "QCatalanFamily",
    "cbar",
    "check_pair",
    "conjecture13_scan",
    "k_poly",
    "prop7_identity",
    "q_binomial",
    "q_catalan",
    "q_integer",
    "rational_q_catalan",
    "sweep",
]
