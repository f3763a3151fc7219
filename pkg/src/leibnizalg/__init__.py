"""Exact computation with finite-dimensional Leibniz algebras.

Structure-constant algebras over Q and F_p: kernel of squares, liesation,
central/derived series, solvable radical, nilradical, Frattini ideal, plus an
exhaustive small-field oracle and machine verification of the structural
statements relating N(L/I), N(L)/I and (I + N(B))/I.
"""

from .core import (
    LeibnizAlgebra,
    QuotientPresentation,
    bracket_span,
    center,
    check_leibniz,
    direct_sum,
    derived_series,
    embed_subspace,
    embed_vector,
    ideal_closure,
    is_ideal,
    is_lie,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    left_mult,
    leibniz_kernel,
    liesation,
    lower_central_series,
    quotient,
    restrict,
    right_mult,
    two_sided_span,
)
from .errors import (
    AmbientMismatch,
    BudgetExceeded,
    FieldMismatch,
    InternalInconsistency,
    NotAnIdeal,
    NotASubalgebra,
    PremiseViolation,
    TheoremViolation,
    Unsupported,
    UnsupportedField,
)
from .exactlin import (
    Field,
    Matrix,
    QQ,
    Subspace,
    complement_basis,
    contains,
    rref,
    subspace_intersect,
    subspace_leq,
    subspace_sum,
)
from .radicals import (
    NilradicalResult,
    RadicalResult,
    Theorem2Report,
    find_complement_B,
    frattini_ideal,
    nilradical,
    radical,
    verify_corollary,
    verify_lemma1,
    verify_prop3,
    verify_theorem2,
)
from .reports import VerificationReport

__version__ = "0.1.0"
