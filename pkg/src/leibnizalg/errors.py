"""Exception types shared across the library."""


class AmbientMismatch(ValueError):
    """Subspaces or vectors from incompatible ambient spaces."""


class FieldMismatch(ValueError):
    """Operands live over different fields."""


class NotAnIdeal(ValueError):
    """A quotient was requested by a subspace that is not an ideal."""


class NotASubalgebra(ValueError):
    """Restriction requested to a subspace that is not closed under the bracket."""


class UnsupportedField(Exception):
    """The operation has no algorithm for this field (e.g. F_p above the oracle cap)."""


class Unsupported(Exception):
    """The operation is outside the supported cases (e.g. Frattini of a
    non-nilpotent algebra over Q)."""


class InternalInconsistency(RuntimeError):
    """A mandatory certificate failed.  Results are never returned uncertified;
    this aborts loudly instead."""


class BudgetExceeded(RuntimeError):
    """An exhaustive scan would exceed the configured subspace budget."""


class TheoremViolation(RuntimeError):
    """An exhaustively-verified theorem failed on concrete data; this can only
    mean an implementation bug and must abort."""


class PremiseViolation(ValueError):
    """A theorem verification was invoked on data violating its premises."""
