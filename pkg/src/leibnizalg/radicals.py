"""Solvable radical, nilradical, Frattini ideal, complements, and machine
verification of the structural statements about the nilradical of a quotient
by the span of squares.

Every computed radical carries certificates (ideal witness, series reaching
zero, operator nilpotency witnesses).  A failing certificate raises
InternalInconsistency: no result is ever returned uncertified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from . import oracle
from .core import (
    LeibnizAlgebra,
    bracket_span,
    derived_series,
    embed_subspace,
    embed_vector,
    is_ideal,
    is_nilpotent,
    is_subalgebra,
    left_mult,
    leibniz_kernel,
    liesation,
    lower_central_series,
    quotient,
    restrict,
    right_mult,
    subalgebra_closure,
    subspace_is_nilpotent,
    two_sided_span,
)
from .errors import (
    InternalInconsistency,
    PremiseViolation,
    Unsupported,
    UnsupportedField,
)
from .exactlin import Matrix, Subspace, nullspace, vec_add, vec_scale
from .reports import VerificationReport


@dataclass
class RadicalResult:
    subspace: Subspace
    method: str                      # "cartan-pullback" or "oracle-exhaustive"
    certificates: dict = field(default_factory=dict)


@dataclass
class NilradicalResult:
    subspace: Subspace
    method: str                      # "trace-form-char0" or "oracle-exhaustive"
    certificates: dict = field(default_factory=dict)


@dataclass
class Theorem2Report:
    premises_ok: dict
    lhs: Subspace                    # N(L/I), in quotient coordinates
    rhs: Subspace                    # (I + N(B))/I, in quotient coordinates
    formula_equal: bool
    nilpotency_condition: bool       # R_n|_I nilpotent for all basis n of N(B)
    kernel_quotient_equal: bool      # N(L/I) == N(L)/I
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        from .reports import _jsonable

        return {
            "premises_ok": self.premises_ok,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "formula_equal": self.formula_equal,
            "nilpotency_condition": self.nilpotency_condition,
            "kernel_quotient_equal": self.kernel_quotient_equal,
            "details": _jsonable(self.details),
            "witnesses": _jsonable(self.witnesses),
        }


def _right_mult_family(L: LeibnizAlgebra):
    return [right_mult(L, L.basis_vector(i)) for i in range(L.dim)]


def _right_mult_of(L: LeibnizAlgebra, family, x) -> Matrix:
    F = L.field
    M = Matrix.zeros(F, L.dim, L.dim)
    for c, Mi in zip(x, family):
        if c != F.zero:
            M = M.add(Mi.scale(c))
    return M


def radical(L: LeibnizAlgebra, budget: int = oracle.DEFAULT_BUDGET) -> RadicalResult:
    """Largest solvable ideal.

    Char 0: the quotient by the span of squares is a Lie algebra with the same
    radical image, so compute the Lie radical there as the orthogonal
    complement of the derived algebra under the Killing form (Cartan's
    criterion) and pull it back.  Over F_p the exhaustive oracle is used,
    subject to its budget.
    """
    if L.field.modulus is not None:
        R = oracle.radical_oracle(L, budget)
        return _certify_radical(L, R, "oracle-exhaustive")
    qp = liesation(L)
    lam = qp.quotient
    rad_lam = _lie_radical_killing(lam)
    R = qp.pull_back(rad_lam)
    return _certify_radical(L, R, "cartan-pullback")


def _lie_radical_killing(lam: LeibnizAlgebra) -> Subspace:
    """rad = { x : kappa(x, [lam,lam]) = 0 } for a char-0 Lie algebra."""
    F = lam.field
    m = lam.dim
    if m == 0:
        return lam.zero_space()
    ads = [left_mult(lam, lam.basis_vector(i)) for i in range(m)]
    gram = [[ads[i].matmul(ads[j]).trace() for j in range(m)] for i in range(m)]
    D = bracket_span(lam, lam.full_space(), lam.full_space())
    if D.dim == 0:
        return lam.full_space()
    rows = []
    for d in D.rows:
        row = []
        for i in range(m):
            s = F.zero
            for j, dj in enumerate(d):
                s = F.add(s, F.mul(gram[i][j], dj))
            row.append(s)
        rows.append(row)
    return Subspace.span(F, m, nullspace(Matrix(F, rows)))


def _certify_radical(L: LeibnizAlgebra, R: Subspace, method: str) -> RadicalResult:
    certs = {"is_ideal": is_ideal(L, R)}
    if not certs["is_ideal"]:
        raise InternalInconsistency("computed radical is not an ideal")
    series = derived_series(restrict(L, R)) if R.dim else []
    certs["derived_series_reaches_zero"] = (not series) or series[-1].dim == 0
    if not certs["derived_series_reaches_zero"]:
        raise InternalInconsistency("computed radical is not solvable")
    return RadicalResult(R, method, certs)


def nilradical(L: LeibnizAlgebra, budget: int = oracle.DEFAULT_BUDGET) -> NilradicalResult:
    """Largest nilpotent ideal.

    Char 0: within the radical R, the nilradical is exactly the set of x whose
    right multiplication (on all of L) is nilpotent.  That set is carved out
    with exact trace forms: start from
        C = { x in R : tr(R_x) = 0 and tr(R_x R_y) = 0 for all basis y of R },
    then, while some canonical basis vector v of C has non-nilpotent R_v, cut
    C with the linear conditions tr(R_x R_v^k) = 0 (k = 1..dim L) and repeat.
    Each cut removes v, so the dimension strictly decreases and the loop
    terminates.  Certificates then confirm C is a nilpotent ideal with
    per-basis-vector nilpotent right multiplications.
    """
    if L.field.modulus is not None:
        N = oracle.nilradical_oracle(L, budget)
        return _certify_nilradical(L, N, "oracle-exhaustive")

    F = L.field
    n = L.dim
    R = radical(L).subspace
    family = _right_mult_family(L)

    def op(x) -> Matrix:
        return _right_mult_of(L, family, x)

    def cut(space: Subspace, cond_rows) -> Subspace:
        # restrict a subspace by linear conditions given as functionals on L
        if space.dim == 0 or not cond_rows:
            return space
        cols = []
        for u in space.rows:
            cols.append([row(u) for row in cond_rows])
        ker = nullspace(Matrix.from_columns(F, cols))
        return Subspace.span(F, n, [embed_vector(space, k) for k in ker])

    base_conditions = [lambda u: op(u).trace()]
    for y in R.rows:
        Ry = op(y)
        base_conditions.append(lambda u, Ry=Ry: op(u).matmul(Ry).trace())
    C = cut(R, base_conditions)

    while True:
        bad = None
        for v in C.rows:
            if not op(v).is_nilpotent():
                bad = v
                break
        if bad is None:
            break
        # R_v^k for k = 1..n
        Rv = op(bad)
        powers = []
        P = Rv
        for _ in range(n):
            powers.append(P)
            P = P.matmul(Rv)
        conds = [lambda u, Pk=Pk: op(u).matmul(Pk).trace() for Pk in powers]
        shrunk = cut(C, conds)
        if shrunk.dim >= C.dim:
            raise InternalInconsistency(
                "trace-form refinement failed to shrink the candidate nilradical")
        C = shrunk

    return _certify_nilradical(L, C, "trace-form-char0")


def _certify_nilradical(L: LeibnizAlgebra, N: Subspace, method: str) -> NilradicalResult:
    certs = {"is_ideal": is_ideal(L, N)}
    if not certs["is_ideal"]:
        raise InternalInconsistency("computed nilradical is not an ideal")
    if N.dim:
        series = lower_central_series(restrict(L, N))
        certs["lower_central_series_reaches_zero"] = series[-1].dim == 0
    else:
        certs["lower_central_series_reaches_zero"] = True
    if not certs["lower_central_series_reaches_zero"]:
        raise InternalInconsistency("computed nilradical is not nilpotent")
    certs["right_mult_nilpotent_per_basis_vector"] = all(
        right_mult(L, v).is_nilpotent() for v in N.rows)
    if not certs["right_mult_nilpotent_per_basis_vector"]:
        raise InternalInconsistency(
            "computed nilradical has a basis vector with non-nilpotent right multiplication")
    return NilradicalResult(N, method, certs)


def frattini_ideal(L: LeibnizAlgebra, budget: int = oracle.DEFAULT_BUDGET) -> Subspace:
    """Largest ideal contained in every maximal subalgebra.

    Nilpotent algebras: every maximal subalgebra contains [L,L], so the
    Frattini ideal is [L,L] (cross-validated against the exhaustive scan on
    nilpotent F_p instances by the test suite).  Otherwise only prime fields
    under the oracle budget are supported.
    """
    if is_nilpotent(L):
        return bracket_span(L, L.full_space(), L.full_space())
    if L.field.modulus is not None:
        return oracle.frattini_oracle(L, budget)
    raise Unsupported("Frattini ideal over Q is only computed for nilpotent algebras")


def _frattini_or_none(L: LeibnizAlgebra, budget: int = oracle.DEFAULT_BUDGET):
    try:
        return frattini_ideal(L, budget)
    except Unsupported:
        return None


def find_complement_B(L: LeibnizAlgebra, budget: int = oracle.DEFAULT_BUDGET):
    """A subalgebra B with L = I + B and I cap B inside the Frattini ideal of B.

    Over a prime field under the oracle budget the search is exhaustive over
    subalgebras, smallest dimension first; candidates whose Frattini ideal is
    not computable are skipped.  Over Q a bounded deterministic heuristic is
    used (subalgebras generated by the standard complement of I and by its
    single-vector perturbations by +-1 multiples of the kernel generators);
    None means the heuristic was exhausted, never that no B exists.
    """
    I = leibniz_kernel(L)
    if L.field.modulus is not None:
        oracle.check_budget(L.dim, L.field.modulus, budget)
        candidates = [S for S in oracle.enumerate_subspaces(L.dim, L.field.modulus, budget)
                      if is_subalgebra(L, S)]
        candidates.sort(key=lambda S: (S.dim, S.rows))
        for B in candidates:
            if _complement_conditions_hold(L, I, B, budget):
                return B
        return None

    full = L.full_space()
    comp = I.complement_basis()
    F = L.field
    perturbations = [None]
    for g in I.rows:
        perturbations.append((g, F.one))
        perturbations.append((g, F.neg(F.one)))
    seen = set()
    tried = 0
    for choice in iproduct(range(len(perturbations)), repeat=len(comp)):
        tried += 1
        if tried > 5000:
            break
        vecs = []
        for c, pi in zip(comp, choice):
            pert = perturbations[pi]
            if pert is None:
                vecs.append(c)
            else:
                g, s = pert
                vecs.append(vec_add(F, c, vec_scale(F, s, g)))
        B = subalgebra_closure(L, Subspace.span(F, L.dim, vecs))
        if B.rows in seen:
            continue
        seen.add(B.rows)
        if (I + B) == full and _complement_conditions_hold(L, I, B, budget):
            return B
    return None


def _complement_conditions_hold(L, I, B, budget) -> bool:
    if not (I + B) == L.full_space():
        return False
    IB = I & B
    if IB.dim == 0:
        return True          # 0 is inside any Frattini ideal
    phiB = _frattini_of_subalgebra(L, B, budget)
    if phiB is None:
        return False         # not computable; skip this candidate
    return IB <= phiB


def _frattini_of_subalgebra(L, B, budget):
    """Frattini ideal of restrict(L, B), embedded back into L; None if not computable."""
    LB = restrict(L, B)
    phi = _frattini_or_none(LB, budget)
    if phi is None:
        return None
    return embed_subspace(B, phi)


def verify_theorem2(L: LeibnizAlgebra, B: Subspace,
                    budget: int = oracle.DEFAULT_BUDGET) -> Theorem2Report:
    """Check N(L/I) = (I + N(B))/I, and that it equals N(L)/I exactly when
    every basis element n of N(B) has nilpotent right multiplication on I.
    """
    I = leibniz_kernel(L)
    premises = {"B_is_subalgebra": is_subalgebra(L, B)}
    if not premises["B_is_subalgebra"]:
        raise PremiseViolation("B is not a subalgebra")
    premises["I_plus_B_is_L"] = (I + B) == L.full_space()
    if not premises["I_plus_B_is_L"]:
        raise PremiseViolation("I + B is not all of L")
    IB = I & B
    if IB.dim == 0:
        premises["I_cap_B_in_frattini_of_B"] = True
    else:
        phiB = _frattini_of_subalgebra(L, B, budget)
        if phiB is None:
            raise Unsupported(
                "cannot verify I cap B <= phi(B): Frattini ideal of B not computable")
        premises["I_cap_B_in_frattini_of_B"] = IB <= phiB
        if not premises["I_cap_B_in_frattini_of_B"]:
            raise PremiseViolation("I cap B is not inside the Frattini ideal of B")

    qp = quotient(L, I)
    lhs = nilradical(qp.quotient, budget).subspace
    NB = nilradical(restrict(L, B), budget).subspace
    NB_in_L = embed_subspace(B, NB)
    rhs = qp.project_subspace(I + NB_in_L)
    formula_equal = lhs == rhs

    condition, condition_witnesses = _right_action_on_kernel_nilpotent(L, I, NB_in_L)
    NL = nilradical(L, budget).subspace
    kernel_quotient_equal = lhs == qp.project_subspace(NL)

    details = {
        "kernel": I,
        "N_of_L": NL,
        "N_of_B_in_L": NB_in_L,
        "basis_level_check_only": L.field.modulus is not None,
    }
    return Theorem2Report(
        premises_ok=premises,
        lhs=lhs,
        rhs=rhs,
        formula_equal=formula_equal,
        nilpotency_condition=condition,
        kernel_quotient_equal=kernel_quotient_equal,
        details=details,
        witnesses=condition_witnesses,
    )


def _right_action_on_kernel_nilpotent(L, I: Subspace, NB_in_L: Subspace):
    """Is R_n|_I nilpotent for every canonical basis vector n of N(B)?

    I is an ideal, so R_n maps I into I and restricts; the restricted matrix
    is tested with M^dim(I) = 0.  Witnesses name the failing n.
    """
    F = L.field
    witnesses = []
    if I.dim == 0:
        return True, witnesses
    for nvec in NB_in_L.rows:
        cols = []
        for u in I.rows:
            c = I.coords(L.bracket(u, nvec))
            if c is None:
                raise InternalInconsistency("kernel is not invariant under right multiplication")
            cols.append(c)
        M = Matrix.from_columns(F, cols)
        if not M.is_nilpotent():
            witnesses.append({"n": nvec, "restricted_matrix": M})
    return (not witnesses), witnesses


def verify_lemma1(L: LeibnizAlgebra, budget: int = oracle.DEFAULT_BUDGET) -> VerificationReport:
    """If I is inside the Frattini ideal, then N(L/I) = N(L)/I."""
    I = leibniz_kernel(L)
    phi = _frattini_or_none(L, budget)
    if phi is None:
        raise Unsupported("Frattini ideal of L not computable")
    if not I <= phi:
        return VerificationReport(
            name="nilradical-of-quotient-under-frattini-premise",
            passed=True,
            applicable=False,
            details={"kernel": I, "frattini": phi,
                     "notice": "premise I <= phi(L) fails; statement not applicable"},
        )
    qp = quotient(L, I)
    lhs = nilradical(qp.quotient, budget).subspace
    rhs = qp.project_subspace(nilradical(L, budget).subspace)
    return VerificationReport(
        name="nilradical-of-quotient-under-frattini-premise",
        passed=lhs == rhs,
        details={"kernel": I, "frattini": phi, "lhs": lhs, "rhs": rhs},
        witnesses=[] if lhs == rhs else [{"lhs": lhs, "rhs": rhs}],
    )


def verify_prop3(L: LeibnizAlgebra) -> VerificationReport:
    """[L, R] is inside N, in char 0; both product orientations are checked
    and reported separately since the one-sided/two-sided reading is ambiguous.
    """
    if L.field.modulus is not None:
        raise UnsupportedField("stated for characteristic zero")
    R = radical(L).subspace
    N = nilradical(L).subspace
    one_sided = bracket_span(L, L.full_space(), R) <= N
    two_sided = two_sided_span(L, L.full_space(), R) <= N
    return VerificationReport(
        name="bracket-of-radical-inside-nilradical",
        passed=one_sided and two_sided,
        details={"one_sided": one_sided, "two_sided": two_sided,
                 "radical": R, "nilradical": N},
    )


def verify_corollary(L: LeibnizAlgebra) -> VerificationReport:
    """[R,R] inside N and nilpotent; L solvable iff [L,L] nilpotent (char 0)."""
    if L.field.modulus is not None:
        raise UnsupportedField("stated for characteristic zero")
    from .core import is_solvable

    R = radical(L).subspace
    N = nilradical(L).subspace
    RR = bracket_span(L, R, R)
    LL = bracket_span(L, L.full_space(), L.full_space())
    # spans of all products of a subalgebra are closed under the bracket
    contained = RR <= N
    rr_nilpotent = RR.dim == 0 or subspace_is_nilpotent(L, RR)
    equivalence = is_solvable(L) == (LL.dim == 0 or subspace_is_nilpotent(L, LL))
    return VerificationReport(
        name="derived-radical-nilpotency-corollary",
        passed=contained and rr_nilpotent and equivalence,
        details={"RR_inside_N": contained, "RR_nilpotent": rr_nilpotent,
                 "solvable_iff_derived_nilpotent": equivalence},
    )
