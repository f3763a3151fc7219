"""Leibniz algebras given by structure constants, and everything computable
directly from the table: identity checking, multiplication operators, subspace
products, ideals, series, quotients, the kernel of squares, liesation.

Convention is right Leibniz throughout: [x,[y,z]] = [[x,y],z] - [[x,z],y],
i.e. every y -> [y,x] is a derivation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    AmbientMismatch,
    FieldMismatch,
    InternalInconsistency,
    NotAnIdeal,
    NotASubalgebra,
)
from .exactlin import (
    Field,
    Matrix,
    Subspace,
    unit_vec,
    vec_add,
    vec_scale,
    zero_vec,
)
from .reports import VerificationReport


class LeibnizAlgebra:
    """Finite-dimensional algebra with bracket [e_i, e_j] = sum_k c[i][j][k] e_k.

    The table is stored as table[i][j] = component vector of [e_i, e_j].
    Whether the Leibniz identity actually holds is checked by check_leibniz,
    not assumed at construction.
    """

    __slots__ = ("field", "dim", "labels", "table")

    def __init__(self, field: Field, dim: int, table, labels: Optional[Sequence[str]] = None):
        self.field = field
        self.dim = dim
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        if len(self.table) != dim or any(len(row) != dim for row in self.table):
            raise ValueError("table must be dim x dim")
        for row in self.table:
            for v in row:
                if len(v) != dim:
                    raise ValueError("product vectors must have length dim")
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i+1}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("need one label per basis vector")

    @classmethod
    def from_products(cls, field: Field, dim: int, products: dict,
                      labels: Optional[Sequence[str]] = None) -> "LeibnizAlgebra":
        """Build from a sparse {(i, j): {k: scalar}} map; omitted products are 0."""
        table = [[list(zero_vec(field, dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), comps in products.items():
            for k, c in comps.items():
                table[i][j][k] = field.scalar(c) if isinstance(c, int) else c
        return cls(field, dim, table, labels)

    def basis_vector(self, i: int):
        return unit_vec(self.field, self.dim, i)

    def bracket(self, u: Sequence, v: Sequence):
        """Bilinear extension of the table: [u, v]."""
        F = self.field
        if len(u) != self.dim or len(v) != self.dim:
            raise AmbientMismatch("vector length != algebra dim")
        out = zero_vec(F, self.dim)
        for i, a in enumerate(u):
            if a == F.zero:
                continue
            for j, b in enumerate(v):
                if b == F.zero:
                    continue
                out = vec_add(F, out, vec_scale(F, F.mul(a, b), self.table[i][j]))
        return out

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def __eq__(self, other):
        return (isinstance(other, LeibnizAlgebra) and self.field == other.field
                and self.dim == other.dim and self.table == other.table)

    def __repr__(self):
        return f"LeibnizAlgebra(dim {self.dim} over {self.field}, basis {list(self.labels)})"


def check_leibniz(L: LeibnizAlgebra) -> VerificationReport:
    """Verify [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples.

    Sufficient by trilinearity.  Every failing triple is reported with both
    sides, not just the first.
    """
    F = L.field
    failures = []
    for i in range(L.dim):
        ei = L.basis_vector(i)
        for j in range(L.dim):
            ej = L.basis_vector(j)
            for k in range(L.dim):
                ek = L.basis_vector(k)
                lhs = L.bracket(ei, L.bracket(ej, ek))
                rhs = tuple(F.sub(a, b) for a, b in
                            zip(L.bracket(L.bracket(ei, ej), ek),
                                L.bracket(L.bracket(ei, ek), ej)))
                if lhs != rhs:
                    failures.append({
                        "triple": (L.labels[i], L.labels[j], L.labels[k]),
                        "indices": (i, j, k),
                        "lhs": lhs,
                        "rhs": rhs,
                    })
    return VerificationReport(
        name="leibniz-identity",
        passed=not failures,
        details={"triples_checked": L.dim ** 3, "failures": len(failures)},
        witnesses=failures,
    )


def right_mult(L: LeibnizAlgebra, x: Sequence) -> Matrix:
    """Matrix of R_x : y -> [y, x] in the fixed basis (columns are [e_i, x])."""
    cols = [L.bracket(L.basis_vector(i), x) for i in range(L.dim)]
    return Matrix.from_columns(L.field, cols) if L.dim else Matrix(L.field, [])


def left_mult(L: LeibnizAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y]."""
    cols = [L.bracket(x, L.basis_vector(i)) for i in range(L.dim)]
    return Matrix.from_columns(L.field, cols) if L.dim else Matrix(L.field, [])


def bracket_span(L: LeibnizAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """span{ [a,b] : a in basis(A), b in basis(B) } -- one-sided product."""
    _check_ambient(L, A)
    _check_ambient(L, B)
    return Subspace.span(L.field, L.dim,
                         [L.bracket(a, b) for a in A.rows for b in B.rows])


def two_sided_span(L: LeibnizAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """span of [A,B] together with [B,A]."""
    return bracket_span(L, A, B) + bracket_span(L, B, A)


def is_subalgebra(L: LeibnizAlgebra, A: Subspace) -> bool:
    return bracket_span(L, A, A) <= A


def is_ideal(L: LeibnizAlgebra, A: Subspace) -> bool:
    return two_sided_span(L, A, L.full_space()) <= A


def ideal_closure(L: LeibnizAlgebra, S: Subspace) -> Subspace:
    """Smallest ideal containing S: fixed point of V -> V + [V,L] + [L,V]."""
    _check_ambient(L, S)
    V = S
    while True:
        W = V + two_sided_span(L, V, L.full_space())
        if W.dim == V.dim:
            return V
        V = W


def subalgebra_closure(L: LeibnizAlgebra, S: Subspace) -> Subspace:
    """Smallest subalgebra containing S: fixed point of V -> V + [V,V]."""
    _check_ambient(L, S)
    V = S
    while True:
        W = V + bracket_span(L, V, V)
        if W.dim == V.dim:
            return V
        V = W


def leibniz_kernel(L: LeibnizAlgebra) -> Subspace:
    """span{x^2 : x in L}, computed by polarization.

    Squares of the e_i together with squares of all e_i + e_j span every
    square, since [x+y,x+y] = x^2 + y^2 + [x,y] + [y,x].  The result is
    verified to be an ideal; a failure can only mean the table is not Leibniz.
    """
    F = L.field
    gens = [L.bracket(L.basis_vector(i), L.basis_vector(i)) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            v = vec_add(F, L.basis_vector(i), L.basis_vector(j))
            gens.append(L.bracket(v, v))
    I = Subspace.span(F, L.dim, gens)
    if not is_ideal(L, I):
        raise InternalInconsistency(
            "span of squares is not an ideal; the table violates the Leibniz identity")
    return I


@dataclass
class QuotientPresentation:
    """A quotient L/J with explicit projection and a fixed section.

    Section representatives are the standard basis vectors at the non-pivot
    columns of J's canonical basis, so the presentation is deterministic.
    """

    parent: LeibnizAlgebra
    ideal: Subspace
    quotient: LeibnizAlgebra
    projection: Matrix          # parent dim -> quotient dim
    section: list               # quotient basis -> parent vectors

    def project_vector(self, v: Sequence):
        return self.projection.matvec(v)

    def project_subspace(self, S: Subspace) -> Subspace:
        return Subspace.span(self.quotient.field, self.quotient.dim,
                             [self.project_vector(r) for r in S.rows])

    def lift_vector(self, w: Sequence):
        F = self.parent.field
        v = zero_vec(F, self.parent.dim)
        for c, rep in zip(w, self.section):
            v = vec_add(F, v, vec_scale(F, c, rep))
        return v

    def pull_back(self, S: Subspace) -> Subspace:
        """Preimage under the projection of a subspace of the quotient."""
        vecs = list(self.ideal.rows) + [self.lift_vector(r) for r in S.rows]
        return Subspace.span(self.parent.field, self.parent.dim, vecs)


def quotient(L: LeibnizAlgebra, J: Subspace) -> QuotientPresentation:
    """Quotient algebra L/J on deterministic coset representatives."""
    _check_ambient(L, J)
    if not is_ideal(L, J):
        raise NotAnIdeal("quotient by a subspace that is not an ideal")
    F = L.field
    section = J.complement_basis()
    m = len(section)
    piv = J.pivots
    nonpiv = [c for c in range(L.dim) if c not in piv]

    def reduce_coords(v):
        # kill pivot coordinates with J's RREF rows; what remains at the
        # non-pivot columns are the quotient coordinates
        res = list(v)
        for row, pc in zip(J.rows, piv):
            c = res[pc]
            if c != F.zero:
                res = [F.sub(a, F.mul(c, b)) for a, b in zip(res, row)]
        return tuple(res[c] for c in nonpiv)

    projection = Matrix.from_columns(F, [reduce_coords(L.basis_vector(i)) for i in range(L.dim)]) \
        if m else Matrix.zeros(F, 0, L.dim)
    table = [[reduce_coords(L.bracket(section[s], section[t])) for t in range(m)]
             for s in range(m)]
    labels = [L.labels[c] + "~" for c in nonpiv]
    Q = LeibnizAlgebra(F, m, table, labels)
    return QuotientPresentation(L, J, Q, projection, section)


def liesation(L: LeibnizAlgebra) -> QuotientPresentation:
    """Quotient by the kernel of squares; the result is a Lie algebra."""
    qp = quotient(L, leibniz_kernel(L))
    if not is_lie(qp.quotient):
        raise InternalInconsistency("quotient by the span of squares is not Lie")
    return qp


def is_lie(L: LeibnizAlgebra) -> bool:
    """[x,x] = 0 for all x; on the table this is c[i][i] = 0 and antisymmetry."""
    F = L.field
    z = zero_vec(F, L.dim)
    for i in range(L.dim):
        if L.table[i][i] != z:
            return False
        for j in range(i + 1, L.dim):
            if vec_add(F, L.table[i][j], L.table[j][i]) != z:
                return False
    return True


def _series(L: LeibnizAlgebra, step) -> list:
    full = L.full_space()
    if full.dim == 0:
        return [full]
    terms = [full]
    while True:
        nxt = step(terms[-1])
        terms.append(nxt)
        if nxt.dim == 0 or nxt == terms[-2]:
            return terms


def lower_central_series(L: LeibnizAlgebra) -> list:
    """L^1 = L, L^{k+1} = [L^k, L]; ends at 0 or at the first repeated term."""
    return _series(L, lambda V: bracket_span(L, V, L.full_space()))


def derived_series(L: LeibnizAlgebra) -> list:
    """L^(1) = L, L^(k+1) = [L^(k), L^(k)]."""
    return _series(L, lambda V: bracket_span(L, V, V))


def is_nilpotent(L: LeibnizAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def is_solvable(L: LeibnizAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def direct_sum(A: LeibnizAlgebra, B: LeibnizAlgebra) -> LeibnizAlgebra:
    """Block-diagonal table; all cross products zero."""
    if A.field != B.field:
        raise FieldMismatch("direct sum over different fields")
    F = A.field
    n = A.dim + B.dim
    table = [[list(zero_vec(F, n)) for _ in range(n)] for _ in range(n)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                table[i][j][k] = A.table[i][j][k]
    for i in range(B.dim):
        for j in range(B.dim):
            for k in range(B.dim):
                table[A.dim + i][A.dim + j][A.dim + k] = B.table[i][j][k]
    return LeibnizAlgebra(F, n, table, list(A.labels) + list(B.labels))


def restrict(L: LeibnizAlgebra, A: Subspace) -> LeibnizAlgebra:
    """The bracket of a subalgebra in A's canonical basis.

    Subspaces of the restricted algebra live in restricted coordinates; use
    embed_subspace / A.rows to map them back into L.
    """
    _check_ambient(L, A)
    if not is_subalgebra(L, A):
        raise NotASubalgebra("restriction to a non-subalgebra")
    table = []
    for u in A.rows:
        row = []
        for v in A.rows:
            c = A.coords(L.bracket(u, v))
            assert c is not None  # guaranteed: A is a subalgebra
            row.append(c)
        table.append(row)
    labels = [f"b{i+1}" for i in range(A.dim)]
    return LeibnizAlgebra(L.field, A.dim, table, labels)


def embed_vector(A: Subspace, w: Sequence):
    """Map restricted coordinates (w.r.t. A's canonical basis) back into L."""
    F = A.field
    v = zero_vec(F, A.ambient_dim)
    for c, row in zip(w, A.rows):
        v = vec_add(F, v, vec_scale(F, c, row))
    return v


def embed_subspace(A: Subspace, S: Subspace) -> Subspace:
    """Embed a subspace of restrict(L, A) as a subspace of L."""
    if S.ambient_dim != A.dim:
        raise AmbientMismatch("subspace does not live in the restricted coordinates")
    return Subspace.span(A.field, A.ambient_dim, [embed_vector(A, r) for r in S.rows])


def subspace_is_nilpotent(L: LeibnizAlgebra, A: Subspace) -> bool:
    """Nilpotency of a subalgebra, via the restricted lower central series."""
    return is_nilpotent(restrict(L, A))


def subspace_is_solvable(L: LeibnizAlgebra, A: Subspace) -> bool:
    return is_solvable(restrict(L, A))


def center(L: LeibnizAlgebra) -> Subspace:
    """{ x : [x, L] = [L, x] = 0 }, via the kernel of stacked multiplications."""
    F = L.field
    rows = []
    for j in range(L.dim):
        ej = L.basis_vector(j)
        rows.extend(right_mult(L, ej).rows)
        rows.extend(left_mult(L, ej).rows)
    if not rows:
        return L.full_space()
    from .exactlin import nullspace

    return Subspace.span(F, L.dim, nullspace(Matrix(F, rows)))


def largest_contained_ideal(L: LeibnizAlgebra, K: Subspace) -> Subspace:
    """Largest ideal of L inside K: fixed point of
    K -> { x in K : [x, e_j], [e_j, x] in K for all j }, a linear computation.
    """
    from .exactlin import nullspace

    _check_ambient(L, K)
    F = L.field
    V = K
    while True:
        if V.dim == 0:
            return V
        piv = V.pivots

        def residual(v):
            res = list(v)
            for row, pc in zip(V.rows, piv):
                c = res[pc]
                if c != F.zero:
                    res = [F.sub(a, F.mul(c, b)) for a, b in zip(res, row)]
            return res

        # rows of the condition matrix: residuals of products of V's basis,
        # as linear functionals of the coefficient vector
        cond_cols = []
        for u in V.rows:
            col = []
            for j in range(L.dim):
                ej = L.basis_vector(j)
                col.extend(residual(L.bracket(u, ej)))
                col.extend(residual(L.bracket(ej, u)))
            cond_cols.append(col)
        ker = nullspace(Matrix.from_columns(F, cond_cols))
        W = Subspace.span(F, L.dim, [embed_vector(V, k) for k in ker])
        if W.dim == V.dim:
            return W
        V = W


def _check_ambient(L: LeibnizAlgebra, A: Subspace):
    if A.field != L.field:
        raise FieldMismatch("subspace over a different field than the algebra")
    if A.ambient_dim != L.dim:
        raise AmbientMismatch("subspace ambient dim != algebra dim")
