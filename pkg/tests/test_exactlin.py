from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibnizalg.errors import AmbientMismatch
from leibnizalg.exactlin import (
    QQ,
    Field,
    Matrix,
    Subspace,
    complement_basis,
    gaussian_binomial,
    nullspace,
    rref,
    subspace_count,
    subspace_intersect,
    subspace_leq,
    subspace_sum,
    unit_vec,
)

F5 = Field(5)


def qmat(rows):
    return Matrix(QQ, [[Fraction(a) for a in r] for r in rows])


# ---------------------------------------------------------------- rref

def test_rref_dependent_rows_collapse():
    assert rref(qmat([[0, 1], [0, 2]])).rows == [[0, 1]]


def test_rref_identity_fixed():
    assert rref(Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 3)


def test_rref_pivot_normalization():
    assert rref(qmat([[2, 4]])).rows == [[1, 2]]


def test_rref_over_prime_field():
    m = Matrix(F5, [[2, 4], [1, 3]])
    r = rref(m)
    assert r.rows == [[1, 0], [0, 1]]


# ---------------------------------------------------------------- subspaces

def test_sum_of_axes_is_full():
    a = Subspace.span(QQ, 2, [unit_vec(QQ, 2, 0)])
    b = Subspace.span(QQ, 2, [unit_vec(QQ, 2, 1)])
    assert subspace_sum(a, b) == Subspace.full(QQ, 2)


def test_sum_idempotent():
    v = Subspace.span(QQ, 3, [(Fraction(1), Fraction(2), Fraction(0))])
    assert subspace_sum(v, v) == v


def test_sum_with_skew_line():
    a = Subspace.span(QQ, 2, [(Fraction(1), Fraction(0))])
    b = Subspace.span(QQ, 2, [(Fraction(1), Fraction(1))])
    assert subspace_sum(a, b) == Subspace.full(QQ, 2)


def test_intersection_of_planes():
    e = [unit_vec(QQ, 3, i) for i in range(3)]
    a = Subspace.span(QQ, 3, [e[0], e[1]])
    b = Subspace.span(QQ, 3, [e[1], e[2]])
    assert subspace_intersect(a, b) == Subspace.span(QQ, 3, [e[1]])


def test_intersection_with_zero():
    v = Subspace.full(QQ, 3)
    z = Subspace.zero(QQ, 3)
    assert subspace_intersect(v, z) == z


def test_membership():
    e = [unit_vec(QQ, 3, i) for i in range(3)]
    a = Subspace.span(QQ, 3, [e[0], e[1]])
    assert a.contains((Fraction(1), Fraction(1), Fraction(0)))
    assert not a.contains(e[2])
    assert subspace_leq(Subspace.zero(QQ, 3), a)


def test_ambient_mismatch_raises():
    a = Subspace.full(QQ, 2)
    b = Subspace.full(QQ, 3)
    with pytest.raises(AmbientMismatch):
        subspace_sum(a, b)
    with pytest.raises(AmbientMismatch):
        a.contains((QQ.zero,) * 3)


def test_complement_of_axis():
    a = Subspace.span(QQ, 2, [unit_vec(QQ, 2, 0)])
    assert complement_basis(a) == [unit_vec(QQ, 2, 1)]


def test_complement_of_full_space_empty():
    assert complement_basis(Subspace.full(QQ, 4)) == []


def test_complement_of_diagonal_line():
    # pivot of span{e1+e2} is column 0, so the complement is e2
    a = Subspace.span(QQ, 2, [(Fraction(1), Fraction(1))])
    assert complement_basis(a) == [unit_vec(QQ, 2, 1)]


def test_complement_always_completes_basis():
    a = Subspace.span(QQ, 4, [(Fraction(1), Fraction(2), Fraction(0), Fraction(1)),
                              (Fraction(0), Fraction(0), Fraction(1), Fraction(3))])
    total = Subspace.span(QQ, 4, list(a.rows) + complement_basis(a))
    assert total == Subspace.full(QQ, 4)


# ---------------------------------------------------------------- nullspace

def test_nullspace_orthogonal_to_rows():
    m = qmat([[1, 2, 3], [0, 1, 1]])
    for v in nullspace(m):
        assert all(x == QQ.zero for x in m.matvec(v))
    assert len(nullspace(m)) == 1


# ---------------------------------------------------------------- properties

fractions_st = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 7))


@st.composite
def q_matrices(draw, max_dim=4):
    nrows = draw(st.integers(1, max_dim))
    ncols = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(fractions_st, min_size=ncols, max_size=ncols),
                         min_size=nrows, max_size=nrows))
    return Matrix(QQ, rows)


@st.composite
def fp_matrices(draw, p=5, max_dim=4):
    nrows = draw(st.integers(1, max_dim))
    ncols = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=ncols, max_size=ncols),
                         min_size=nrows, max_size=nrows))
    return Matrix(Field(p), rows)


@given(q_matrices())
def test_rref_idempotent_q(m):
    r = rref(m)
    assert rref(r) == r


@given(fp_matrices())
def test_rref_idempotent_fp(m):
    r = rref(m)
    assert rref(r) == r


@given(q_matrices())
def test_rref_preserves_row_space(m):
    r = rref(m)
    s1 = Subspace.span(QQ, m.ncols, m.rows)
    s2 = Subspace.span(QQ, m.ncols, r.rows)
    assert s1 == s2


@given(q_matrices(max_dim=4), q_matrices(max_dim=4))
@settings(max_examples=60)
def test_dimension_formula(ma, mb):
    n = 4
    pad = lambda rows: [list(r) + [Fraction(0)] * (n - len(r)) for r in rows]
    a = Subspace.span(QQ, n, pad(ma.rows))
    b = Subspace.span(QQ, n, pad(mb.rows))
    assert (a + b).dim + (a & b).dim == a.dim + b.dim


@given(fractions_st, fractions_st, fractions_st)
def test_field_axioms_q(a, b, c):
    F = QQ
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero
    if a != F.zero:
        assert F.mul(a, F.inv(a)) == F.one


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_field_axioms_f7(x, y, z):
    F = Field(7)
    assert F.add(x, y) == F.add(y, x)
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.add(x, F.neg(x)) == F.zero
    if x != 0:
        assert F.mul(x, F.inv(x)) == F.one


def test_field_requires_prime_modulus():
    with pytest.raises(ValueError):
        Field(6)
    with pytest.raises(ValueError):
        Field(1)


# ---------------------------------------------------------------- counting

def test_gaussian_binomials():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(3, 1, 2) == 7
    assert subspace_count(2, 2) == 5
    assert subspace_count(3, 2) == 16
    assert subspace_count(1, 5) == 2
