import pytest

from leibnizalg import corpus
from leibnizalg.core import check_leibniz, is_ideal, subspace_is_nilpotent
from leibnizalg.errors import BudgetExceeded, UnsupportedField
from leibnizalg.exactlin import Field, Subspace, subspace_count
from leibnizalg.oracle import (
    enumerate_subspaces,
    frattini_oracle,
    nilradical_oracle,
    radical_oracle,
    reduce_mod_p,
    scan,
)
from leibnizalg.radicals import frattini_ideal, nilradical, radical


def reducible_corpus(p, cap):
    out = []
    for e in corpus.standard_entries():
        if e.algebra.dim > cap:
            continue
        Lp = reduce_mod_p(e.algebra, p)
        if Lp is not None:
            out.append((e.name, Lp))
    return out


# ---------------------------------------------------------------- enumeration

def test_subspace_counts_match_gaussian_binomials():
    for n, p in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (1, 5)]:
        subs = list(enumerate_subspaces(n, p))
        assert len(subs) == subspace_count(n, p)
        assert len(set(subs)) == len(subs)  # canonical forms, no duplicates


def test_enumerated_subspaces_are_canonical():
    for S in enumerate_subspaces(3, 2):
        assert S == Subspace.span(Field(2), 3, S.rows)


def test_budget_enforced():
    with pytest.raises(BudgetExceeded):
        list(enumerate_subspaces(10, 7, budget=1000))


def test_oracle_rejects_rational_algebras():
    with pytest.raises(UnsupportedField):
        nilradical_oracle(corpus.example1().algebra)


# ---------------------------------------------------------------- reduction

def test_reduction_keeps_identity():
    for p in (2, 3):
        Lp = reduce_mod_p(corpus.example1().algebra, p)
        assert Lp is not None and check_leibniz(Lp).passed


def test_reduction_rejects_bad_denominator():
    from leibnizalg.core import LeibnizAlgebra
    from leibnizalg.exactlin import QQ

    L = LeibnizAlgebra.from_products(QQ, 2, {(0, 0): {1: QQ.scalar(1, 2)}})
    assert reduce_mod_p(L, 2) is None


# ---------------------------------------------------------------- nilradical oracle

def test_nilradical_oracle_example1_f3():
    Lp = reduce_mod_p(corpus.example1().algebra, 3)
    N = nilradical_oracle(Lp)
    assert N == Subspace.span(Field(3), 2, [(0, 1)])


def test_nilradical_oracle_abelian_f2():
    Lp = reduce_mod_p(corpus.abelian(3).algebra, 2)
    assert nilradical_oracle(Lp) == Lp.full_space()


def test_nilradical_oracle_sl2_f7():
    Lp = reduce_mod_p(corpus.sl2().algebra, 7)
    assert nilradical_oracle(Lp).dim == 0


def test_theorem1_pairwise_sums_nilpotent():
    for p, cap in [(2, 5), (3, 4)]:
        for name, Lp in reducible_corpus(p, cap):
            s = scan(Lp)
            nil = s.nilpotent_ideals
            for i in range(len(nil)):
                for j in range(i, len(nil)):
                    total = nil[i] + nil[j]
                    assert is_ideal(Lp, total), name
                    assert total.dim == 0 or subspace_is_nilpotent(Lp, total), name


def test_nilpotent_ideal_poset_has_unique_maximum():
    for p, cap in [(2, 5), (3, 4)]:
        for name, Lp in reducible_corpus(p, cap):
            s = scan(Lp)
            maxima = [J for J in s.nilpotent_ideals
                      if not any(J.leq(K) and J.dim < K.dim for K in s.nilpotent_ideals)]
            assert len(maxima) == 1, name
            assert maxima[0] == nilradical_oracle(Lp), name


def test_oracle_agrees_with_fp_algorithm_path():
    for p, cap in [(2, 5), (3, 4)]:
        for name, Lp in reducible_corpus(p, cap):
            assert nilradical_oracle(Lp) == nilradical(Lp).subspace, name
            assert radical_oracle(Lp) == radical(Lp).subspace, name


# ---------------------------------------------------------------- radical / frattini

def test_radical_oracle_example2_f3():
    Lp = reduce_mod_p(corpus.example2(2, 1).algebra, 3)
    assert radical_oracle(Lp) == Lp.full_space()


def test_frattini_oracle_heisenberg_f2():
    Lp = reduce_mod_p(corpus.heisenberg().algebra, 2)
    assert frattini_oracle(Lp) == Subspace.span(Field(2), 3, [(0, 0, 1)])


def test_frattini_oracle_abelian_is_zero():
    Lp = reduce_mod_p(corpus.abelian(3).algebra, 2)
    assert frattini_oracle(Lp).dim == 0


def test_frattini_derived_rule_matches_oracle_on_nilpotent_instances():
    from leibnizalg.core import bracket_span, is_nilpotent

    for p, cap in [(2, 5), (3, 4)]:
        for name, Lp in reducible_corpus(p, cap):
            if not is_nilpotent(Lp):
                continue
            derived_rule = bracket_span(Lp, Lp.full_space(), Lp.full_space())
            assert frattini_oracle(Lp) == derived_rule, name


def test_char0_nilradical_reduces_to_oracle_result():
    # integer RREF bases of the char-0 nilradical reduce mod p to the
    # exhaustive result on every reducible corpus entry
    for p, cap in [(2, 5), (3, 4)]:
        F = Field(p)
        for e in corpus.standard_entries():
            if e.algebra.dim > cap:
                continue
            Lp = reduce_mod_p(e.algebra, p)
            if Lp is None:
                continue
            N0 = nilradical(e.algebra).subspace
            try:
                rows = [[F.scalar(c.numerator, c.denominator) for c in row]
                        for row in N0.rows]
            except ZeroDivisionError:
                continue
            reduced = Subspace.span(F, Lp.dim, rows)
            assert reduced <= nilradical_oracle(Lp), e.name
