"""Ground truth by exhaustive enumeration over small prime fields.

Subspaces of F_p^n are enumerated exactly once via their RREF canonical forms,
grouped by pivot-column pattern; everything else (ideal lattices, brute-force
nilradical / radical / Frattini ideal) filters or folds that stream.  The
sum-of-all-nilpotent-ideals construction asserts, on concrete data, that the
sum is itself a nilpotent ideal containing every nilpotent ideal; a failure
aborts because it could only be an implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator

from .core import (
    LeibnizAlgebra,
    check_leibniz,
    is_ideal,
    is_subalgebra,
    largest_contained_ideal,
    subspace_is_nilpotent,
    subspace_is_solvable,
)
from .errors import BudgetExceeded, TheoremViolation, UnsupportedField
from .exactlin import Field, Subspace, subspace_count

DEFAULT_BUDGET = 10 ** 6


def _require_prime_field(L: LeibnizAlgebra):
    if L.field.modulus is None:
        raise UnsupportedField("the oracle only works over prime fields")


def check_budget(n: int, p: int, budget: int = DEFAULT_BUDGET) -> int:
    total = subspace_count(n, p)
    if total > budget:
        raise BudgetExceeded(
            f"F_{p}^{n} has {total} subspaces, above the budget of {budget}")
    return total


def enumerate_subspaces(n: int, p: int, budget: int = DEFAULT_BUDGET) -> Iterator[Subspace]:
    """Every subspace of F_p^n exactly once, by pivot-column pattern.

    Rows are built directly in RREF: pivot entries 1, zeros below/above pivots,
    free entries ranging over F_p at positions right of each pivot and outside
    the pivot columns.
    """
    check_budget(n, p, budget)
    F = Field(p)
    yield Subspace.zero(F, n)
    for k in range(1, n + 1):
        for pivots in combinations(range(n), k):
            free_pos = [(r, c) for r in range(k)
                        for c in range(pivots[r] + 1, n) if c not in pivots]
            for vals in product(range(p), repeat=len(free_pos)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), v in zip(free_pos, vals):
                    rows[r][c] = v
                yield Subspace(F, n, rows)


@dataclass
class LatticeScan:
    """Full subspace scan of an F_p algebra."""

    algebra: LeibnizAlgebra
    subspaces: int
    ideals: list = field(default_factory=list)
    nilpotent_ideals: list = field(default_factory=list)
    solvable_ideals: list = field(default_factory=list)
    maximal_subalgebras: list = field(default_factory=list)

    def to_dict(self) -> dict:
        from .reports import subspace_to_json

        return {
            "field": str(self.algebra.field),
            "dim": self.algebra.dim,
            "subspaces": self.subspaces,
            "ideals": len(self.ideals),
            "nilpotent_ideals": len(self.nilpotent_ideals),
            "solvable_ideals": len(self.solvable_ideals),
            "maximal_subalgebras": [subspace_to_json(s) for s in self.maximal_subalgebras],
            "nilradical": subspace_to_json(nilradical_from_scan(self)),
        }


def scan(L: LeibnizAlgebra, budget: int = DEFAULT_BUDGET) -> LatticeScan:
    _require_prime_field(L)
    p = L.field.modulus
    result = LatticeScan(L, subspaces=check_budget(L.dim, p, budget))
    subalgebras = []
    for S in enumerate_subspaces(L.dim, p, budget):
        if is_subalgebra(L, S):
            subalgebras.append(S)
        if is_ideal(L, S):
            result.ideals.append(S)
            if subspace_is_nilpotent(L, S):
                result.nilpotent_ideals.append(S)
            if subspace_is_solvable(L, S):
                result.solvable_ideals.append(S)
    proper = [S for S in subalgebras if S.dim < L.dim]
    result.maximal_subalgebras = [
        S for S in proper
        if not any(S.leq(T) and S.dim < T.dim for T in proper)
    ]
    return result


def nilradical_from_scan(s: LatticeScan) -> Subspace:
    L = s.algebra
    total = L.zero_space()
    for J in s.nilpotent_ideals:
        total = total + J
    # Theorem-1 / maximal-nilpotent-ideal assertions, on concrete data
    if not is_ideal(L, total):
        raise TheoremViolation("sum of nilpotent ideals is not an ideal")
    if total.dim and not subspace_is_nilpotent(L, total):
        raise TheoremViolation("sum of nilpotent ideals is not nilpotent")
    for J in s.nilpotent_ideals:
        if not J.leq(total):
            raise TheoremViolation("nilpotent ideal not contained in the sum")
    return total


def nilradical_oracle(L: LeibnizAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace:
    """Sum of all nilpotent ideals, with the maximality assertions of the scan."""
    return nilradical_from_scan(scan(L, budget))


def radical_oracle(L: LeibnizAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace:
    """Sum of all solvable ideals, asserted to be a solvable ideal."""
    s = scan(L, budget)
    total = L.zero_space()
    for J in s.solvable_ideals:
        total = total + J
    if not is_ideal(L, total):
        raise TheoremViolation("sum of solvable ideals is not an ideal")
    if total.dim and not subspace_is_solvable(L, total):
        raise TheoremViolation("sum of solvable ideals is not solvable")
    return total


def frattini_oracle(L: LeibnizAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace:
    """Intersect all maximal subalgebras, then take the largest contained ideal.

    Maximality is by inclusion among all enumerated proper subalgebras; no
    hyperplane shortcut, so this is correct for non-nilpotent algebras too.
    """
    s = scan(L, budget)
    inter = L.full_space()
    for M in s.maximal_subalgebras:
        inter = inter & M
    return largest_contained_ideal(L, inter)


def reduce_mod_p(L: LeibnizAlgebra, p: int):
    """Reduction of a char-0 table mod p, or None if inadmissible.

    Admissible only when every denominator is a unit mod p and the Leibniz
    identity still holds after reduction; inadmissible instances are skipped,
    never silently altered.
    """
    if L.field.modulus is not None:
        raise UnsupportedField("reduce_mod_p expects a rational table")
    F = Field(p)
    try:
        table = [[[F.scalar(c.numerator, c.denominator) for c in v] for v in row]
                 for row in L.table]
    except ZeroDivisionError:
        return None
    Lp = LeibnizAlgebra(F, L.dim, table, L.labels)
    if not check_leibniz(Lp).passed:
        return None
    return Lp
