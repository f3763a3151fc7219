"""Structured outcomes of theorem checks, serializable for the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def scalar_to_json(a):
    if isinstance(a, Fraction):
        return [a.numerator, a.denominator]
    return int(a)


def subspace_to_json(s):
    return [[scalar_to_json(a) for a in row] for row in s.rows]


def _jsonable(x):
    from .exactlin import Matrix, Subspace

    if isinstance(x, Subspace):
        return {"ambient_dim": x.ambient_dim, "basis": subspace_to_json(x)}
    if isinstance(x, Matrix):
        return [[scalar_to_json(a) for a in r] for r in x.rows]
    if isinstance(x, Fraction):
        return scalar_to_json(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class VerificationReport:
    """Outcome of one theorem/property check.

    `applicable` is False when a premise fails: the statement is then not
    falsified by this instance and `passed` is True with a notice.
    """

    name: str
    passed: bool
    applicable: bool = True
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "applicable": self.applicable,
            "details": _jsonable(self.details),
            "witnesses": _jsonable(self.witnesses),
        }
