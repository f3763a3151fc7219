"""Algebra file format: a JSON text document with fields

    field : "Q" or "F<p>"
    dim   : integer
    basis : list of labels
    table : sparse list of entries [i, j, [k, num, den], [k, num, den], ...]

Indices are 0-based; omitted products are zero; num/den are exact integers
(den = 1 over a prime field).  Round-trip (parse after print) is the identity.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .core import LeibnizAlgebra
from .exactlin import Field


class ParseError(ValueError):
    pass


def field_to_str(F: Field) -> str:
    return "Q" if F.modulus is None else f"F{F.modulus}"


def field_from_str(s: str) -> Field:
    if s == "Q":
        return Field()
    m = re.fullmatch(r"F(\d+)", s)
    if not m:
        raise ParseError(f"bad field {s!r}: expected 'Q' or 'F<p>'")
    try:
        return Field(int(m.group(1)))
    except ValueError as e:
        raise ParseError(str(e)) from None


def algebra_to_dict(L: LeibnizAlgebra) -> dict:
    table = []
    z = L.field.zero
    for i in range(L.dim):
        for j in range(L.dim):
            v = L.table[i][j]
            comps = []
            for k, c in enumerate(v):
                if c == z:
                    continue
                if isinstance(c, Fraction):
                    comps.append([k, c.numerator, c.denominator])
                else:
                    comps.append([k, int(c), 1])
            if comps:
                table.append([i, j] + comps)
    return {
        "field": field_to_str(L.field),
        "dim": L.dim,
        "basis": list(L.labels),
        "table": table,
    }


def dumps_algebra(L: LeibnizAlgebra) -> str:
    return json.dumps(algebra_to_dict(L), indent=2) + "\n"


def algebra_from_dict(d: dict) -> LeibnizAlgebra:
    try:
        F = field_from_str(d["field"])
        dim = int(d["dim"])
        basis = list(d["basis"])
        raw = d["table"]
    except (KeyError, TypeError) as e:
        raise ParseError(f"missing or malformed field: {e}") from None
    if len(basis) != dim:
        raise ParseError(f"basis has {len(basis)} labels, dim is {dim}")
    products = {}
    for entry in raw:
        if len(entry) < 3:
            raise ParseError(f"table entry too short: {entry}")
        i, j = entry[0], entry[1]
        if not (0 <= i < dim and 0 <= j < dim):
            raise ParseError(f"table entry indices out of range: {entry}")
        comps = {}
        for item in entry[2:]:
            if len(item) != 3:
                raise ParseError(f"component must be [k, num, den]: {item}")
            k, num, den = item
            if not 0 <= k < dim:
                raise ParseError(f"component index out of range: {item}")
            comps[k] = F.scalar(num, den)
        if (i, j) in products:
            raise ParseError(f"duplicate table entry for ({i}, {j})")
        products[(i, j)] = comps
    return LeibnizAlgebra.from_products(F, dim, products, basis)


def loads_algebra(text: str) -> LeibnizAlgebra:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(d, dict):
        raise ParseError("top level must be an object")
    return algebra_from_dict(d)


def load_algebra(path) -> LeibnizAlgebra:
    with open(path) as f:
        return loads_algebra(f.read())


def save_algebra(L: LeibnizAlgebra, path):
    with open(path, "w") as f:
        f.write(dumps_algebra(L))
