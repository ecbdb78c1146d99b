"""Exact matrix rank over GF(2), GF(p) and the rationals.

Matrices are lists of sparse rows, each row a ``{column: value}`` dict with
integer values.  Nothing here touches floating point.
"""

from __future__ import annotations

from math import gcd
from typing import Union

Field = int  # 0 for the rationals, otherwise a prime characteristic
FieldLike = Union[str, int]

RATIONALS: Field = 0
GF2: Field = 2


def parse_field(field: FieldLike) -> Field:
    """Accept ``"f2"``, ``"q"``, ``"fp"`` strings (e.g. ``"f3"``) or an integer characteristic."""
    if isinstance(field, str):
        name = field.strip().lower()
        if name in ("q", "qq", "rationals"):
            return RATIONALS
        if name.startswith("f") or name.startswith("gf"):
            field = int(name.lstrip("gf") or "0")
        else:
            raise ValueError(f"unknown field {field!r}")
    if field == 0:
        return RATIONALS
    if field < 2 or any(field % d == 0 for d in range(2, int(field**0.5) + 1)):
        raise ValueError(f"field characteristic must be 0 or a prime, got {field}")
    return field


def field_name(field: Field) -> str:
    return "q" if field == RATIONALS else f"f{field}"


def rank_gf2(rows: list[int]) -> int:
    """Rank of a 0/1 matrix whose rows are packed into integers."""
    pivots: dict[int, int] = {}  # leading bit -> reduced row
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top in pivots:
                row ^= pivots[top]
            else:
                pivots[top] = row
                rank += 1
                break
    return rank


def rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}  # pivot column -> row normalized to 1 there
    rank = 0
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                rank += 1
                break
            f = row[col]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank


def rank_q(rows: list[dict[int, int]]) -> int:
    """Rank over the rationals by fraction-free integer elimination.

    Each reduction step replaces ``row`` by ``a*row - b*pivot`` and divides out
    the row content, which keeps entries small for boundary matrices.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                rank += 1
                break
            a, b = piv[col], row[col]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            if new:
                content = 0
                for v in new.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    new = {c: v // content for c, v in new.items()}
            row = new
    return rank


def rank(rows: list[dict[int, int]], field: Field) -> int:
    if field == RATIONALS:
        return rank_q(rows)
    if field == GF2:
        packed = []
        for r in rows:
            bits = 0
            for c, v in r.items():
                if v & 1:
                    bits ^= 1 << c
            packed.append(bits)
        return rank_gf2(packed)
    return rank_mod_p(rows, field)
