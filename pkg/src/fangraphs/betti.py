"""Graded Betti numbers of squarefree monomial quotients from first principles.

Two independent routes are provided.  :func:`betti_table_hochster` sums reduced
homology of restrictions of the Stanley-Reisner complex over all variable
subsets.  :func:`betti_table_taylor` takes homology of the Taylor complex after
tensoring with the field, one squarefree multidegree at a time.  Neither uses
any closed-form statement about graphs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .algebra import (
    SquarefreeMonomialIdeal,
    _generator_masks,
    enumerate_faces,
    min_cover_size,
    reduced_homology_from_faces,
    stanley_reisner_complex,
)
from .linalg import FieldLike, field_name, parse_field, rank
from .report import InvariantReport

MAX_HOCHSTER_VARIABLES = 16
MAX_TAYLOR_GENERATORS = 12


class CapacityError(RuntimeError):
    """The input is too large for an exhaustive oracle."""


@dataclass(frozen=True)
class BettiTable:
    n: int
    entries: dict[tuple[int, int], int]

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def depth(self) -> int:
        # Auslander-Buchsbaum over the polynomial ring in n variables
        return self.n - self.pd

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())],
            "pd": self.pd,
            "depth": self.depth,
            "reg": self.reg,
        }

    def format(self) -> str:
        """Macaulay2-style table: rows are j - i, columns are i."""
        cols = range(self.pd + 1)
        rows = range(self.reg + 1)
        width = max(len(str(b)) for b in self.entries.values()) + 1
        lines = ["      " + "".join(f"{i:>{width}}" for i in cols)]
        for r in rows:
            cells = "".join(f"{(self[(i, i + r)] or '.'):>{width}}" for i in cols)
            lines.append(f"{r:>4}: {cells}")
        return "\n".join(lines)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def betti_table_hochster(
    ideal: SquarefreeMonomialIdeal,
    field: FieldLike = "f2",
    max_variables: int = MAX_HOCHSTER_VARIABLES,
) -> BettiTable:
    fld = parse_field(field)
    n = len(ideal.variables)
    if n > max_variables:
        raise CapacityError(f"Hochster sweep limited to {max_variables} variables, ideal has {n}")
    masks, _ = _generator_masks(ideal)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    entries[(0, 0)] = 1
    for sigma in range(1, 1 << n):
        inside = [m for m in masks if m & ~sigma == 0]
        covered = 0
        for m in inside:
            covered |= m
        if covered != sigma:
            # some variable of sigma lies in no non-face: the restriction is a cone
            continue
        faces = enumerate_faces(inside, sigma)
        size = bin(sigma).count("1")
        for d, r in reduced_homology_from_faces(faces, fld).items():
            if r:
                entries[(size - d - 1, size)] += r
    return BettiTable(n, dict(entries))


def betti_table_taylor(
    ideal: SquarefreeMonomialIdeal,
    field: FieldLike = "f2",
    max_generators: int = MAX_TAYLOR_GENERATORS,
) -> BettiTable:
    fld = parse_field(field)
    masks, _ = _generator_masks(ideal)
    masks.sort()
    m = len(masks)
    if m > max_generators:
        raise CapacityError(f"Taylor sweep limited to {max_generators} generators, ideal has {m}")
    lcm = [0] * (1 << m)
    for u in range(1, 1 << m):
        low = u & -u
        lcm[u] = lcm[u ^ low] | masks[low.bit_length() - 1]
    strata: dict[int, list[int]] = defaultdict(list)
    for u in range(1 << m):
        strata[lcm[u]].append(u)
    entries: dict[tuple[int, int], int] = {}
    for mono, subsets in strata.items():
        # after tensoring with the field only faces with the same lcm survive
        by_size: dict[int, list[int]] = defaultdict(list)
        for u in subsets:
            by_size[bin(u).count("1")].append(u)
        index = {u: k for us in by_size.values() for k, u in enumerate(us)}
        ranks: dict[int, int] = {}
        for i, us in by_size.items():
            if i == 0:
                continue
            rows = []
            for u in us:
                row = {}
                sign = 1
                for b in _bits(u):
                    face = u ^ (1 << b)
                    if lcm[face] == mono:
                        row[index[face]] = sign
                    sign = -sign
                rows.append(row)
            ranks[i] = rank(rows, fld)
        deg = bin(mono).count("1")
        for i, us in by_size.items():
            beta = len(us) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if beta:
                entries[(i, deg)] = entries.get((i, deg), 0) + beta
    return BettiTable(len(ideal.variables), entries)


def oracle_invariants(
    ideal: SquarefreeMonomialIdeal,
    field: FieldLike = "f2",
    max_variables: int = MAX_HOCHSTER_VARIABLES,
) -> InvariantReport:
    """Dimension, depth and regularity of ``S/I`` with no closed-form input.

    Dimension is computed twice (largest Stanley-Reisner facet, and number of
    variables minus the smallest cover of the generators) and the two must agree.
    """
    table = betti_table_hochster(ideal, field, max_variables)
    complex_ = stanley_reisner_complex(ideal)
    dim_facets = complex_.dimension + 1
    dim_cover = len(ideal.variables) - min_cover_size(ideal)
    if dim_facets != dim_cover:
        raise AssertionError(f"dimension routes disagree: facets {dim_facets}, covers {dim_cover}")
    return InvariantReport(
        dim=dim_facets,
        depth=table.depth,
        reg=table.reg,
        method="oracle",
        intermediates={"pd": table.pd, "field": field_name(parse_field(field))},
    )
