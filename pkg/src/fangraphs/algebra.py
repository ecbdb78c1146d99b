"""Squarefree monomial ideals, their Stanley-Reisner complexes, and reduced homology.

A squarefree monomial is stored as the frozenset of its variables, so the lcm
of two monomials is a set union and divisibility is set inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import SimpleGraph, remove_vertices
from .linalg import FieldLike, parse_field, rank

Monomial = frozenset[int]


class IdealError(ValueError):
    pass


def _minimalize(gens: Iterable[Iterable[int]]) -> frozenset[Monomial]:
    ordered = sorted({frozenset(g) for g in gens}, key=len)
    kept: list[Monomial] = []
    for g in ordered:
        if not any(h <= g for h in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """Ideal in the polynomial ring on ``variables``, held by its minimal generators."""

    variables: tuple[int, ...]
    generators: frozenset[Monomial]

    def __init__(self, variables: Iterable[int], generators: Iterable[Iterable[int]] = ()):
        vs = tuple(sorted(set(variables)))
        gens = _minimalize(generators)
        for g in gens:
            if not g:
                raise IdealError("the unit ideal is not a proper squarefree monomial ideal")
            if not g <= set(vs):
                raise IdealError(f"generator {sorted(g)} uses variables outside the ring")
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "generators", gens)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def sorted_generators(self) -> list[tuple[int, ...]]:
        return sorted((tuple(sorted(g)) for g in self.generators), key=lambda t: (len(t), t))

    def contains(self, monomial: Iterable[int]) -> bool:
        m = frozenset(monomial)
        return any(g <= m for g in self.generators)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join("*".join(f"x{v}" for v in g) for g in self.sorted_generators()) + ")"


def edge_ideal(g: SimpleGraph) -> SquarefreeMonomialIdeal:
    return SquarefreeMonomialIdeal(g.vertices, g.edges)


def variable_ideal(variables: Iterable[int], ring: Iterable[int]) -> SquarefreeMonomialIdeal:
    return SquarefreeMonomialIdeal(ring, ([v] for v in variables))


def _same_ring(a: SquarefreeMonomialIdeal, b: SquarefreeMonomialIdeal) -> None:
    if a.variables != b.variables:
        raise IdealError("ideals live in different polynomial rings")


def ideal_sum(a: SquarefreeMonomialIdeal, b: SquarefreeMonomialIdeal) -> SquarefreeMonomialIdeal:
    _same_ring(a, b)
    return SquarefreeMonomialIdeal(a.variables, a.generators | b.generators)


def ideal_intersect(a: SquarefreeMonomialIdeal, b: SquarefreeMonomialIdeal) -> SquarefreeMonomialIdeal:
    _same_ring(a, b)
    return SquarefreeMonomialIdeal(a.variables, (g | h for g in a.generators for h in b.generators))


def decompose_at_vertex(g: SimpleGraph, v: int) -> tuple[SquarefreeMonomialIdeal, SquarefreeMonomialIdeal]:
    """Split the edge ideal at ``v`` into ``J = (x_N(v)) + I(G - N[v])`` and ``K = (x_v) + I(G - v)``."""
    ring = g.vertices
    open_nbhd = g.neighborhood(v)
    closed_nbhd = g.neighborhood(v, closed=True)
    j_gens = [[u] for u in open_nbhd] + list(remove_vertices(g, closed_nbhd).edges)
    k_gens = [[v]] + list(remove_vertices(g, [v]).edges)
    return SquarefreeMonomialIdeal(ring, j_gens), SquarefreeMonomialIdeal(ring, k_gens)


def min_cover_size(ideal: SquarefreeMonomialIdeal) -> int:
    """Fewest variables meeting every generator (height of the ideal)."""
    gens = sorted(ideal.generators, key=len)
    best = len(ideal.variables)

    def search(chosen: frozenset[int]) -> None:
        nonlocal best
        if len(chosen) >= best:
            return
        for g in gens:
            if not g & chosen:
                for x in sorted(g):
                    search(chosen | {x})
                return
        best = len(chosen)

    search(frozenset())
    return best


# -- simplicial complexes -----------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets.

    ``facets == ()`` is the void complex (no faces at all); ``facets ==
    (frozenset(),)`` is the irrelevant complex whose only face is the empty set.
    """

    vertices: tuple[int, ...]
    facets: tuple[frozenset[int], ...]

    def __init__(self, vertices: Iterable[int], facets: Iterable[Iterable[int]]):
        fs = _maximal(frozenset(f) for f in facets)
        verts = set(vertices)
        for f in fs:
            verts |= f
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "facets", tuple(sorted(fs, key=lambda f: (-len(f), sorted(f)))))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            items = sorted(f)
            for r in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, r))
        return out


def _maximal(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    ordered = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for s in ordered:
        if not any(s <= t for t in kept):
            kept.append(s)
    return kept


def stanley_reisner_complex(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Complex of variable sets containing no generator; facets are found by depth-first search."""
    masks, index = _generator_masks(ideal)
    n = len(ideal.variables)
    facets = [frozenset(ideal.variables[i] for i in range(n) if f >> i & 1) for f in _maximal_faces(masks, n)]
    return SimplicialComplex(ideal.variables, facets)


def _generator_masks(ideal: SquarefreeMonomialIdeal) -> tuple[list[int], dict[int, int]]:
    index = {v: i for i, v in enumerate(ideal.variables)}
    masks = [sum(1 << index[x] for x in g) for g in ideal.generators]
    return masks, index


def _maximal_faces(gen_masks: list[int], n: int) -> list[int]:
    faces = enumerate_faces(gen_masks, (1 << n) - 1)
    faces.sort(key=lambda f: -bin(f).count("1"))
    facets: list[int] = []
    for f in faces:
        if not any(f & ~m == 0 for m in facets):
            facets.append(f)
    return facets


def enumerate_faces(gen_masks: list[int], support: int) -> list[int]:
    """All faces inside ``support`` of the complex whose minimal non-faces are ``gen_masks``."""
    by_bit: dict[int, list[int]] = {}
    for m in gen_masks:
        if m & ~support == 0:
            top = m.bit_length() - 1
            by_bit.setdefault(top, []).append(m)
    bits = [i for i in range(support.bit_length()) if support >> i & 1]
    out = [0]
    # grow faces by increasing bit; a non-face is caught when its highest bit is added
    frontier = [(0, 0)]
    while frontier:
        face, start = frontier.pop()
        for idx in range(start, len(bits)):
            b = bits[idx]
            new = face | (1 << b)
            if any(m & ~new == 0 for m in by_bit.get(b, ())):
                continue
            out.append(new)
            frontier.append((new, idx + 1))
    return out


def reduced_homology_from_faces(faces: list[int], field: int) -> dict[int, int]:
    """Reduced Betti numbers of a complex given as a list of bitmask faces.

    An empty list is the void complex and has no homology; ``[0]`` is the
    irrelevant complex with rank one in degree -1.
    """
    if not faces:
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    top = max(by_dim)
    ranks: dict[int, int] = {}  # rank of the boundary map out of dimension d
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim.get(d - 1, ()))}
        rows = []
        for f in by_dim.get(d, ()):
            row: dict[int, int] = {}
            sign = 1
            rest = f
            while rest:
                low = rest & -rest
                row[lower[f ^ low]] = sign
                sign = -sign
                rest ^= low
            rows.append(row)
        ranks[d] = rank(rows, field) if rows and lower else 0
    out = {}
    for d in range(-1, top + 1):
        out[d] = len(by_dim.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return out


def reduced_homology_ranks(c: SimplicialComplex, field: FieldLike = "f2") -> dict[int, int]:
    """Ranks of reduced homology in degrees -1 through ``dim c``."""
    fld = parse_field(field)
    index = {v: i for i, v in enumerate(c.vertices)}
    faces = [sum(1 << index[x] for x in f) for f in c.faces()]
    return reduced_homology_from_faces(faces, fld)
