"""Finite simple graphs with integer labels and the exact combinatorics built on them.

Everything here is a pure function of an immutable :class:`SimpleGraph`.  The
search routines (induced matchings, vertex covers) are exhaustive and meant for
graphs of at most a couple dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or references to unknown vertices."""


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    _adj: Mapping[int, frozenset[int]] = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Iterable[int]] = ()):
        verts = set(vertices)
        norm: set[Edge] = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            norm.add(_edge(u, v))
            verts.update((u, v))
        for x in verts:
            if not isinstance(x, int) or x < 0:
                raise GraphError(f"vertex labels must be non-negative integers, got {x!r}")
        adj: dict[int, set[int]] = {x: set() for x in verts}
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", {x: frozenset(s) for x, s in adj.items()})

    @classmethod
    def strict(cls, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        """Build a graph, rejecting duplicate edges and endpoints outside ``vertices``."""
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex labels")
        vset = set(verts)
        seen: set[Edge] = set()
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} does not have two endpoints")
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {e!r} has an endpoint outside the vertex set")
            key = _edge(u, v)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        return cls(verts, seen)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def degree(self, v: int) -> int:
        return len(self.neighborhood(v))

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighborhood(self, v: int, closed: bool = False) -> frozenset[int]:
        try:
            nbrs = self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None
        return nbrs | {v} if closed else nbrs


def neighborhood(g: SimpleGraph, v: int, closed: bool = False) -> frozenset[int]:
    return g.neighborhood(v, closed)


def induced_subgraph(g: SimpleGraph, a: Iterable[int]) -> SimpleGraph:
    keep = set(a)
    bad = sorted(keep.difference(g.vertices))
    if bad:
        raise GraphError(f"vertices not in graph: {bad}")
    return SimpleGraph(keep, (e for e in g.edges if e[0] in keep and e[1] in keep))


def remove_vertices(g: SimpleGraph, w: Iterable[int]) -> SimpleGraph:
    drop = set(w)
    bad = sorted(drop.difference(g.vertices))
    if bad:
        raise GraphError(f"vertices not in graph: {bad}")
    return induced_subgraph(g, set(g.vertices) - drop)


def leaves(g: SimpleGraph) -> frozenset[int]:
    return frozenset(v for v in g.vertices if g.degree(v) == 1)


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> tuple[SimpleGraph, dict[int, int]]:
    """Union with ``g2`` shifted past the largest label of ``g1``.

    Returns the union and the map from ``g2`` labels to their new labels.
    """
    shift = max(g1.vertices) + 1 if g1.vertices else 0
    relabel = {v: v + shift for v in g2.vertices}
    verts = list(g1.vertices) + list(relabel.values())
    edges = list(g1.edges) + [(relabel[u], relabel[v]) for u, v in g2.edges]
    return SimpleGraph(verts, edges), relabel


def path_graph(n: int, start: int = 1) -> SimpleGraph:
    verts = range(start, start + n)
    return SimpleGraph(verts, ((i, i + 1) for i in range(start, start + n - 1)))


def complete_graph(n: int, start: int = 1) -> SimpleGraph:
    verts = list(range(start, start + n))
    return SimpleGraph(verts, ((u, v) for i, u in enumerate(verts) for v in verts[i + 1:]))


def cycle_graph(n: int, start: int = 1) -> SimpleGraph:
    g = path_graph(n, start)
    return SimpleGraph(g.vertices, list(g.edges) + [(start, start + n - 1)])


# -- chordality ---------------------------------------------------------------

def max_cardinality_search(g: SimpleGraph) -> list[int]:
    """Vertices in maximum-cardinality-search visiting order (ties by label)."""
    weight = {v: 0 for v in g.vertices}
    order: list[int] = []
    while weight:
        v = max(weight, key=lambda x: (weight[x], -x))
        del weight[v]
        order.append(v)
        for u in g.neighborhood(v):
            if u in weight:
                weight[u] += 1
    return order


def is_perfect_elimination_ordering(g: SimpleGraph, order: list[int]) -> bool:
    """Check that every vertex's later neighbours form a clique."""
    if sorted(order) != list(g.vertices):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighborhood(v) if pos[u] > pos[v]]
        for i, u in enumerate(later):
            if any(w not in g.neighborhood(u) for w in later[i + 1:]):
                return False
    return True


def is_chordal(g: SimpleGraph) -> bool:
    # the reverse of an MCS order is a PEO exactly when g is chordal
    order = max_cardinality_search(g)[::-1]
    return is_perfect_elimination_ordering(g, order)


# -- exact searches on bitmasks -----------------------------------------------

def _bitmasks(g: SimpleGraph) -> tuple[list[int], list[int]]:
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * len(g.vertices)
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return list(g.vertices), adj


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def induced_matching_number(g: SimpleGraph) -> int:
    """Size of a largest induced matching, by exhaustive branch and bound."""
    _, adj = _bitmasks(g)
    closed = [adj[i] | (1 << i) for i in range(len(adj))]
    best = 0

    def search(alive: int, size: int) -> None:
        nonlocal best
        # drop vertices with no live neighbour; they can never be matched
        while True:
            dead = 0
            for i in _bits(alive):
                if not adj[i] & alive:
                    dead |= 1 << i
            if not dead:
                break
            alive &= ~dead
        if size > best:
            best = size
        if not alive or size + bin(alive).count("1") // 2 <= best:
            return
        # branch on a max-degree vertex: matched through one of its edges, or unmatched
        v = max(_bits(alive), key=lambda i: bin(adj[i] & alive).count("1"))
        for u in _bits(adj[v] & alive):
            search(alive & ~(closed[v] | closed[u]), size + 1)
        search(alive & ~(1 << v), size)

    search((1 << len(adj)) - 1, 0)
    return best


def min_vertex_cover_size(g: SimpleGraph) -> int:
    """Exact minimum vertex cover size by branching on a max-degree vertex."""
    _, adj = _bitmasks(g)

    def solve(alive: int) -> int:
        degs = [(bin(adj[i] & alive).count("1"), i) for i in _bits(alive)]
        degs = [d for d in degs if d[0] > 0]
        if not degs:
            return 0
        d, v = max(degs)
        if d == 1:
            # what is left is a perfect matching on the touched vertices
            return len(degs) // 2
        # either v is in the cover, or all its neighbours are
        nbrs = adj[v] & alive
        return min(
            1 + solve(alive & ~(1 << v)),
            bin(nbrs).count("1") + solve(alive & ~nbrs & ~(1 << v)),
        )

    return solve((1 << len(adj)) - 1)


def max_independent_set_size(g: SimpleGraph) -> int:
    return len(g) - min_vertex_cover_size(g)


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    def __post_init__(self):
        if not is_matching(self.edges):
            raise GraphError("edges of a matching must be pairwise disjoint")


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[int]
    minimal: bool = False

    @classmethod
    def of(cls, g: SimpleGraph, c: Iterable[int]) -> "VertexCover":
        cs = frozenset(c)
        if not is_vertex_cover(g, cs):
            raise GraphError(f"{sorted(cs)} does not cover every edge")
        return cls(cs, is_minimal_vertex_cover(g, cs))


def is_vertex_cover(g: SimpleGraph, c: Iterable[int]) -> bool:
    cs = set(c)
    return all(u in cs or v in cs for u, v in g.edges)


def is_minimal_vertex_cover(g: SimpleGraph, c: Iterable[int]) -> bool:
    cs = set(c)
    return is_vertex_cover(g, cs) and not any(is_vertex_cover(g, cs - {x}) for x in cs)


def is_matching(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_induced_matching(g: SimpleGraph, edges: Iterable[Edge]) -> bool:
    es = {_edge(*e) for e in edges}
    if not es <= g.edges or not is_matching(es):
        return False
    touched = {x for e in es for x in e}
    return all(e in es for e in induced_subgraph(g, touched).edges)
