"""Fan graphs over a complete graph and the two leaf gluings between them.

A fan graph starts from the clique on ``1..n``.  Each block is an ordered list of
base vertices ``w_1, ..., w_r`` together with branch sizes ``a_1, ..., a_r``;
branch ``j`` is a new clique on ``a_j`` vertices that meets the base clique in
exactly ``{w_1, ..., w_j}``.  The ``a_j - j`` vertices of a branch that are not
base vertices get fresh labels ``n+1, n+2, ...`` in (block, position, local)
order, so a spec always realizes to the same labelled graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graph import SimpleGraph, GraphError, remove_vertices


class FanSpecError(ValueError):
    """A fan spec or composite spec violates the construction rules."""

    def __init__(self, message: str, block: int | None = None, position: int | None = None):
        where = []
        if block is not None:
            where.append(f"block {block}")
        if position is not None:
            where.append(f"position {position}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.block = block
        self.position = position


@dataclass(frozen=True)
class FanBlock:
    vertices: tuple[int, ...]
    branch_sizes: tuple[int, ...]

    @property
    def excesses(self) -> tuple[int, ...]:
        """``h_j = a_j - j`` for positions ``j = 1..r``."""
        return tuple(a - j for j, a in enumerate(self.branch_sizes, start=1))


@dataclass(frozen=True)
class FanGraphSpec:
    n: int
    blocks: tuple[FanBlock, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self,
            "blocks",
            tuple(b if isinstance(b, FanBlock) else FanBlock(tuple(b[0]), tuple(b[1])) for b in self.blocks),
        )
        self.validate()

    @classmethod
    def of(cls, n: int, blocks: Iterable[tuple[Sequence[int], Sequence[int]]] = ()) -> "FanGraphSpec":
        return cls(n, tuple(FanBlock(tuple(v), tuple(a)) for v, a in blocks))

    def validate(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise FanSpecError(f"base clique needs n >= 2, got {self.n!r}")
        seen: set[int] = set()
        for i, block in enumerate(self.blocks, start=1):
            if not block.vertices:
                raise FanSpecError("block has no vertices", block=i)
            if len(block.vertices) != len(block.branch_sizes):
                raise FanSpecError(
                    f"{len(block.vertices)} vertices but {len(block.branch_sizes)} branch sizes", block=i
                )
            for j, (w, a) in enumerate(zip(block.vertices, block.branch_sizes), start=1):
                if not 1 <= w <= self.n:
                    raise FanSpecError(f"vertex {w} is not in [1, {self.n}]", block=i, position=j)
                if w in seen:
                    raise FanSpecError(f"vertex {w} already used by another block", block=i, position=j)
                seen.add(w)
                if a <= j:
                    raise FanSpecError(f"branch size a must exceed position (a={a}, j={j})", block=i, position=j)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def w(self) -> frozenset[int]:
        return frozenset(x for b in self.blocks for x in b.vertices)

    @property
    def num_vertices(self) -> int:
        return self.n + sum(sum(b.excesses) for b in self.blocks)

    @property
    def p(self) -> int:
        """Number of branches with excess at least 2."""
        return sum(1 for b in self.blocks for h in b.excesses if h >= 2)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "blocks": [{"vertices": list(b.vertices), "branch_sizes": list(b.branch_sizes)} for b in self.blocks],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "FanGraphSpec":
        try:
            n = doc["n"]
            blocks = [(blk["vertices"], blk["branch_sizes"]) for blk in doc.get("blocks", [])]
        except (KeyError, TypeError) as exc:
            raise FanSpecError(f"malformed fan spec document: {exc}") from None
        return cls.of(n, blocks)


LabelMap = dict[tuple[int, int, int], int]


def realize(spec: FanGraphSpec) -> tuple[SimpleGraph, LabelMap]:
    """Build the fan graph; the map sends (block, position, local) to a fresh label.

    All three indices start at 1.
    """
    edges: list[tuple[int, int]] = [(u, v) for u in range(1, spec.n + 1) for v in range(u + 1, spec.n + 1)]
    labels: LabelMap = {}
    nxt = spec.n + 1
    for i, block in enumerate(spec.blocks, start=1):
        for j, a in enumerate(block.branch_sizes, start=1):
            fresh = list(range(nxt, nxt + a - j))
            nxt += a - j
            for local, x in enumerate(fresh, start=1):
                labels[(i, j, local)] = x
            clique = list(block.vertices[:j]) + fresh
            edges.extend((u, v) for idx, u in enumerate(clique) for v in clique[idx + 1:])
    return SimpleGraph(range(1, nxt), edges), labels


class Leaf(NamedTuple):
    leaf: int
    neighbor: int
    block: int


def leaf_catalog(spec: FanGraphSpec) -> list[Leaf]:
    """Degree-one vertices whose neighbour is a fan vertex, sorted by label."""
    g, _ = realize(spec)
    block_of = {x: i for i, b in enumerate(spec.blocks, start=1) for x in b.vertices}
    out = []
    for v in g.vertices:
        if g.degree(v) == 1:
            (u,) = g.neighborhood(v)
            if u in block_of:
                out.append(Leaf(v, u, block_of[u]))
    return out


def find_leaf(spec: FanGraphSpec, leaf: int) -> Leaf:
    for entry in leaf_catalog(spec):
        if entry.leaf == leaf:
            return entry
    raise FanSpecError(f"vertex {leaf} is not a leaf attached to a fan vertex")


@dataclass(frozen=True)
class FanQuantities:
    """Block statistics of a fan seen from one of its leaves.

    Blocks are listed with the block holding the leaf's neighbour first.
    """

    leaf: int
    neighbor: int
    T: int
    T_prime: int
    p: int
    w_size: int
    n: int
    block_sizes: tuple[int, ...]
    excesses: tuple[tuple[int, ...], ...]

    @property
    def unique_max_at_leaf(self) -> bool:
        return self.T_prime == self.T - 1


def theorem_quantities(spec: FanGraphSpec, leaf: int) -> FanQuantities:
    entry = find_leaf(spec, leaf)
    order = [entry.block - 1] + [i for i in range(spec.k) if i != entry.block - 1]
    blocks = [spec.blocks[i] for i in order]
    sizes = tuple(len(b.vertices) for b in blocks)
    return FanQuantities(
        leaf=leaf,
        neighbor=entry.neighbor,
        T=max(sizes),
        T_prime=max((sizes[0] - 1,) + sizes[1:]),
        p=spec.p,
        w_size=sum(sizes),
        n=spec.n,
        block_sizes=sizes,
        excesses=tuple(b.excesses for b in blocks),
    )


# -- gluing -------------------------------------------------------------------

@dataclass(frozen=True)
class Side:
    spec: FanGraphSpec
    leaf: int


@dataclass(frozen=True)
class CompositeSpec:
    op: str
    left: Side
    right: Side

    def __post_init__(self):
        if self.op not in ("circ", "star"):
            raise FanSpecError(f"unknown composite operation {self.op!r}")

    def to_dict(self) -> dict:
        return {
            "op": self.op,
            "left": {"spec": self.left.spec.to_dict(), "leaf": self.left.leaf},
            "right": {"spec": self.right.spec.to_dict(), "leaf": self.right.leaf},
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CompositeSpec":
        try:
            sides = [Side(FanGraphSpec.from_dict(doc[s]["spec"]), doc[s]["leaf"]) for s in ("left", "right")]
            return cls(doc["op"], *sides)
        except (KeyError, TypeError) as exc:
            raise FanSpecError(f"malformed composite spec document: {exc}") from None

    @property
    def num_vertices(self) -> int:
        total = self.left.spec.num_vertices + self.right.spec.num_vertices
        return total - (3 if self.op == "circ" else 1)


@dataclass(frozen=True)
class Composite:
    """A glued graph with the label maps from each side into it.

    Deleted vertices are absent from the maps; ``joined`` is the identified vertex.
    """

    graph: SimpleGraph
    left_labels: dict[int, int]
    right_labels: dict[int, int]
    joined: int


def _checked_leaf(g: SimpleGraph, f: int, side: str, need_neighbor_degree: bool) -> int:
    if f not in g or g.degree(f) != 1:
        raise FanSpecError(f"{side}: designated vertex {f} is not a leaf")
    (v,) = g.neighborhood(f)
    if need_neighbor_degree and g.degree(v) < 2:
        raise FanSpecError(f"{side}: neighbour {v} of leaf {f} must have degree >= 2 for the circ operation")
    return v


def _glue(left: SimpleGraph, right: SimpleGraph, drop_left: set[int], drop_right: set[int],
          keep: int, merge: int) -> Composite:
    """Shift ``right`` past ``left``, drop vertices, and merge right's ``merge`` into ``keep``."""
    shift = max(left.vertices)
    rmap = {v: v + shift for v in right.vertices if v not in drop_right}
    rmap[merge] = keep
    lmap = {v: v for v in left.vertices if v not in drop_left}
    g1 = remove_vertices(left, drop_left)
    g2 = remove_vertices(right, drop_right)
    edges = list(g1.edges) + [(rmap[u], rmap[v]) for u, v in g2.edges]
    graph = SimpleGraph(list(lmap.values()) + list(rmap.values()), edges)
    return Composite(graph, lmap, rmap, keep)


def glue_graphs(op: str, g1: SimpleGraph, f1: int, g2: SimpleGraph, f2: int) -> Composite:
    """Glue two arbitrary graphs at designated leaves."""
    v1 = _checked_leaf(g1, f1, "left", op == "circ")
    v2 = _checked_leaf(g2, f2, "right", op == "circ")
    if op == "circ":
        return _glue(g1, g2, {f1}, {f2}, keep=v1, merge=v2)
    if op == "star":
        return _glue(g1, g2, set(), set(), keep=f1, merge=f2)
    raise FanSpecError(f"unknown composite operation {op!r}")


def compose(c: CompositeSpec) -> Composite:
    g1, _ = realize(c.left.spec)
    g2, _ = realize(c.right.spec)
    try:
        return glue_graphs(c.op, g1, c.left.leaf, g2, c.right.leaf)
    except GraphError as exc:
        raise FanSpecError(str(exc)) from None


def circ_compose(c: CompositeSpec) -> Composite:
    if c.op != "circ":
        raise FanSpecError(f"expected a circ composite, got {c.op!r}")
    return compose(c)


def star_compose(c: CompositeSpec) -> Composite:
    if c.op != "star":
        raise FanSpecError(f"expected a star composite, got {c.op!r}")
    return compose(c)
