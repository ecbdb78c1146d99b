import functools
import random

from hypothesis import settings, strategies as st

from fangraphs.algebra import edge_ideal
from fangraphs.betti import oracle_invariants
from fangraphs.graph import SimpleGraph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def cached_oracle(g: SimpleGraph, field: str = "f2"):
    return oracle_invariants(edge_ideal(g), field)


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> SimpleGraph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return SimpleGraph(range(1, n + 1), edges)


@st.composite
def graphs(draw, min_vertices=1, max_vertices=8):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(range(1, n + 1), [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def fan_specs(draw, max_n=5, max_excess=3):
    """Arbitrary valid fan specs with shuffled base labels."""
    from fangraphs.fans import FanGraphSpec

    n = draw(st.integers(2, max_n))
    base = draw(st.permutations(range(1, n + 1)))
    used = draw(st.integers(0, n))
    cuts = sorted(draw(st.sets(st.integers(1, max(used - 1, 1)), max_size=max(used - 1, 0))))
    cuts = [c for c in cuts if 0 < c < used]
    bounds = [0] + cuts + [used]
    blocks = []
    for lo, hi in zip(bounds, bounds[1:]):
        if hi <= lo:
            continue
        verts = list(base[lo:hi])
        sizes = [j + draw(st.integers(1, max_excess)) for j in range(1, len(verts) + 1)]
        blocks.append((verts, sizes))
    return FanGraphSpec.of(n, blocks)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
