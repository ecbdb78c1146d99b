"""Deterministic instance generation and formula-versus-oracle verification."""

from __future__ import annotations

import hashlib
import json
import random
import time
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional, Union

from . import formulas
from .algebra import (
    SquarefreeMonomialIdeal,
    decompose_at_vertex,
    edge_ideal,
    ideal_intersect,
    ideal_sum,
)
from .betti import oracle_invariants
from .fans import CompositeSpec, FanGraphSpec, Side, compose, leaf_catalog, realize
from .graph import SimpleGraph, complete_graph, path_graph, remove_vertices
from .report import InvariantReport

FAMILIES = ("fans", "circ", "star", "paths", "completes")
VERDICTS = ("match", "mismatch", "formula-inapplicable")

# fan corpora up to this many vertices are enumerated in full, larger ones sampled
EXHAUSTIVE_LIMIT = 11


@dataclass(frozen=True)
class GeneratorConfig:
    family: str
    max_vertices: int
    samples: int = 150
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.max_vertices < 2:
            raise ValueError("max_vertices must be at least 2")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "max_vertices": self.max_vertices, "samples": self.samples, "seed": self.seed}


Payload = Union[FanGraphSpec, CompositeSpec, int]


@dataclass(frozen=True)
class Instance:
    id: str
    family: str
    payload: Payload

    def to_dict(self) -> dict[str, Any]:
        if isinstance(self.payload, int):
            return {"n": self.payload}
        return self.payload.to_dict()

    @property
    def digest(self) -> str:
        blob = json.dumps({"family": self.family, "instance": self.to_dict()}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def graph(self) -> SimpleGraph:
        if self.family == "paths":
            return path_graph(self.payload)
        if self.family == "completes":
            return complete_graph(self.payload)
        if isinstance(self.payload, FanGraphSpec):
            return realize(self.payload)[0]
        return compose(self.payload).graph


# -- enumeration --------------------------------------------------------------

def _excess_sequences(r: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Sequences of ``r`` positive integers with sum at most ``budget``."""
    if r == 0:
        yield ()
        return
    for h in range(1, budget - (r - 1) + 1):
        for rest in _excess_sequences(r - 1, budget - h):
            yield (h,) + rest


def enumerate_fans(max_vertices: int, min_vertices: int = 2) -> Iterator[FanGraphSpec]:
    """Every fan spec with at most ``max_vertices`` vertices, once per block multiset.

    Base vertices are handed to blocks consecutively from 1, which loses nothing
    since the base clique is symmetric.  Order: by n, then by block multiset.
    """
    for n in range(2, max_vertices + 1):
        budget = max_vertices - n
        shapes = sorted(hs for r in range(1, n + 1) for hs in _excess_sequences(r, budget))

        def grow(start: int, used: int, spent: int, acc: list[tuple[int, ...]]):
            yield acc
            for idx in range(start, len(shapes)):
                hs = shapes[idx]
                if used + len(hs) <= n and spent + sum(hs) <= budget:
                    yield from grow(idx, used + len(hs), spent + sum(hs), acc + [hs])

        for shape in grow(0, 0, 0, []):
            blocks, nxt = [], 1
            for hs in shape:
                verts = list(range(nxt, nxt + len(hs)))
                nxt += len(hs)
                blocks.append((verts, [h + j for j, h in enumerate(hs, start=1)]))
            spec = FanGraphSpec.of(n, blocks)
            if spec.num_vertices >= min_vertices:
                yield spec


def rooted_fans(max_vertices: int) -> list[Side]:
    """Fans with a designated leaf, one per block that carries a leaf."""
    out = []
    for spec in enumerate_fans(max_vertices):
        seen = set()
        for entry in leaf_catalog(spec):
            if entry.block not in seen:
                seen.add(entry.block)
                out.append(Side(spec, entry.leaf))
    return out


def _pick(rng: random.Random, items: list, k: int) -> list:
    if len(items) <= k:
        return list(items)
    return [items[i] for i in sorted(rng.sample(range(len(items)), k))]


def _composite_pairs(rng: random.Random, op: str, top: int, samples: int) -> list[CompositeSpec]:
    """Unordered pairs of rooted fans whose gluing has at most ``top`` vertices.

    Pairs are indexed lazily so that only the sampled ones are built.
    """
    shrink = 3 if op == "circ" else 1
    # the smallest fan with a leaf is the path on three vertices
    sides = sorted(rooted_fans(top + shrink - 3), key=lambda s: s.spec.num_vertices)
    sizes = [s.spec.num_vertices for s in sides]
    starts, total = [], 0
    for i, size in enumerate(sizes):
        starts.append(total)
        total += max(0, bisect_right(sizes, top + shrink - size) - i)
    chosen = range(total) if total <= samples else sorted(rng.sample(range(total), samples))
    out = []
    for idx in chosen:
        i = bisect_right(starts, idx) - 1
        out.append(CompositeSpec(op, sides[i], sides[i + idx - starts[i]]))
    return out


def generate_instances(config: GeneratorConfig) -> list[Instance]:
    rng = random.Random(config.seed)
    fam, top = config.family, config.max_vertices
    if fam in ("paths", "completes"):
        payloads: list[Payload] = list(range(2, top + 1))
    elif fam == "fans":
        payloads = list(enumerate_fans(top))
        if top > EXHAUSTIVE_LIMIT:
            payloads = _pick(rng, payloads, config.samples)
    else:
        payloads = _composite_pairs(rng, fam, top, config.samples)
    return [Instance(f"{fam}-{i:05d}", fam, p) for i, p in enumerate(payloads)]


# -- verification -------------------------------------------------------------

@dataclass
class VerificationRecord:
    instance_id: str
    digest: str
    instance: dict[str, Any]
    formula: Optional[dict[str, Any]]
    oracle: Optional[dict[str, Any]]
    verdict: str
    failed_hypothesis: Optional[str] = None
    mismatched: list[str] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        doc = {
            "instance_id": self.instance_id,
            "digest": self.digest,
            "instance": self.instance,
            "formula": self.formula,
            "oracle": self.oracle,
            "verdict": self.verdict,
            "failed_hypothesis": self.failed_hypothesis,
            "mismatched": self.mismatched,
        }
        if timings:
            doc["timing"] = self.timing
        return doc


def formula_report(inst: Instance) -> tuple[Optional[InvariantReport], Optional[str]]:
    """Closed-form report for an instance and the first failed hypothesis, if any.

    For glued fans depth and regularity are tried separately, so one can apply
    while the other does not.
    """
    p = inst.payload
    if inst.family == "paths":
        d, r = formulas.path_invariants(p)
        return InvariantReport(None, d, r, "formula"), None
    if inst.family == "completes":
        d, r = formulas.complete_invariants(p)
        return InvariantReport(1, d, r, "formula"), None
    if isinstance(p, FanGraphSpec):
        return formulas.fan_invariants(p), None
    depth_fn = formulas.circ_depth_formula if p.op == "circ" else formulas.star_depth_formula
    reg_fn = formulas.circ_regularity_formula if p.op == "circ" else formulas.star_regularity_formula
    parts, failed, inter = {}, None, {}
    for name, fn in (("depth", depth_fn), ("reg", reg_fn)):
        try:
            rep = fn(p.left, p.right)
        except formulas.HypothesisError as exc:
            failed = failed or f"{name}: {exc}"
            continue
        parts[name] = getattr(rep, name)
        inter[name] = rep.intermediates
    if not parts:
        return None, failed
    return InvariantReport(None, parts.get("depth"), parts.get("reg"), "formula", inter), failed


def verify_instance(inst: Instance, field: str = "f2") -> VerificationRecord:
    t0 = time.perf_counter()
    formula, failed = formula_report(inst)
    t1 = time.perf_counter()
    oracle = oracle_invariants(edge_ideal(inst.graph()), field)
    t2 = time.perf_counter()
    mismatched = formula.disagreements(oracle) if formula else []
    if mismatched:
        verdict = "mismatch"
    elif failed:
        verdict = "formula-inapplicable"
    else:
        verdict = "match"
    return VerificationRecord(
        instance_id=inst.id,
        digest=inst.digest,
        instance=inst.to_dict(),
        formula=formula.to_dict() if formula else None,
        oracle=oracle.to_dict(),
        verdict=verdict,
        failed_hypothesis=failed,
        mismatched=mismatched,
        timing={"formula": round(t1 - t0, 6), "oracle": round(t2 - t1, 6)},
    )


def _verify_star(args: tuple[Instance, str]) -> VerificationRecord:
    return verify_instance(*args)


def run_campaign(config: GeneratorConfig, field: str = "f2", jobs: int = 1) -> tuple[list[VerificationRecord], dict]:
    instances = generate_instances(config)
    work = [(inst, field) for inst in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_verify_star, work, chunksize=4))
    else:
        records = [verify_instance(*w) for w in work]
    counts = {v: 0 for v in VERDICTS}
    for rec in records:
        counts[rec.verdict] += 1
    summary = {"config": config.to_dict(), "field": field, "total": len(records), "verdicts": counts}
    return records, summary


def campaign_document(records: list[VerificationRecord], summary: dict, timings: bool = False) -> dict:
    return {"summary": summary, "records": [r.to_dict(timings) for r in records]}


# -- decomposition at a vertex ------------------------------------------------

def decomposition_report(g: SimpleGraph, v: int, field: str = "f2") -> dict[str, Any]:
    """The ideals J, K of the vertex split at ``v`` and whether its four identities hold."""
    j, k = decompose_at_vertex(g, v)
    total = ideal_sum(j, k)
    meet = ideal_intersect(j, k)
    closed = g.neighborhood(v, closed=True)
    expected_sum = SquarefreeMonomialIdeal(
        g.vertices, [[u] for u in closed] + list(remove_vertices(g, closed).edges)
    )
    oj = oracle_invariants(j, field)
    ojk = oracle_invariants(total, field)
    contracts = {
        "sum": total == expected_sum,
        "intersection": meet == edge_ideal(g),
        "depth": oj.depth == ojk.depth + 1,
        "reg": oj.reg == ojk.reg,
    }
    return {
        "vertex": v,
        "J": str(j),
        "K": str(k),
        "J_plus_K": str(total),
        "J_cap_K": str(meet),
        "depth": {"J": oj.depth, "J_plus_K": ojk.depth},
        "reg": {"J": oj.reg, "J_plus_K": ojk.reg},
        "contracts": contracts,
    }
