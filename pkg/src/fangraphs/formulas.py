"""Closed-form dimension, depth and regularity for fan graphs and their gluings.

Every function checks the hypotheses of the statement it evaluates and raises
:class:`HypothesisError` when they fail, so callers can tell "formula does not
apply" apart from "formula gives a wrong answer".
"""

from __future__ import annotations

from dataclasses import dataclass

from .fans import FanGraphSpec, FanQuantities, FanSpecError, Side, realize, theorem_quantities
from .graph import SimpleGraph, induced_matching_number, remove_vertices
from .report import InvariantReport


class HypothesisError(ValueError):
    """The input lies outside the cases a formula covers.

    ``hypothesis`` names the failed precondition.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)
        self.hypothesis = hypothesis


def complete_invariants(n: int) -> tuple[int, int]:
    """(depth, reg) of the quotient by the edge ideal of ``K_n``."""
    if n < 2:
        raise HypothesisError("complete graph needs n >= 2", f"n={n} has no edges")
    return 1, 1


def path_invariants(n: int) -> tuple[int, int]:
    """(depth, reg) of the quotient by the edge ideal of the path on ``n`` vertices."""
    if n < 2:
        raise HypothesisError("path needs n >= 2", f"n={n} has no edges")
    return -(-n // 3), (n + 1) // 3


def ideal_reg_from_quotient(regq: int) -> int:
    if regq < 0:
        raise ValueError(f"regularity of a quotient is non-negative, got {regq}")
    return regq + 1


def fan_dimension(spec: FanGraphSpec) -> int:
    if spec.k == 0:
        return 1
    w = len(spec.w)
    return spec.n if w == spec.n else w + 1


def fan_depth(spec: FanGraphSpec) -> int:
    if spec.k == 0:
        return complete_invariants(spec.n)[0]
    return 1 + len(spec.w) - max(len(b.vertices) for b in spec.blocks)


def _reg_drops_to_p(spec: FanGraphSpec) -> bool:
    return len(spec.w) >= spec.n - 1 and all(b.excesses[-1] >= 2 for b in spec.blocks)


def fan_regularity(spec: FanGraphSpec) -> int:
    if spec.k == 0:
        return complete_invariants(spec.n)[1]
    return spec.p if _reg_drops_to_p(spec) else spec.p + 1


def fan_invariants(spec: FanGraphSpec) -> InvariantReport:
    return InvariantReport(
        dim=fan_dimension(spec),
        depth=fan_depth(spec),
        reg=fan_regularity(spec),
        method="formula",
        intermediates={"p": spec.p, "W": len(spec.w), "k": spec.k},
    )


# -- glued fans ---------------------------------------------------------------

def _side_quantities(side: Side, label: str) -> FanQuantities:
    if side.spec.k == 0:
        raise HypothesisError("k_i >= 1", f"{label} side is a bare complete graph")
    try:
        return theorem_quantities(side.spec, side.leaf)
    except FanSpecError as exc:
        raise HypothesisError("leaf adjacent to a fan vertex", f"{label} side: {exc}") from None


def _depth_t(q1: FanQuantities, q2: FanQuantities) -> int:
    return sum(1 for q in (q1, q2) if not q.unique_max_at_leaf)


def _depth_intermediates(q1: FanQuantities, q2: FanQuantities, t: int, s: int) -> dict:
    return {
        "T": [q1.T, q2.T],
        "Tprime": [q1.T_prime, q2.T_prime],
        "W": [q1.w_size, q2.w_size],
        "p": [q1.p, q2.p],
        "t": t,
        "s": s,
    }


def circ_depth_formula(left: Side, right: Side) -> InvariantReport:
    q1, q2 = _side_quantities(left, "left"), _side_quantities(right, "right")
    t = _depth_t(q1, q2)
    s = 1 if t <= 1 else 2
    depth = fan_depth(left.spec) + fan_depth(right.spec) - s
    return InvariantReport(None, depth, None, "formula", _depth_intermediates(q1, q2, t, s))


def star_depth_formula(left: Side, right: Side) -> InvariantReport:
    q1, q2 = _side_quantities(left, "left"), _side_quantities(right, "right")
    t = _depth_t(q1, q2)
    s = 0 if t == 0 else 1
    depth = fan_depth(left.spec) + fan_depth(right.spec) - s
    return InvariantReport(None, depth, None, "formula", _depth_intermediates(q1, q2, t, s))


def regularity_after_neighbor_removal(side: Side) -> int:
    """reg of the fan with the leaf's neighbour deleted, via its induced matching number.

    The deleted graph is an induced subgraph of a chordal graph, hence chordal.
    """
    q = theorem_quantities(side.spec, side.leaf)
    g, _ = realize(side.spec)
    return induced_matching_number(remove_vertices(g, [q.neighbor]))


def _reg_t(left: Side, right: Side) -> tuple[int, list[int], list[int]]:
    regs = [fan_regularity(left.spec), fan_regularity(right.spec)]
    deleted = [regularity_after_neighbor_removal(left), regularity_after_neighbor_removal(right)]
    return sum(1 for a, b in zip(regs, deleted) if a != b), regs, deleted


def _reg_report(q1: FanQuantities, q2: FanQuantities, t: int, regs, deleted, drop: int) -> InvariantReport:
    return InvariantReport(
        None,
        None,
        regs[0] + regs[1] - drop,
        "formula",
        {
            "t": t,
            "s": drop,
            "reg": regs,
            "reg_without_neighbor": deleted,
            "W": [q1.w_size, q2.w_size],
            "n": [q1.n, q2.n],
            "p": [q1.p, q2.p],
        },
    )


def _check_t2_cases(q1: FanQuantities, q2: FanQuantities) -> None:
    short = [i for i, q in enumerate((q1, q2), start=1) if q.w_size <= q.n - 2]
    if short:
        raise HypothesisError(
            "outside theorem cases",
            f"t=2 with |W_i| <= n_i - 2 on side(s) {short}",
        )


def circ_regularity_formula(left: Side, right: Side) -> InvariantReport:
    q1, q2 = _side_quantities(left, "left"), _side_quantities(right, "right")
    t, regs, deleted = _reg_t(left, right)
    if t <= 1:
        drop = t
    else:
        _check_t2_cases(q1, q2)
        full = [q.w_size == q.n for q in (q1, q2)]
        drop = 2 if all(full) else 1
    return _reg_report(q1, q2, t, regs, deleted, drop)


def star_regularity_formula(left: Side, right: Side) -> InvariantReport:
    q1, q2 = _side_quantities(left, "left"), _side_quantities(right, "right")
    t, regs, deleted = _reg_t(left, right)
    if t <= 1:
        drop = 0
    else:
        _check_t2_cases(q1, q2)
        full = [q.w_size == q.n for q in (q1, q2)]
        drop = 1 if any(full) else 0
    return _reg_report(q1, q2, t, regs, deleted, drop)


def composite_formula(op: str, left: Side, right: Side) -> InvariantReport:
    """Depth and regularity of a glued pair; dimension is left empty."""
    if op == "circ":
        d, r = circ_depth_formula(left, right), circ_regularity_formula(left, right)
    elif op == "star":
        d, r = star_depth_formula(left, right), star_regularity_formula(left, right)
    else:
        raise ValueError(f"unknown operation {op!r}")
    inter = {"depth": d.intermediates, "reg": r.intermediates}
    return InvariantReport(None, d.depth, r.reg, "formula", inter)


# -- single-fan lemmas ----------------------------------------------------------

@dataclass(frozen=True)
class LeafRemovalPrediction:
    leaf: int
    depth: int  # predicted depth both before and after deleting the leaf


def leaf_removal_depth_identity(spec: FanGraphSpec, leaf: int) -> LeafRemovalPrediction:
    """Deleting the leaf keeps the depth when the leaf's block is the unique largest."""
    q = _side_quantities(Side(spec, leaf), "fan")
    if not q.unique_max_at_leaf:
        raise HypothesisError("T' = T - 1", f"T={q.T}, T'={q.T_prime}")
    return LeafRemovalPrediction(leaf, fan_depth(spec))


def clique_sum_reg_drop(spec: FanGraphSpec, v: int) -> int:
    """Drop in regularity when a pendant edge at base vertex ``v`` outside W is deleted with ``v``.

    Returns 1 when ``|W| >= n - 2`` and every block ends in a branch of excess
    at least 2, else 0.
    """
    if not 1 <= v <= spec.n:
        raise HypothesisError("v in the base clique", f"v={v}, n={spec.n}")
    if v in spec.w:
        raise HypothesisError("v outside W", f"v={v} is a fan vertex")
    big = len(spec.w) >= spec.n - 2
    return int(big and all(b.excesses[-1] >= 2 for b in spec.blocks))


def clique_sum_graph(spec: FanGraphSpec, v: int) -> SimpleGraph:
    """The fan with one pendant edge at ``v``; the new vertex takes the next free label."""
    g, _ = realize(spec)
    tip = max(g.vertices) + 1
    return SimpleGraph(list(g.vertices) + [tip], list(g.edges) + [(v, tip)])
