import networkx as nx
import pytest
from hypothesis import assume, given

from conftest import fan_specs
from fangraphs.fans import (
    CompositeSpec,
    FanGraphSpec,
    FanSpecError,
    Side,
    circ_compose,
    compose,
    glue_graphs,
    leaf_catalog,
    realize,
    star_compose,
    theorem_quantities,
)
from fangraphs.graph import complete_graph, is_chordal, path_graph

P4 = FanGraphSpec.of(2, [([1], [2]), ([2], [2])])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def isomorphic(g1, g2):
    return nx.is_isomorphic(to_nx(g1), to_nx(g2))


class TestValidation:
    def test_branch_size_must_exceed_position(self):
        with pytest.raises(FanSpecError, match=r"block 1, position 2: branch size a must exceed position"):
            FanGraphSpec.of(3, [([1, 2], [3, 2])])

    def test_overlapping_blocks(self):
        with pytest.raises(FanSpecError):
            FanGraphSpec.of(3, [([1], [2]), ([1], [2])])

    def test_vertex_outside_base(self):
        with pytest.raises(FanSpecError):
            FanGraphSpec.of(2, [([3], [2])])

    def test_length_mismatch(self):
        # one vertex but two branch sizes
        with pytest.raises(FanSpecError):
            FanGraphSpec.of(2, [([1], [2, 3])])

    def test_empty_block(self):
        with pytest.raises(FanSpecError):
            FanGraphSpec.of(2, [([], [])])

    def test_base_too_small(self):
        with pytest.raises(FanSpecError):
            FanGraphSpec.of(1)

    def test_round_trip(self):
        spec = FanGraphSpec.of(4, [([3, 1], [2, 5]), ([4], [3])])
        assert FanGraphSpec.from_dict(spec.to_dict()) == spec

    def test_p_counts_pairs(self):
        spec = FanGraphSpec.of(3, [([1, 2], [3, 4]), ([3], [2])])
        assert [b.excesses for b in spec.blocks] == [(2, 2), (1,)]
        assert spec.p == 2


class TestRealize:
    def test_p4(self):
        g, labels = realize(P4)
        assert isomorphic(g, path_graph(4))
        assert g.sorted_edges() == [(1, 2), (1, 3), (2, 4)]
        assert labels == {(1, 1, 1): 3, (2, 1, 1): 4}

    def test_degenerate_fan(self):
        g, labels = realize(FanGraphSpec.of(2))
        assert g == complete_graph(2) and labels == {}

    def test_two_triangles(self):
        g, _ = realize(FanGraphSpec.of(3, [([1], [3])]))
        assert len(g) == 5 and len(g.edges) == 6
        assert g.degree(1) == 4

    def test_label_order(self):
        _, labels = realize(FanGraphSpec.of(3, [([2, 1], [3, 4]), ([3], [2])]))
        assert labels == {(1, 1, 1): 4, (1, 1, 2): 5, (1, 2, 1): 6, (1, 2, 2): 7, (2, 1, 1): 8}

    @given(fan_specs())
    def test_vertex_count_and_chordal(self, spec):
        g, _ = realize(spec)
        expected = spec.n + sum(a - j for b in spec.blocks for j, a in enumerate(b.branch_sizes, start=1))
        assert len(g) == expected == spec.num_vertices
        assert is_chordal(g)

    @given(fan_specs())
    def test_deterministic(self, spec):
        assert realize(spec) == realize(FanGraphSpec.from_dict(spec.to_dict()))


class TestLeaves:
    def test_p4_has_two(self):
        assert [(x.leaf, x.neighbor, x.block) for x in leaf_catalog(P4)] == [(3, 1, 1), (4, 2, 2)]

    def test_triangle_branch_has_none(self):
        assert leaf_catalog(FanGraphSpec.of(3, [([1], [3])])) == []

    def test_single_leaf_in_two_branch_block(self):
        cat = leaf_catalog(FanGraphSpec.of(2, [([1, 2], [2, 3])]))
        assert [(x.leaf, x.neighbor) for x in cat] == [(3, 1)]

    def test_base_vertex_can_be_a_leaf(self):
        # with n = 2 and the other base vertex fanned, base vertex 2 hangs off vertex 1
        cat = leaf_catalog(FanGraphSpec.of(2, [([1], [3])]))
        assert [(x.leaf, x.neighbor) for x in cat] == [(2, 1)]

    @given(fan_specs())
    def test_branch_leaves_come_from_first_position_k2(self, spec):
        for entry in leaf_catalog(spec):
            if entry.leaf > spec.n:
                block = spec.blocks[entry.block - 1]
                assert block.vertices[0] == entry.neighbor and block.branch_sizes[0] == 2


class TestTheoremQuantities:
    def test_p4(self):
        q = theorem_quantities(P4, 3)
        assert (q.T, q.T_prime, q.p) == (1, 1, 0)
        assert not q.unique_max_at_leaf

    def test_reindexing(self):
        spec = FanGraphSpec.of(3, [([1, 2], [2, 4]), ([3], [2])])
        leaf = next(x.leaf for x in leaf_catalog(spec) if x.neighbor == 3)
        q = theorem_quantities(spec, leaf)
        assert (q.T, q.T_prime, q.p) == (2, 2, 1)
        assert q.block_sizes == (1, 2)

    def test_unique_max(self):
        spec = FanGraphSpec.of(4, [([1, 2, 3], [2, 3, 4]), ([4], [2])])
        q = theorem_quantities(spec, leaf_catalog(spec)[0].leaf)
        assert q.T == 3 and q.T_prime == 2 and q.unique_max_at_leaf

    def test_not_a_leaf(self):
        with pytest.raises(FanSpecError):
            theorem_quantities(P4, 1)


class TestGluing:
    def test_circ_p4_p4_is_p5(self):
        comp = circ_compose(CompositeSpec("circ", Side(P4, 3), Side(P4, 4)))
        assert len(comp.graph) == 5 and isomorphic(comp.graph, path_graph(5))

    def test_star_p4_p4_is_p7(self):
        comp = star_compose(CompositeSpec("star", Side(P4, 3), Side(P4, 4)))
        assert len(comp.graph) == 7 and isomorphic(comp.graph, path_graph(7))

    def test_vertex_counts_eleven_and_thirteen(self):
        eight = FanGraphSpec.of(4, [([1, 2], [2, 4]), ([3], [2])])
        six = FanGraphSpec.of(3, [([1], [2]), ([2], [3])])
        assert eight.num_vertices == 8 and six.num_vertices == 6
        a, b = Side(eight, leaf_catalog(eight)[0].leaf), Side(six, leaf_catalog(six)[0].leaf)
        assert len(compose(CompositeSpec("circ", a, b)).graph) == 11
        assert len(compose(CompositeSpec("star", a, b)).graph) == 13

    def test_not_a_leaf(self):
        with pytest.raises(FanSpecError, match="not a leaf"):
            compose(CompositeSpec("circ", Side(P4, 1), Side(P4, 4)))

    def test_circ_needs_neighbor_degree_two(self):
        with pytest.raises(FanSpecError, match="degree >= 2"):
            glue_graphs("circ", path_graph(2), 1, path_graph(3), 1)

    def test_unknown_op(self):
        with pytest.raises(FanSpecError):
            CompositeSpec("join", Side(P4, 3), Side(P4, 4))

    def test_label_maps(self):
        comp = compose(CompositeSpec("star", Side(P4, 3), Side(P4, 4)))
        assert comp.joined == comp.left_labels[3] == comp.right_labels[4]
        assert set(comp.left_labels.values()) | set(comp.right_labels.values()) == set(comp.graph.vertices)

    @given(fan_specs(max_n=4, max_excess=2), fan_specs(max_n=4, max_excess=2))
    def test_commutative_up_to_isomorphism(self, s1, s2):
        l1, l2 = leaf_catalog(s1), leaf_catalog(s2)
        assume(l1 and l2)
        a, b = Side(s1, l1[0].leaf), Side(s2, l2[-1].leaf)
        for op in ("circ", "star"):
            ab = compose(CompositeSpec(op, a, b))
            ba = compose(CompositeSpec(op, b, a))
            assert len(ab.graph) == CompositeSpec(op, a, b).num_vertices
            assert isomorphic(ab.graph, ba.graph)
            assert is_chordal(ab.graph)
