from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from fangraphs.algebra import (
    IdealError,
    SimplicialComplex,
    SquarefreeMonomialIdeal,
    decompose_at_vertex,
    edge_ideal,
    ideal_intersect,
    ideal_sum,
    min_cover_size,
    reduced_homology_ranks,
    stanley_reisner_complex,
    variable_ideal,
)
from fangraphs.graph import SimpleGraph, complete_graph, max_independent_set_size, min_vertex_cover_size, path_graph
from fangraphs.linalg import parse_field, rank, rank_gf2, rank_mod_p, rank_q

# six-vertex triangulation of the real projective plane
RP2 = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]

matrices = st.lists(
    st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=0, max_size=6
)


def rank_by_fractions(mat, p=None):
    rows = [[Fraction(x) if p is None else x % p for x in r] for r in mat]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                if p is None:
                    f = rows[i][c] / rows[r][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                else:
                    f = rows[i][c] * pow(rows[r][c], -1, p) % p
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def sparse(mat):
    return [{c: v for c, v in enumerate(r) if v} for r in mat]


class TestLinalg:
    def test_parse_field(self):
        assert parse_field("f2") == 2 and parse_field("q") == 0 and parse_field("f3") == 3
        assert parse_field(0) == 0 and parse_field(7) == 7
        for bad in ("f4", 1, "zz"):
            with pytest.raises(ValueError):
                parse_field(bad)

    @given(matrices)
    def test_rank_q_against_fractions(self, mat):
        assert rank_q(sparse(mat)) == rank_by_fractions(mat)

    @given(matrices, st.sampled_from([2, 3, 5]))
    def test_rank_mod_p_against_dense(self, mat, p):
        assert rank_mod_p(sparse(mat), p) == rank_by_fractions(mat, p)
        assert rank(sparse(mat), p) == rank_by_fractions(mat, p)

    def test_gf2_packed(self):
        assert rank_gf2([0b011, 0b110, 0b101]) == 2
        assert rank_gf2([]) == 0

    def test_characteristic_matters(self):
        mat = [[1, 1], [1, -1]]
        assert rank(sparse(mat), 0) == 2 and rank(sparse(mat), 2) == 1


class TestIdeals:
    def test_minimalised(self):
        ideal = SquarefreeMonomialIdeal([1, 2, 3], [[1], [1, 2], [2, 3]])
        assert ideal.sorted_generators() == [(1,), (2, 3)]
        assert str(ideal) == "(x1, x2*x3)"

    def test_zero_ideal(self):
        assert str(SquarefreeMonomialIdeal([1, 2])) == "(0)"

    def test_rejects_unit_and_foreign_variables(self):
        with pytest.raises(IdealError):
            SquarefreeMonomialIdeal([1], [[]])
        with pytest.raises(IdealError):
            SquarefreeMonomialIdeal([1], [[2]])

    def test_ring_mismatch(self):
        with pytest.raises(IdealError):
            ideal_sum(variable_ideal([1], [1, 2]), variable_ideal([1], [1, 3]))

    def test_intersection_of_primes(self):
        a = variable_ideal([1], [1, 2, 3])
        b = variable_ideal([2, 3], [1, 2, 3])
        assert ideal_intersect(a, b).sorted_generators() == [(1, 2), (1, 3)]

    @given(graphs(max_vertices=7))
    def test_min_cover_size_matches_graph_search(self, g):
        assert min_cover_size(edge_ideal(g)) == min_vertex_cover_size(g)

    @given(graphs(min_vertices=1, max_vertices=8), st.data())
    def test_decomposition_identities(self, g, data):
        v = data.draw(st.sampled_from(g.vertices))
        j, k = decompose_at_vertex(g, v)
        assert ideal_intersect(j, k) == edge_ideal(g)
        closed = g.neighborhood(v, closed=True)
        total = ideal_sum(j, k)
        assert all(total.contains([u]) for u in closed)

    def test_decomposition_p3_middle(self):
        j, k = decompose_at_vertex(path_graph(3), 2)
        assert str(j) == "(x1, x3)" and str(k) == "(x2)"


class TestComplexes:
    def test_independence_complex(self):
        c = stanley_reisner_complex(edge_ideal(path_graph(4)))
        assert set(c.facets) == {frozenset({1, 3}), frozenset({1, 4}), frozenset({2, 4})}

    @given(graphs(max_vertices=8))
    def test_facet_dimension_is_independence_number(self, g):
        c = stanley_reisner_complex(edge_ideal(g))
        assert c.dimension + 1 == max_independent_set_size(g)
        for f in c.facets:
            assert not any(u in f and v in f for u, v in g.edges)

    def test_void_and_irrelevant(self):
        assert SimplicialComplex([], []).is_void
        assert reduced_homology_ranks(SimplicialComplex([], [])) == {}
        assert reduced_homology_ranks(SimplicialComplex([], [[]])) == {-1: 1}

    def test_point_is_acyclic(self):
        assert set(reduced_homology_ranks(SimplicialComplex([1], [[1]])).values()) == {0}

    def test_spheres(self):
        for d in range(1, 5):
            boundary = SimplicialComplex(range(d + 2), combinations(range(d + 2), d + 1))
            h = reduced_homology_ranks(boundary, "q")
            assert h[d] == 1 and sum(h.values()) == 1

    def test_circle_as_square(self):
        # two disjoint edges: the independence complex is a 4-cycle
        c = stanley_reisner_complex(edge_ideal(SimpleGraph([1, 2, 3, 4], [(1, 3), (2, 4)])))
        h = reduced_homology_ranks(c)
        assert h[1] == 1 and sum(h.values()) == 1

    def test_projective_plane_depends_on_field(self):
        c = SimplicialComplex(range(1, 7), RP2)
        f2 = reduced_homology_ranks(c, "f2")
        assert f2[1] == 1 and f2[2] == 1
        assert sum(reduced_homology_ranks(c, "q").values()) == 0
        assert sum(reduced_homology_ranks(c, "f3").values()) == 0

    @given(graphs(max_vertices=7))
    def test_euler_characteristic(self, g):
        c = stanley_reisner_complex(edge_ideal(g))
        chi = sum((-1) ** (len(f) - 1) for f in c.faces())
        h = reduced_homology_ranks(c, "q")
        assert chi == sum((-1) ** d * r for d, r in h.items())


def test_complete_graph_complex_is_points():
    c = stanley_reisner_complex(edge_ideal(complete_graph(4)))
    assert reduced_homology_ranks(c)[0] == 3
