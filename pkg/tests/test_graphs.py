from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srdepth.graphs import (
    BRUTE_FORCE_LIMIT,
    ConnectivityResult,
    Graph,
    GuardError,
    ParseError,
    bits,
    format_edge_list,
    is_chordal,
    is_connected,
    mask_of,
    minimal_vertex_covers,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from srdepth.verify import construct_example, random_chordal_graph

from conftest import graph_corpus, random_graph

C6 = construct_example("cycle", t=6)
FIG1 = construct_example("figure1")
K4 = construct_example("complete", t=4)


def graph_strategy(n_max=9):
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=n_max))
        pairs = list(itertools.combinations(range(n), 2))
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
        return Graph.from_edges(n, chosen)
    return st.composite(build)()


class TestParsing:
    def test_edge_list_c6(self):
        g = parse_edge_list("6\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6")
        assert g.num_edges() == 6
        assert sorted(g.edges()) == sorted(C6.edges())

    def test_isolated_vertices(self):
        g = parse_edge_list("2\n")
        assert g.n == 2 and g.num_edges() == 0

    def test_duplicate_edges_collapse(self):
        g = parse_edge_list("3\n1 2\n1 2\n2 3")
        assert g.num_edges() == 2

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# a path\n3\n\n1 2\n# middle\n2 3\n")
        assert g.num_edges() == 2

    @pytest.mark.parametrize("text,fragment", [
        ("3\n1 2 3", "line 2"),
        ("3\n1 4", "out of range"),
        ("3\n2 2", "loop"),
        ("", "vertex count"),
        ("x\n", "line 1"),
    ])
    def test_edge_list_errors(self, text, fragment):
        with pytest.raises(ParseError, match=fragment):
            parse_edge_list(text)

    # frozen with networkx.to_graph6_bytes
    @pytest.mark.parametrize("g6,n,edges", [
        ("EhEG", 6, [(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]),
        ("C~", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ("IheA@GUAo", 10, [(0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7),
                           (3, 4), (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9)]),
    ])
    def test_graph6(self, g6, n, edges):
        g = parse_graph6(g6)
        assert g.n == n
        assert sorted(g.edges()) == sorted(edges)

    def test_graph6_header_and_dispatch(self):
        assert parse_graph(">>graph6<<C~\n", "graph6").num_edges() == 6

    def test_graph6_length_mismatch(self):
        with pytest.raises(ParseError, match="length mismatch"):
            parse_graph6("EhE")

    def test_format_round_trip(self):
        assert parse_edge_list(format_edge_list(FIG1)).edges() == FIG1.edges()


class TestBasicOps:
    def test_complement_c6_edges(self):
        # derived by enumerating all 15 pairs and removing the cycle edges
        expected = sorted(set(itertools.combinations(range(6), 2)) - set(C6.edges()))
        assert sorted(C6.complement().edges()) == expected
        assert len(expected) == 9

    def test_complement_complete(self):
        assert K4.complement().num_edges() == 0

    def test_c5_self_complementary(self):
        c5 = construct_example("cycle", t=5)
        expected = sorted(set(itertools.combinations(range(5), 2)) - set(c5.edges()))
        assert sorted(c5.complement().edges()) == expected
        assert c5.complement().num_edges() == 5

    @settings(max_examples=60, deadline=None)
    @given(graph_strategy(n_max=12))
    def test_complement_involution(self, g):
        assert g.complement().complement() == g

    def test_induced_path(self):
        sub, labels = C6.induced_subgraph(mask_of([0, 1, 2]))
        assert labels == (0, 1, 2)
        assert sorted(sub.edges()) == [(0, 1), (1, 2)]

    def test_induced_full_is_identity(self):
        sub, labels = FIG1.induced_subgraph(FIG1.full_mask)
        assert sub == FIG1 and labels == tuple(range(6))

    def test_figure1_minus_2_and_5_connected(self):
        sub, _ = FIG1.delete_vertices(mask_of([1, 4]))  # vertices x2 and x5
        assert sub.n == 4 and is_connected(sub)

    def test_neighborhoods(self):
        assert set(bits(C6.open_neighborhood(0))) == {1, 5}
        assert set(bits(C6.closed_neighborhood(0))) == {0, 1, 5}
        iso = Graph.from_edges(3, [(0, 1)])
        assert iso.open_neighborhood(2) == 0
        assert set(bits(iso.closed_neighborhood(2))) == {2}
        assert K4.closed_neighborhood(0) == K4.full_mask

    def test_validation(self):
        with pytest.raises(ValueError, match="loop"):
            Graph.from_edges(2, [(0, 0)])
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(2, [(0, 2)])


class TestConnectivity:
    @pytest.mark.parametrize("g,expected", [
        (C6, 2),
        (K4, 3),
        (FIG1, 4),
        (construct_example("multipartite", t=2), 4),
        (Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)]), 0),  # K3 + isolated vertex
        (Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]), 1),  # a tree
        (Graph.from_edges(1, []), 0),  # K1 is complete, n - 1 = 0
    ])
    def test_known_values(self, g, expected):
        assert vertex_connectivity(g).kappa == expected
        if g.n <= BRUTE_FORCE_LIMIT:
            assert vertex_connectivity_bruteforce(g).kappa == expected

    def test_witness_contract(self):
        for g in (C6, FIG1, construct_example("bipartite", a=2, b=3)):
            res = vertex_connectivity(g)
            assert res.witness is not None
            assert res.witness.bit_count() == res.kappa
            rest = g.full_mask & ~res.witness
            assert not is_connected(g, rest)

    def test_complete_graph_has_no_witness(self):
        res = vertex_connectivity(K4)
        assert res == ConnectivityResult(3, None)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            vertex_connectivity(Graph(0, ()))
        with pytest.raises(ValueError):
            vertex_connectivity_bruteforce(Graph(0, ()))

    def test_flow_equals_bruteforce_on_corpus(self):
        for g in graph_corpus(seed=5, count=80, n_max=10):
            assert vertex_connectivity(g).kappa == vertex_connectivity_bruteforce(g).kappa

    def test_kappa_at_most_min_degree(self, medium_corpus):
        for g in medium_corpus:
            if not g.is_complete():
                mindeg = min(g.degree(v) for v in range(g.n))
                assert vertex_connectivity(g).kappa <= mindeg

    def test_kappa_drops_by_at_most_one(self, small_corpus):
        for g in small_corpus:
            if g.is_complete() or g.n < 3:
                continue
            k = vertex_connectivity(g).kappa
            for v in range(g.n):
                sub, _ = g.delete_vertices(1 << v)
                assert vertex_connectivity(sub).kappa >= k - 1

    def test_bruteforce_guard(self):
        with pytest.raises(GuardError):
            vertex_connectivity_bruteforce(Graph(BRUTE_FORCE_LIMIT + 1,
                                                 (0,) * (BRUTE_FORCE_LIMIT + 1)))


class TestChordal:
    def test_trees_are_chordal(self):
        ok, peo = is_chordal(Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]))
        assert ok and len(peo) == 5

    def test_cycle_not_chordal(self):
        assert is_chordal(C6) == (False, None)

    def test_figure1_not_chordal(self):
        assert is_chordal(FIG1) == (False, None)

    def test_peo_witness_is_valid(self):
        rng = random.Random(7)
        for _ in range(30):
            g = random_chordal_graph(rng, rng.randint(2, 10))
            ok, peo = is_chordal(g)
            assert ok
            pos = {v: i for i, v in enumerate(peo)}
            for i, v in enumerate(peo):
                later = [u for u in bits(g.adj[v]) if pos[u] > i]
                for a, b in itertools.combinations(later, 2):
                    assert g.has_edge(a, b)

    def test_random_nonchordal_detected(self):
        # C4 plus chords elsewhere still has an induced 4-cycle
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert is_chordal(g)[0] is False


class TestMinimalVertexCovers:
    def brute_minimal_covers(self, g):
        covers = []
        for size in range(g.n + 1):
            for combo in itertools.combinations(range(g.n), size):
                m = mask_of(combo)
                if all((m >> u & 1) or (m >> v & 1) for u, v in g.edges()):
                    if not any(c & ~m == 0 for c in covers if c != m):
                        covers.append(m)
        return sorted(covers, key=lambda m: (m.bit_count(), tuple(bits(m))))

    def test_triangle(self):
        k3 = construct_example("complete", t=3)
        assert minimal_vertex_covers(k3) == [mask_of([0, 1]), mask_of([0, 2]), mask_of([1, 2])]

    def test_single_edge(self):
        g = Graph.from_edges(2, [(0, 1)])
        assert minimal_vertex_covers(g) == [1, 2]

    def test_c4(self):
        c4 = construct_example("cycle", t=4)
        assert minimal_vertex_covers(c4) == [mask_of([0, 2]), mask_of([1, 3])]

    def test_matches_bruteforce(self, small_corpus):
        for g in small_corpus[:30]:
            assert minimal_vertex_covers(g) == self.brute_minimal_covers(g)

    def test_each_cover_minimal(self, medium_corpus):
        for g in medium_corpus[:20]:
            for c in minimal_vertex_covers(g):
                assert all((c >> u & 1) or (c >> v & 1) for u, v in g.edges())
                for v in bits(c):
                    smaller = c ^ (1 << v)
                    assert not all((smaller >> a & 1) or (smaller >> b & 1)
                                   for a, b in g.edges())

    def test_guard(self):
        with pytest.raises(GuardError):
            minimal_vertex_covers(Graph(21, (0,) * 21))
