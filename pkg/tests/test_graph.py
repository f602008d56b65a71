import pytest

from leavitt import (
    Graph,
    GraphError,
    GraphSyntaxError,
    Path,
    Vertex,
    is_initial_subpath,
    parse_graph,
)

from .util import GRAPH_A, GRAPH_C, SINGLE_VERTEX, brute_out_degree, brute_paths


class TestParse:
    def test_smallest_valid_graph(self):
        g = parse_graph(SINGLE_VERTEX)
        assert [v.id for v in g.vertices] == ["v"]
        assert g.edges == ()
        assert not g.infinite_emitters

    def test_chain(self, chain_graph):
        assert sorted(v.id for v in chain_graph.vertices) == ["v1", "v2", "v3", "v4", "v5"]
        assert sorted(e.id for e in chain_graph.edges) == ["f1", "f2", "f3", "f4"]
        assert sorted(v.id for v in chain_graph.sinks()) == ["v1", "v3"]
        f1 = chain_graph.edge("f1")
        assert f1.source.id == "v2" and f1.range.id == "v1"

    def test_graph_c_flags(self, graph_c):
        assert {v.id for v in graph_c.infinite_emitters} == {"v1"}
        assert len(graph_c.out_edges(graph_c.vertex("v1"))) == 3

    def test_comments_and_whitespace(self):
        g = parse_graph("# heading\nvertices a   b;#tail\nedges: x: a->b;;")
        assert sorted(v.id for v in g.vertices) == ["a", "b"]
        assert g.edge("x").range.id == "b"

    def test_syntax_error_position(self):
        with pytest.raises(GraphSyntaxError) as err:
            parse_graph("vertices a b\nedges;")
        assert err.value.line == 2
        assert "';'" in str(err.value)

    def test_unexpected_character(self):
        with pytest.raises(GraphSyntaxError) as err:
            parse_graph("vertices a $ b;")
        assert err.value.line == 1 and err.value.column == 12

    def test_duplicate_vertex(self):
        with pytest.raises(GraphSyntaxError, match="duplicate id 'a'"):
            parse_graph("vertices a a;")

    def test_duplicate_edge_id_with_vertex(self):
        with pytest.raises(GraphSyntaxError, match="duplicate id 'a'"):
            parse_graph("vertices a b; edges a: a -> b;")

    def test_undeclared_endpoint(self):
        with pytest.raises(GraphSyntaxError, match="'c' is not a declared vertex"):
            parse_graph("vertices a b; edges x: a -> c;")

    def test_flag_needs_two_samples(self):
        with pytest.raises(GraphSyntaxError, match="at least 2 listed sample edges"):
            parse_graph("vertices a b; edges x: a -> b; infinite a;")

    def test_flag_undeclared(self):
        with pytest.raises(GraphSyntaxError, match="'z' is not declared"):
            parse_graph("vertices a; infinite z;")

    def test_missing_brace(self):
        with pytest.raises(GraphSyntaxError, match="'}'"):
            parse_graph("graph g { vertices a;")


class TestConstructor:
    def test_programmatic(self):
        a, b = Vertex("a"), Vertex("b")
        from leavitt import Edge

        g = Graph([a, b], [Edge("x", a, b)])
        assert g.sinks() == frozenset({b})

    def test_rejects_foreign_endpoint(self):
        a = Vertex("a")
        from leavitt import Edge

        with pytest.raises(GraphError):
            Graph([a], [Edge("x", a, Vertex("zz"))])


class TestQueries:
    def test_sinks_single_vertex(self):
        g = parse_graph(SINGLE_VERTEX)
        assert {v.id for v in g.sinks()} == {"v"}

    def test_sinks_graph_a_matches_brute_force(self, graph_a):
        expected = {v.id for v in graph_a.vertices if brute_out_degree(graph_a, v) == 0}
        assert expected == set() == {v.id for v in graph_a.sinks()}

    def test_regular_chain(self, chain_graph):
        assert {v.id for v in chain_graph.regular_vertices()} == {"v2", "v4", "v5"}

    def test_regular_graph_c(self, graph_c):
        assert graph_c.regular_vertices() == frozenset()

    def test_regular_no_edges(self):
        g = parse_graph("vertices a b;")
        assert g.regular_vertices() == frozenset()

    def test_special_edge(self, chain_graph, graph_c):
        assert chain_graph.special_edge(chain_graph.vertex("v2")).id == "f1"
        assert chain_graph.special_edge(chain_graph.vertex("v1")) is None
        assert graph_c.special_edge(graph_c.vertex("v1")) is None


class TestPaths:
    def test_enumerate_length_zero(self, chain_graph):
        assert [p.render() for p in chain_graph.enumerate_paths(0)] == [
            "v1",
            "v2",
            "v3",
            "v4",
            "v5",
        ]

    def test_enumerate_chain(self, chain_graph):
        got = [p.render() for p in chain_graph.enumerate_paths(2)]
        assert len(got) == 10
        assert got[-1] == "f4.f3"
        brute = brute_paths(chain_graph, 2)
        assert len(brute) == 10
        assert {(p.source.id, tuple(e.id for e in p.edges), p.range.id) for p in chain_graph.enumerate_paths(2)} == brute

    def test_enumerate_graph_a_order(self, graph_a):
        assert [p.render() for p in graph_a.enumerate_paths(2)] == [
            "v",
            "w",
            "e",
            "f",
            "e.e",
            "f.e",
        ]

    def test_prefix_stability(self, chain_graph, graph_a):
        for g in (chain_graph, graph_a):
            shorter = g.enumerate_paths(2)
            longer = g.enumerate_paths(3)
            assert longer[: len(shorter)] == shorter

    def test_composability_invariant(self, graph_a, chain_graph):
        for g in (graph_a, chain_graph):
            for p in g.enumerate_paths(4):
                for a, b in zip(p.edges, p.edges[1:]):
                    assert a.range == b.source

    def test_negative_bound_rejected(self, chain_graph):
        with pytest.raises(ValueError):
            chain_graph.enumerate_paths(-1)

    def test_bad_path_construction(self, chain_graph):
        with pytest.raises(GraphError):
            Path(chain_graph.vertex("v1"), (chain_graph.edge("f1"),))
        with pytest.raises(GraphError):
            Path(None, (chain_graph.edge("f1"), chain_graph.edge("f3")))


class TestInitialSubpath:
    def test_prefix_vertex_and_edge_cases(self, chain_graph):
        f4 = Path(None, (chain_graph.edge("f4"),))
        f4f3 = Path(None, (chain_graph.edge("f4"), chain_graph.edge("f3")))
        assert is_initial_subpath(f4, f4f3)
        assert not is_initial_subpath(f4f3, f4)
        v2 = Path(chain_graph.vertex("v2"))
        f1 = Path(None, (chain_graph.edge("f1"),))
        f2 = Path(None, (chain_graph.edge("f2"),))
        assert is_initial_subpath(v2, f1)
        assert not is_initial_subpath(f1, f2)

    def test_reflexive_transitive(self, graph_a):
        paths = graph_a.enumerate_paths(3)
        for p in paths:
            assert is_initial_subpath(p, p)
        for a in paths:
            for b in paths:
                for c in paths:
                    if is_initial_subpath(a, b) and is_initial_subpath(b, c):
                        assert is_initial_subpath(a, c)
