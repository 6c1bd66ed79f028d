import pytest

from plumbing_bounds.braid import parse_braid_word
from plumbing_bounds.errors import GraphError, OddCycleWarning, SplitLinkError
from plumbing_bounds.graph import (
    SeifertGraph,
    canonical_surface_genus,
    euler_characteristic,
    is_bipartite,
    is_connected,
    require_connected,
    split_components,
    validate,
)
from plumbing_bounds.braid import closure_seifert_graph

TREFOIL = SeifertGraph.from_edges(2, [(1, 2, 1)] * 3, 1)
HOPF = SeifertGraph.from_edges(2, [(1, 2, 1)] * 2, 2)
UNKNOT = SeifertGraph.from_edges(1, [], 1)


class TestValidate:
    def test_trefoil_ok(self):
        validate(TREFOIL)

    def test_loop(self):
        with pytest.raises(GraphError, match="loop"):
            validate(SeifertGraph.from_edges(1, [(1, 1, 1)], 1))

    def test_triangle_warns(self):
        g = SeifertGraph.from_edges(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)], 1)
        with pytest.warns(OddCycleWarning):
            validate(g)
        assert not is_bipartite(g)

    @pytest.mark.parametrize(
        "s,edges,l",
        [(0, [], 1), (2, [(1, 2, 1)], 0), (2, [(1, 3, 1)], 1), (2, [(1, 2, 2)], 1)],
    )
    def test_rejects(self, s, edges, l):
        with pytest.raises(GraphError):
            validate(SeifertGraph.from_edges(s, edges, l))


class TestJson:
    def test_round_trip(self):
        doc = {"s": 2, "l": 1, "edges": [[1, 2, 1]] * 3}
        g = SeifertGraph.from_json(doc)
        assert g == TREFOIL and g.to_json() == doc

    @pytest.mark.parametrize(
        "doc",
        [
            {"s": 2, "edges": [[1, 2, 1]]},  # l is never guessed
            {"s": 2, "l": 1, "edges": [[1, 2]]},
            {"s": 2, "l": 1, "edges": [[1, 2, 0]]},
            {"s": "2", "l": 1, "edges": []},
            {"s": 2, "l": True, "edges": []},
            {"s": 2, "l": 1, "edges": {}},
            [1, 2],
        ],
    )
    def test_rejects(self, doc):
        with pytest.raises(GraphError):
            SeifertGraph.from_json(doc)

    def test_edge_ids_follow_position(self):
        g = SeifertGraph.from_json({"s": 3, "l": 1, "edges": [[2, 3, -1], [1, 2, 1]]})
        assert g.edge(0).u == 2 and g.edge(1).u == 1


class TestConnectivity:
    def test_trefoil(self):
        assert is_connected(TREFOIL)

    def test_trivial_two_braid_splits_into_unknots(self):
        g = closure_seifert_graph(parse_braid_word("", 2))
        assert not is_connected(g)
        parts = split_components(g)
        assert [(p.s, p.c, p.l) for p in parts] == [(1, 0, 1), (1, 0, 1)]

    def test_raw_split_is_an_error(self):
        g = SeifertGraph.from_edges(4, [(1, 2, 1), (3, 4, 1)], 2)
        with pytest.raises(GraphError):
            split_components(g)
        with pytest.raises(SplitLinkError):
            require_connected(g)

    def test_connected_graph_is_its_own_split(self):
        assert split_components(TREFOIL) == [TREFOIL]


class TestEuler:
    @pytest.mark.parametrize("g,chi", [(TREFOIL, -1), (UNKNOT, 1), (HOPF, 0)])
    def test_chi(self, g, chi):
        assert euler_characteristic(g) == chi

    @pytest.mark.parametrize("g,genus", [(TREFOIL, 1), (HOPF, 0), (UNKNOT, 0)])
    def test_genus(self, g, genus):
        assert canonical_surface_genus(g) == genus

    def test_bad_parity(self):
        with pytest.raises(GraphError):
            canonical_surface_genus(SeifertGraph.from_edges(2, [(1, 2, 1)] * 3, 2))

    def test_negative_genus(self):
        with pytest.raises(GraphError):
            canonical_surface_genus(SeifertGraph.from_edges(2, [(1, 2, 1)], 3))
