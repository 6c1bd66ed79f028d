import json

import pytest

from plumbing_bounds import bounds
from plumbing_bounds.bounds import BoundEntry, cascade, report_for_braid, report_for_graph, report_for_pd
from plumbing_bounds.braid import closure_seifert_graph, parse_braid_word
from plumbing_bounds.catalog import get_fixture
from plumbing_bounds.errors import InvariantViolation, SplitLinkError
from plumbing_bounds.graph import SeifertGraph


def w(text, n=None):
    return parse_braid_word(text, n)


def g_of(text, n=None):
    return closure_seifert_graph(w(text, n))


@pytest.fixture(scope="module")
def fig2():
    return get_fixture("figure2").graph()


class TestBraidBounds:
    @pytest.mark.parametrize("text,value", [("1 1 1", 2), ("2 1 -2 1", 2), ("-1 -1", None)])
    def test_bk(self, text, value):
        assert bounds.bk_bound_braid(w(text)) == value

    @pytest.mark.parametrize("text,n,value", [("1 1 1", None, 4), ("1 -2 1 -2", None, 6), ("", 1, 0)])
    def test_fp(self, text, n, value):
        assert bounds.fp_bound_braid(w(text, n)) == value

    @pytest.mark.parametrize("text,value", [("1 1 1", 6), ("1 1", 3), ("1", 0)])
    def test_fpbk(self, text, value):
        assert bounds.fpbk_bound_braid(w(text)) == value

    @pytest.mark.parametrize("text,value", [("1 1 1", 4), ("1 -2 1 -2", 6), ("1 -1", 1)])
    def test_signed_counts(self, text, value):
        assert bounds.fpbk_bound_signed_counts(w(text)) == value

    def test_signed_counts_needs_a_generator(self):
        assert bounds.fpbk_bound_signed_counts(w("", 1)) is None


class TestDiagramBounds:
    def test_bk(self, fig2):
        assert bounds.bk_bound_diagram(g_of("1 1 1")) == 2
        assert bounds.bk_bound_diagram(g_of("1 1")) == 1
        assert bounds.bk_bound_diagram(fig2) == 4

    def test_fp(self, fig2):
        assert (bounds.fp_bound_diagram(fig2), bounds.fp_bound_refined(fig2)) == (10, 6)
        t = g_of("1 1 1")
        assert (bounds.fp_bound_diagram(t), bounds.fp_bound_refined(t)) == (4, 4)
        u = g_of("", 1)
        assert (bounds.fp_bound_diagram(u), bounds.fp_bound_refined(u)) == (0, 0)

    def test_fpbk(self, fig2):
        assert bounds.fpbk_bound_diagram(g_of("1 1 1")) == 6
        assert bounds.fpbk_bound_diagram(fig2, "min-beta") == 13
        assert bounds.fpbk_bound_diagram(fig2, "min-bound") == 6

    def test_unknown_policy(self, fig2):
        with pytest.raises(ValueError):
            bounds.fpbk_bound_diagram(fig2, "greedy")

    def test_split_graph_rejected(self):
        with pytest.raises(SplitLinkError):
            bounds.bk_bound_diagram(SeifertGraph.from_edges(2, [], 2))

    def test_decomposition_guard(self, fig2):
        assert bounds._fpbk_formula(fig2, 1, 0) == 13


class TestGenus:
    def test_trefoil(self):
        gb = bounds.genus_relations(g_of("1 1 1"), braid=w("1 1 1"))
        assert (gb.g_diagram, gb.exact_bk) == (1, 2)

    def test_hopf(self):
        gb = bounds.genus_relations(g_of("1 1"), braid=w("1 1"))
        assert (gb.g_diagram, gb.l, gb.exact_bk) == (0, 2, 1)

    def test_figure_eight(self):
        gb = bounds.genus_relations(g_of("1 -2 1 -2"), braid=w("1 -2 1 -2"))
        assert gb.exact_bk == 2 and gb.reason == "alternating braid closure"

    def test_no_reason_no_exact(self, fig2):
        gb = bounds.genus_relations(fig2)
        assert gb.exact_bk is None and gb.lower_bk is None

    def test_user_assertion(self, fig2):
        gb = bounds.genus_relations(fig2, user_asserts_minimal=True)
        assert gb.exact_bk == 4 and gb.reason == "asserted minimal genus"


class TestCascade:
    def test_four_circle(self):
        best = cascade([BoundEntry("fp_diagram", 10, ""), BoundEntry("fp_refined", 6, ""),
                        BoundEntry("fpbk_diagram_min_bound", 6, ""), BoundEntry("bk_diagram", 4, "")])
        assert best.fp == 6

    def test_trefoil(self):
        best = cascade([BoundEntry("bk_braid", 2, ""), BoundEntry("fp_braid", 4, ""),
                        BoundEntry("fpbk_signed_counts", 4, ""), BoundEntry("fpbk_braid", 6, "")])
        assert tuple(best) == (2, 4, 4)

    def test_fp_tightened_by_fpbk(self):
        best = cascade([BoundEntry("fp_diagram", 9, ""), BoundEntry("fpbk_diagram", 5, "")])
        assert tuple(best) == (5, 5, 5)

    def test_unknot_possibly_trivial(self):
        r = report_for_braid(w("", 1))
        assert r.best.fp == 0 and r.flags["possibly_trivial"]


class TestReports:
    def test_trefoil(self):
        r = report_for_braid(w("1 1 1"))
        got = {e.name: e.value for e in r.bounds}
        assert got == {
            "bk_braid": 2, "fp_braid": 4, "fpbk_braid": 6, "fpbk_signed_counts": 4,
            "bk_diagram": 2, "fp_diagram": 4, "fp_refined": 4, "fpbk_diagram": 6,
        }
        assert tuple(r.best) == (2, 4, 4) and r.genus.exact_bk == 2

    def test_figure_eight_has_no_coil(self):
        r = report_for_braid(w("1 -2 1 -2"))
        assert r.bound("bk_braid") is None
        assert tuple(r.best) == (2, 6, 6) and r.genus.exact_bk == 2

    def test_four_circle_default_does_not_use_min_bound(self, fig2):
        r = report_for_graph(fig2)
        assert r.bound("fpbk_diagram_min_bound") is None
        assert tuple(r.best) == (4, 6, 13)
        assert not r.flags["fpbk_interpretation_ambiguous"]

    def test_four_circle_min_bound(self, fig2):
        r = report_for_graph(fig2, policy="min-bound")
        assert r.bound("fpbk_diagram_min_bound") == 6 and r.bound("fpbk_diagram") == 13
        assert r.flags["fpbk_interpretation_ambiguous"]
        assert r.best.fpbk == 6

    def test_four_circle_exhaustive(self, fig2):
        r = report_for_graph(fig2, exhaustive=True)
        assert r.bound("fpbk_diagram_all_trees") == 6
        assert r.bound("fp_refined_all_trees") <= 6
        assert r.flags["trees_truncated"] is False

    def test_pd_input(self):
        r = report_for_pd("X[2,4,3,1] X[4,6,5,3] X[6,2,1,5]")
        assert r.input["kind"] == "pd"
        assert tuple(r.best) == (2, 4, 6)
        assert r.genus.exact_bk == 2 and "alternating diagram" in r.genus.reason

    def test_json_shape_and_determinism(self, fig2):
        a = report_for_graph(fig2, policy="min-bound").to_dict()
        b = report_for_graph(fig2, policy="min-bound").to_dict()
        assert json.dumps(a) == json.dumps(b)
        assert list(a) == ["input", "graph", "bounds", "best", "genus", "flags", "analysis"]
        assert set(a["bounds"][0]) == {"name", "value", "ref", "note"}
        assert set(a["genus"]) == {"g_diagram", "l", "lower_bk", "exact_bk", "reason"}

    def test_invariant_checker_catches_bad_order(self, fig2):
        entries = [BoundEntry("bk_diagram", 4, ""), BoundEntry("fp_diagram", 10, ""),
                   BoundEntry("fp_refined", 12, "")]
        with pytest.raises(InvariantViolation):
            bounds._check_report_invariants(fig2, entries, cascade(entries + [BoundEntry("fpbk_diagram", 13, "")]),
                                            bounds.genus_relations(fig2))
