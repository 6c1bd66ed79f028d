"""Upper bounds for the basket (bk), flat plumbing (fp) and flat plumbing basket
(fpbk) numbers, plus the genus relation that makes bk exact for some links.

Every bound is a non-negative integer. A bound whose hypothesis is not met
is reported as ``None`` and left out of the report, never as 0.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import NamedTuple

from . import spanning
from .braid import (
    BraidWord,
    closure_seifert_graph,
    ensure_all_generators_both_signs,
    find_coil_prefix,
    is_alternating_closure,
    is_positive,
    letter_counts,
)
from .errors import InvariantViolation
from .graph import SeifertGraph, canonical_surface_genus, require_connected
from .pd import OrientedDiagram, is_alternating_diagram, orient_diagram, parse_pd, seifert_circles

QUANTITIES = ("bk", "fp", "fpbk")


@dataclass
class BoundEntry:
    name: str
    value: int
    ref: str
    note: str = ""

    @property
    def quantity(self) -> str:
        return self.name.split("_", 1)[0]


@dataclass
class GenusBlock:
    g_diagram: int
    l: int
    lower_bk: int | None = None
    exact_bk: int | None = None
    reason: str | None = None


class Best(NamedTuple):
    bk: int
    fp: int
    fpbk: int


@dataclass
class BoundsReport:
    input: dict
    graph: dict
    bounds: list[BoundEntry]
    best: Best
    genus: GenusBlock
    flags: dict
    analysis: dict = field(default_factory=dict)

    def bound(self, name: str) -> int | None:
        for e in self.bounds:
            if e.name == name:
                return e.value
        return None

    def to_dict(self) -> dict:
        return {
            "input": self.input,
            "graph": self.graph,
            "bounds": [asdict(e) for e in self.bounds],
            "best": self.best._asdict(),
            "genus": asdict(self.genus),
            "flags": self.flags,
            "analysis": self.analysis,
        }


# -- braid-side bounds ---------------------------------------------------------


def bk_bound_braid(w: BraidWord) -> int | None:
    split = find_coil_prefix(w)
    return None if split is None else len(split.remainder)


def fp_bound_braid(w: BraidWord) -> int:
    return len(w) + w.strands - 1


def fpbk_bound_braid(w: BraidWord) -> int | None:
    split = find_coil_prefix(w)
    if split is None:
        return None
    rest = split.remainder
    return len(rest) + 2 * sum(1 for x in rest.letters if x.sign == 1)


def fpbk_bound_signed_counts(w: BraidWord) -> int | None:
    """Bound from per-generator letter counts, after padding missing signs.

    For each generator the majority sign is kept and every minority letter
    costs two extra annuli, less one pair for the disc band. With equal
    counts either choice gives the same contribution.
    """
    if w.strands < 2:
        return None
    counts = letter_counts(ensure_all_generators_both_signs(w))
    total = 0
    for i in range(1, w.strands):
        pos, neg = counts[i][1], counts[i][-1]
        eps = -1 if pos >= neg else 1  # eps = -sign(pos - neg); balanced -> -1
        total += counts[i][-eps] + 2 * (counts[i][eps] - 1)
    return total


# -- diagram-side bounds -------------------------------------------------------


def bk_bound_diagram(g: SeifertGraph) -> int:
    require_connected(g)
    return g.c - g.s + 1


def fp_bound_diagram(g: SeifertGraph) -> int:
    require_connected(g)
    return g.c + g.s - 1


def fp_bound_refined(g: SeifertGraph, tree: spanning.SpanningTree | None = None) -> int | None:
    require_connected(g)
    tree = tree or spanning.bfs_spanning_tree(g)
    aug = spanning.minimal_augmentation_fp(g, tree)
    if aug is None:
        return None
    return g.c - g.s + 1 + 2 * len(aug.edge_ids)


def _fpbk_formula(g: SeifertGraph, beta: int, gamma: int) -> int:
    value = (3 * g.c - 2 * gamma) - (3 * g.s - beta) + 3
    split = beta + gamma + 3 * (g.c - g.s + 1 - gamma)
    if value != split:
        raise InvariantViolation(f"fpbk decomposition failed: {value} != {split}")
    return value


def fpbk_bound_diagram(g: SeifertGraph, policy: str = "min-beta", tree=None) -> int:
    """Spanning-tree bound for fpbk, always with the diagram's own c and s.

    ``min-beta`` uses the depth signing needing fewer sign changes on the
    tree; ``min-bound`` takes the smaller value over both signings.
    """
    require_connected(g)
    if policy not in spanning.POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    tree = tree or spanning.bfs_spanning_tree(g)
    if policy == "min-beta":
        runs = [spanning.analyze_min_beta(g, tree)]
    else:
        runs = spanning.analyze_both_signings(g, tree)
    return min(_fpbk_formula(g, a.beta, a.gamma) for a in runs)


# -- genus and cascade ----------------------------------------------------------


def genus_relations(
    g: SeifertGraph,
    braid: BraidWord | None = None,
    diagram: OrientedDiagram | None = None,
    user_asserts_minimal: bool = False,
) -> GenusBlock:
    """Genus of this diagram's canonical surface, and exact bk where it is minimal.

    For positive braids and alternating diagrams the canonical surface has
    minimal genus, so bk = 2g + l - 1.
    """
    g_s = canonical_surface_genus(g)
    upper = 2 * g_s + g.l - 1
    if upper != g.c - g.s + 1:
        raise InvariantViolation(f"2g + l - 1 = {upper} but c - s + 1 = {g.c - g.s + 1}")
    reasons = []
    if braid is not None and is_positive(braid):
        reasons.append("positive braid")
    if braid is not None and is_alternating_closure(braid):
        reasons.append("alternating braid closure")
    if diagram is not None and is_alternating_diagram(diagram):
        reasons.append("alternating diagram")
    if user_asserts_minimal:
        reasons.append("asserted minimal genus")
    block = GenusBlock(g_s, g.l)
    if reasons:
        block.exact_bk = block.lower_bk = upper
        block.reason = ", ".join(reasons)
    return block


def cascade(entries: list[BoundEntry]) -> Best:
    """Tighten with bk <= fp <= fpbk."""
    best = {q: min((e.value for e in entries if e.quantity == q), default=None) for q in QUANTITIES}
    if best["fpbk"] is None:
        raise ValueError("no fpbk bound to cascade from")
    fp = best["fpbk"] if best["fp"] is None else min(best["fp"], best["fpbk"])
    bk = fp if best["bk"] is None else min(best["bk"], fp)
    return Best(bk, fp, best["fpbk"])


# -- report assembly ---------------------------------------------------------------


def _analysis_dict(a: spanning.TreeAnalysis, aug: spanning.Augmentation | None) -> dict:
    t = a.tree
    return {
        "root": t.root,
        "tree_edges": sorted(t.tree_edge_ids),
        "depth": {str(v): d for v, d in sorted(t.depth.items())},
        "top_sign": a.signing.top_sign,
        "signing": {str(k): v for k, v in sorted(a.signing.assignment.items())},
        "beta": a.beta,
        "gamma": a.gamma,
        "path_sums": {str(k): v for k, v in sorted(a.path_sums.items())},
        "lemma_holds": all(x in (1, -1) for x in a.path_sums.values()),
        "augmentation": None if aug is None else sorted(aug.edge_ids),
        "augmentation_exact": None if aug is None else aug.exact,
    }


def _exhaustive_entries(g: SeifertGraph, limit: int) -> tuple[list[BoundEntry], bool]:
    enum = spanning.enumerate_spanning_trees(g, limit)
    best_fpbk, best_fp = None, None
    for ids in (t.tree_edge_ids for t in enum.trees):
        for root in g.vertices:
            t = spanning.tree_from_edges(g, ids, root)
            a = spanning.analyze_min_beta(g, t)
            v = _fpbk_formula(g, a.beta, a.gamma)
            best_fpbk = v if best_fpbk is None else min(best_fpbk, v)
        aug = spanning.minimal_augmentation_fp(g, spanning.tree_from_edges(g, ids))
        if aug is not None:
            v = g.c - g.s + 1 + 2 * len(aug.edge_ids)
            best_fp = v if best_fp is None else min(best_fp, v)
    note = f"{len(enum.trees)} spanning trees" + (" (truncated)" if enum.truncated else "")
    out = [
        BoundEntry(
            "fpbk_diagram_all_trees",
            best_fpbk,
            "(3c - 2 gamma) - (3s - beta) + 3, min over trees and roots, min-beta signing",
            note,
        )
    ]
    if best_fp is not None:
        out.append(BoundEntry("fp_refined_all_trees", best_fp, "(c - s + 1) + 2|S|, min over trees", note))
    return out, enum.truncated


def evaluate(
    g: SeifertGraph,
    *,
    braid: BraidWord | None = None,
    diagram: OrientedDiagram | None = None,
    policy: str = "min-beta",
    exhaustive: bool = False,
    assert_minimal: bool = False,
    source: dict | None = None,
    tree_limit: int = 10_000,
) -> BoundsReport:
    """Run every applicable bound on one connected Seifert graph."""
    if policy not in spanning.POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    require_connected(g)
    entries: list[BoundEntry] = []

    def add(name, value, ref, note=""):
        if value is not None:
            entries.append(BoundEntry(name, value, ref, note))

    if braid is not None:
        split = find_coil_prefix(braid)
        add(
            "bk_braid",
            bk_bound_braid(braid),
            "|W| for a closed braid sigma_{n-1}...sigma_1 W",
            "" if split is None else f"cyclic rotation {split.rotation}",
        )
        add("fp_braid", fp_bound_braid(braid), "m + n - 1 for any closed n-braid word of length m")
        add("fpbk_braid", fpbk_bound_braid(braid), "|W| + 2 * (positive letters of W)",
            "" if split is None else f"cyclic rotation {split.rotation}")
        padded = ensure_all_generators_both_signs(braid)
        add(
            "fpbk_signed_counts",
            fpbk_bound_signed_counts(braid),
            "sum_i a_i(-eps_i) + 2 (a_i(eps_i) - 1)",
            f"counts taken on padded word '{padded}'" if padded != braid else "",
        )

    tree = spanning.bfs_spanning_tree(g)
    add("bk_diagram", bk_bound_diagram(g), "c - s + 1")
    add("fp_diagram", fp_bound_diagram(g), "c + s - 1")
    aug = spanning.minimal_augmentation_fp(g, tree)
    refined = None if aug is None else g.c - g.s + 1 + 2 * len(aug.edge_ids)
    add(
        "fp_refined",
        refined,
        "(c - s + 1) + 2|S|, S = tree edges doubled by a +/- annulus pair",
        None if aug is None else ("exact minimum S" if aug.exact else "greedy S"),
    )

    min_beta = spanning.analyze_min_beta(g, tree)
    add(
        "fpbk_diagram",
        _fpbk_formula(g, min_beta.beta, min_beta.gamma),
        "(3c - 2 gamma) - (3s - beta) + 3",
        f"min-beta signing: beta={min_beta.beta}, gamma={min_beta.gamma}; original c, s",
    )
    both = spanning.analyze_both_signings(g, tree)
    aggressive = min(both, key=lambda a: (_fpbk_formula(g, a.beta, a.gamma), -a.signing.top_sign))
    aggressive_value = _fpbk_formula(g, aggressive.beta, aggressive.gamma)
    flags = {
        "fpbk_policy": policy,
        "fpbk_interpretation_ambiguous": False,
        "possibly_trivial": False,
        "exactness_reason": None,
        "augmentation_exact": None if aug is None else aug.exact,
        "trees_truncated": None,
    }
    if policy == "min-bound":
        add(
            "fpbk_diagram_min_bound",
            aggressive_value,
            "(3c - 2 gamma) - (3s - beta) + 3",
            f"best of both signings: beta={aggressive.beta}, gamma={aggressive.gamma}; "
            "interpretation-dependent, not certified",
        )
        flags["fpbk_interpretation_ambiguous"] = True

    if exhaustive:
        extra, truncated = _exhaustive_entries(g, tree_limit)
        entries += extra
        flags["trees_truncated"] = truncated

    genus = genus_relations(g, braid, diagram, assert_minimal)
    best = cascade(entries)
    flags["possibly_trivial"] = best.fp < 3
    flags["exactness_reason"] = genus.reason

    _check_report_invariants(g, entries, best, genus)
    return BoundsReport(
        input=source or {"kind": g.provenance.kind},
        graph={"s": g.s, "c": g.c, "l": g.l, "euler_characteristic": g.s - g.c},
        bounds=entries,
        best=best,
        genus=genus,
        flags=flags,
        analysis={
            "min_beta": _analysis_dict(min_beta, aug),
            "by_top_sign": {
                str(a.signing.top_sign): {
                    "beta": a.beta,
                    "gamma": a.gamma,
                    "bound": _fpbk_formula(g, a.beta, a.gamma),
                }
                for a in both
            },
        },
    )


def _check_report_invariants(g, entries, best, genus) -> None:
    values = {e.name: e.value for e in entries}
    if values["bk_diagram"] != 2 * genus.g_diagram + g.l - 1:
        raise InvariantViolation("bk_diagram differs from 2g + l - 1")
    if "fp_refined" in values and not (values["bk_diagram"] <= values["fp_refined"] <= values["fp_diagram"]):
        raise InvariantViolation("refined fp bound out of order")
    if not best.bk <= best.fp <= best.fpbk:
        raise InvariantViolation(f"cascade out of order: {best}")
    if genus.lower_bk is not None and genus.lower_bk > best.bk:
        raise InvariantViolation("lower bk bound above best upper bound")
    if (g.c - g.s + g.l) % 2:
        raise InvariantViolation("c - s + l is odd")


# -- front doors ----------------------------------------------------------------


def report_for_braid(w: BraidWord, **kw) -> BoundsReport:
    source = {"kind": "braid", "braid": str(w), "strands": w.strands}
    return evaluate(closure_seifert_graph(w), braid=w, source=source, **kw)


def report_for_pd(text: str, **kw) -> BoundsReport:
    pd = parse_pd(text)
    d = orient_diagram(pd)
    source = {"kind": "pd", "pd": str(pd)}
    return evaluate(seifert_circles(d), diagram=d, source=source, **kw)


def report_for_graph(g: SeifertGraph, **kw) -> BoundsReport:
    return evaluate(g, source={"kind": "graph", "graph": g.to_json()}, **kw)
