"""Seeded random property runs over closed-braid Seifert graphs."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import spanning
from .bounds import report_for_braid
from .braid import BraidWord, closure_seifert_graph, random_connected_braid


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        return f"{self.name}: {self.passed}/{self.total} passed"


def random_braids(count: int, seed: int, max_strands: int = 6, max_length: int = 20) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_connected_braid(rng, max_strands, max_length) for _ in range(count)]


def lemma_suite(braids: list[BraidWord]) -> SuiteResult:
    """BFS tree, both depth signings: every non-tree path must sum to +1 or -1."""
    res = SuiteResult("sign-sum lemma")
    for w in braids:
        g = closure_seifert_graph(w)
        t = spanning.bfs_spanning_tree(g)
        res.total += 1
        bad = [
            top
            for top in (1, -1)
            if not spanning.check_sign_sum_lemma(g, t, spanning.alternating_depth_signing(t, top))
        ]
        if bad:
            res.failures.append({"braid": str(w), "strands": w.strands, "top_signs": bad})
        else:
            res.passed += 1
    return res


def identity_suite(braids: list[BraidWord]) -> SuiteResult:
    res = SuiteResult("identities")
    for w in braids:
        res.total += 1
        r = report_for_braid(w)
        s, c, l = r.graph["s"], r.graph["c"], r.graph["l"]
        a = r.analysis["min_beta"]
        problems = []
        if r.bound("bk_diagram") != 2 * r.genus.g_diagram + l - 1:
            problems.append("bk_diagram != 2g + l - 1")
        if r.bound("fpbk_diagram") != a["beta"] + a["gamma"] + 3 * (c - s + 1 - a["gamma"]):
            problems.append("fpbk decomposition")
        if (c - s + l) % 2:
            problems.append("c - s + l odd")
        if not r.best.bk <= r.best.fp <= r.best.fpbk:
            problems.append("cascade order")
        if a["beta"] > math.ceil((s - 1) / 2):
            problems.append("beta too large")
        if problems:
            res.failures.append({"braid": str(w), "strands": w.strands, "problems": problems})
        else:
            res.passed += 1
    return res
