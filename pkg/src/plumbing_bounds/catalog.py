"""Built-in links with known data, stored as JSON under ``data/fixtures``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .braid import BraidWord, parse_braid_word
from .graph import SeifertGraph

# Components of the link drawn next to the four-circle induced graph
# (circles a, b, c, d). Traced by hand from the drawing: one closed curve
# through all seven crossings, so the link is a knot. Cross-checks: 7 - 4 + l
# must be even, and the genus (2 - l - 4 + 7) / 2 = 2 is a whole number.
# The same tracing, written as a PD code, is stored with the fixture and
# reproduces s=4, c=7, l=1 through the PD pipeline.
FIGURE2_COMPONENTS = 1


def fixture_l_for_figure2() -> int:
    return FIGURE2_COMPONENTS


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    l: int
    genus: int
    alternating: bool
    positive: bool
    braid: BraidWord | None = None
    raw_graph: SeifertGraph | None = None
    pd: str | None = None
    vertex_names: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)

    def graph(self) -> SeifertGraph:
        if self.raw_graph is not None:
            return self.raw_graph
        from .braid import closure_seifert_graph

        return closure_seifert_graph(self.braid)


def _from_json(doc: dict) -> Fixture:
    braid = None
    if "braid" in doc:
        braid = parse_braid_word(doc["braid"], doc.get("strands"))
    graph = SeifertGraph.from_json(doc["graph"]) if "graph" in doc else None
    if braid is None and graph is None:
        raise ValueError(f"fixture {doc.get('name')!r} has neither braid nor graph")
    return Fixture(
        name=doc["name"],
        description=doc.get("description", ""),
        l=doc["l"],
        genus=doc["genus"],
        alternating=doc["alternating"],
        positive=doc["positive"],
        braid=braid,
        raw_graph=graph,
        pd=doc.get("pd"),
        vertex_names=doc.get("vertex_names", {}),
        expected=doc.get("expected", {}),
    )


@lru_cache(maxsize=None)
def _load() -> tuple[Fixture, ...]:
    folder = resources.files("plumbing_bounds") / "data" / "fixtures"
    docs = [
        json.loads(p.read_text(encoding="utf-8"))
        for p in sorted(folder.iterdir(), key=lambda p: p.name)
        if p.name.endswith(".json")
    ]
    docs.sort(key=lambda d: d.get("order", 0))
    return tuple(_from_json(d) for d in docs)


def load_fixtures() -> list[Fixture]:
    return list(_load())


def get_fixture(name: str) -> Fixture:
    for fx in _load():
        if fx.name == name:
            return fx
    known = ", ".join(fx.name for fx in _load())
    raise KeyError(f"unknown fixture {name!r}; known: {known}")
