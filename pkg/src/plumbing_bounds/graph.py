"""The induced signed multigraph of a canonical Seifert surface.

Vertices are Seifert circles, numbered ``1..s``; every crossing (half-twisted
band) is one signed edge. The number of boundary components ``l`` is carried
alongside because the abstract graph does not determine it: the cyclic order
of bands around each circle is lost when the diagram is collapsed.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Any

from .errors import GraphError, OddCycleWarning, SplitLinkError

PROVENANCE_KINDS = ("braid", "pd", "raw")


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    sign: int
    id: int

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class Provenance:
    kind: str
    source: Any = None

    def __post_init__(self):
        if self.kind not in PROVENANCE_KINDS:
            raise GraphError(f"unknown provenance kind {self.kind!r}")


@dataclass(frozen=True)
class SeifertGraph:
    s: int
    edges: tuple[Edge, ...]
    l: int
    provenance: Provenance = field(default=Provenance("raw"), compare=False)

    @property
    def c(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.s + 1)

    def edge(self, edge_id: int) -> Edge:
        return self._by_id[edge_id]

    @property
    def _by_id(self) -> dict[int, Edge]:
        # cached lazily; the dataclass is frozen so bypass __setattr__
        cache = self.__dict__.get("_edge_cache")
        if cache is None:
            cache = {e.id: e for e in self.edges}
            object.__setattr__(self, "_edge_cache", cache)
        return cache

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """Map vertex -> sorted list of (neighbour, edge id)."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append((e.v, e.id))
            adj[e.v].append((e.u, e.id))
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    @classmethod
    def from_edges(cls, s: int, edges, l: int, provenance: Provenance | None = None) -> "SeifertGraph":
        """Build from ``(u, v, sign)`` triples; edge ids follow list position."""
        built = tuple(Edge(int(u), int(v), int(sign), i) for i, (u, v, sign) in enumerate(edges))
        return cls(int(s), built, int(l), provenance or Provenance("raw"))

    @classmethod
    def from_json(cls, data: dict) -> "SeifertGraph":
        """Parse the raw graph document ``{"s": .., "l": .., "edges": [[u, v, sign], ..]}``."""
        if not isinstance(data, dict):
            raise GraphError("raw graph must be a JSON object")
        missing = [k for k in ("s", "l", "edges") if k not in data]
        if missing:
            # l in particular is never guessed, see module docstring
            raise GraphError(f"raw graph is missing key(s): {', '.join(missing)}")
        s, l, edges = data["s"], data["l"], data["edges"]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (s, l)):
            raise GraphError("'s' and 'l' must be integers")
        if not isinstance(edges, list):
            raise GraphError("'edges' must be a list")
        triples = []
        for i, item in enumerate(edges):
            if (
                not isinstance(item, list)
                or len(item) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
            ):
                raise GraphError(f"edge #{i} must be [u, v, sign] with integer entries")
            if item[2] not in (1, -1):
                raise GraphError(f"edge #{i} has sign {item[2]}, expected 1 or -1")
            triples.append(tuple(item))
        g = cls.from_edges(s, triples, l)
        validate(g)
        return g

    def to_json(self) -> dict:
        return {"s": self.s, "l": self.l, "edges": [[e.u, e.v, e.sign] for e in self.edges]}


def validate(g: SeifertGraph) -> None:
    """Raise :class:`GraphError` on a malformed graph.

    An odd cycle is legal for the type but impossible for a graph that came
    out of Seifert's algorithm, so it only triggers an :class:`OddCycleWarning`.
    """
    if g.s < 1:
        raise GraphError(f"need at least one vertex, got s={g.s}")
    if g.l < 1:
        raise GraphError(f"boundary component count must be >= 1, got l={g.l}")
    seen = set()
    for e in g.edges:
        if e.id in seen:
            raise GraphError(f"duplicate edge id {e.id}")
        seen.add(e.id)
        for w in (e.u, e.v):
            if not 1 <= w <= g.s:
                raise GraphError(f"edge {e.id} has vertex {w} outside 1..{g.s}")
        if e.u == e.v:
            raise GraphError(f"edge {e.id} is a loop at vertex {e.u}")
        if e.sign not in (1, -1):
            raise GraphError(f"edge {e.id} has sign {e.sign}")
    if not is_bipartite(g):
        warnings.warn("graph has an odd cycle; no diagram produces it", OddCycleWarning, stacklevel=2)


def _components(g: SeifertGraph) -> list[list[int]]:
    adj = g.adjacency()
    seen: set[int] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w, _ in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: SeifertGraph) -> bool:
    return len(_components(g)) == 1


def is_bipartite(g: SeifertGraph) -> bool:
    colour: dict[int, int] = {}
    adj = g.adjacency()
    for start in g.vertices:
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def require_connected(g: SeifertGraph) -> None:
    if not is_connected(g):
        raise SplitLinkError(
            f"Seifert graph has {len(_components(g))} components; "
            "handle each split component separately"
        )


def split_components(g: SeifertGraph) -> list[SeifertGraph]:
    """Partition into connected pieces, each with its own ``l``.

    The per-piece ``l`` has to be recomputed from the source, so this only
    works for graphs built from a braid or PD code (or already connected).
    """
    comps = _components(g)
    if len(comps) == 1:
        return [g]
    if g.provenance.kind == "braid":
        from .braid import split_braid, closure_seifert_graph

        return [closure_seifert_graph(w) for w in split_braid(g.provenance.source)]
    # PD inputs are rejected as split before a graph is ever built
    raise GraphError(
        f"cannot split a {g.provenance.kind}-provenance graph: "
        "per-component boundary counts are not recoverable from the graph"
    )


def euler_characteristic(g: SeifertGraph) -> int:
    return g.s - g.c


def canonical_surface_genus(g: SeifertGraph) -> int:
    """Genus of the disc-and-band surface this graph describes.

    From ``chi = 2 - 2g - l`` for a connected orientable surface with ``l``
    boundary circles.
    """
    require_connected(g)
    twice = 2 - g.l - euler_characteristic(g)
    if twice < 0 or twice % 2:
        raise GraphError(
            f"inconsistent (s, c, l) = ({g.s}, {g.c}, {g.l}): "
            f"2 - l - s + c = {twice} must be even and non-negative"
        )
    return twice // 2

