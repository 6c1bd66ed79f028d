"""Planar diagram codes and Seifert's algorithm on them.

Crossings are written ``X[a,b,c,d]`` with the four arc labels listed
counterclockwise, starting from the incoming under-strand. The under-strand
therefore runs from slot 0 to slot 2 (zero-based); the over-strand occupies
slots 1 and 3 and its direction is recovered by tracing the link.

A crossing is positive when the over-strand runs from slot 3 to slot 1.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass

from .errors import PDParseError, PDTraceError, SplitLinkError
from .graph import Provenance, SeifertGraph

_CROSSING = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")

Dart = tuple[int, int]  # (crossing index, slot 0..3)


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]
    unknot: bool = False

    def __post_init__(self):
        if self.unknot and self.crossings:
            raise PDParseError("the unknot marker U must stand alone")
        if not self.unknot and not self.crossings:
            raise PDParseError("empty diagram; write U for the crossingless unknot")
        counts = Counter(a for x in self.crossings for a in x)
        for label, k in sorted(counts.items()):
            if label < 1:
                raise PDParseError(f"arc label {label} is not positive")
            if k != 2:
                raise PDParseError(f"arc label {label} occurs {k} times, expected 2")

    def __str__(self) -> str:
        if self.unknot:
            return "U"
        return " ".join("X[{},{},{},{}]".format(*x) for x in self.crossings)


def parse_pd(text: str) -> PDCode:
    """Parse ``"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"`` or the literal ``"U"``."""
    body = text.strip()
    if body == "U":
        return PDCode((), unknot=True)
    crossings = []
    pos = 0
    for m in _CROSSING.finditer(body):
        gap = body[pos:m.start()]
        if gap.strip():
            raise PDParseError(f"unexpected text {gap.strip()!r}")
        if pos and not gap:
            raise PDParseError("crossings must be separated by whitespace")
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if body[pos:].strip():
        raise PDParseError(f"unexpected text {body[pos:].strip()!r}")
    return PDCode(tuple(crossings))


@dataclass(frozen=True)
class OrientedCrossing:
    labels: tuple[int, int, int, int]
    over_in: int  # slot where the over-strand enters: 1 or 3
    sign: int

    def is_incoming(self, slot: int) -> bool:
        return slot == 0 or slot == self.over_in


@dataclass(frozen=True)
class OrientedDiagram:
    pd: PDCode
    crossings: tuple[OrientedCrossing, ...]
    l: int
    component_of: dict  # arc label -> component id (1-based)
    passages: tuple[tuple[Dart, ...], ...]  # per component: incoming darts in travel order

    @property
    def signs(self) -> list[int]:
        return [x.sign for x in self.crossings]


def _darts_by_label(pd: PDCode) -> dict[int, list[Dart]]:
    where: dict[int, list[Dart]] = defaultdict(list)
    for ci, x in enumerate(pd.crossings):
        for slot, a in enumerate(x):
            where[a].append((ci, slot))
    return where


def _partner(where, pd: PDCode, dart: Dart) -> Dart:
    d1, d2 = where[pd.crossings[dart[0]][dart[1]]]
    return d2 if d1 == dart else d1


def _check_connected(pd: PDCode, where) -> None:
    parent = list(range(len(pd.crossings)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for (c1, _), (c2, _) in where.values():
        parent[find(c1)] = find(c2)
    roots = {find(i) for i in range(len(pd.crossings))}
    if len(roots) > 1:
        raise SplitLinkError(f"diagram splits into {len(roots)} pieces")


def _face_count(pd: PDCode, where) -> int:
    # walk along an arc, then turn to the next slot counterclockwise
    seen: set[Dart] = set()
    faces = 0
    for ci in range(len(pd.crossings)):
        for slot in range(4):
            if (ci, slot) in seen:
                continue
            faces += 1
            d = (ci, slot)
            while d not in seen:
                seen.add(d)
                cj, sj = _partner(where, pd, d)
                d = (cj, (sj + 1) % 4)
    return faces


def orient_diagram(pd: PDCode) -> OrientedDiagram:
    """Trace the link components and orient every crossing.

    Each under-passage fixes the direction of its component. A component
    that only ever passes over is oriented so that its lowest arc label runs
    away from the first place that label is listed.
    """
    if pd.unknot:
        return OrientedDiagram(pd, (), 1, {}, ((),))
    where = _darts_by_label(pd)
    _check_connected(pd, where)
    n = len(pd.crossings)
    faces = _face_count(pd, where)
    if faces != n + 2:
        raise PDTraceError(
            f"code is not planar: {faces} faces for {n} crossings (expected {n + 2})"
        )

    incoming: dict[Dart, bool] = {}
    component_of: dict[int, int] = {}
    passages = []
    for label in sorted(where):
        if label in component_of:
            continue
        # collect the strand cycle through this label, unoriented
        comp_labels = []
        darts = []
        d = where[label][0]
        start = d
        while True:
            a = pd.crossings[d[0]][d[1]]
            comp_labels.append(a)
            far = _partner(where, pd, d)
            darts += [d, far]
            d = (far[0], (far[1] + 2) % 4)
            if d == start:
                break
        # darts alternate: leaving-end, arriving-end of each arc along this traversal
        unders = [i for i, dt in enumerate(darts) if dt[1] in (0, 2)]
        if unders:
            i = unders[0]
            forward = (i % 2 == 1) == (darts[i][1] == 0)
        else:
            low = min(comp_labels)
            first = min(where[low])
            forward = darts[comp_labels.index(low) * 2] == first
        for i, dt in enumerate(darts):
            into = (i % 2 == 1) == forward
            if dt[1] in (0, 2) and into != (dt[1] == 0):
                raise PDTraceError(
                    f"arc {pd.crossings[dt[0]][dt[1]]} would run backwards through "
                    f"the under-strand of crossing {dt[0] + 1}"
                )
            incoming[dt] = into
        cid = len(passages) + 1
        for a in comp_labels:
            component_of[a] = cid
        arrivals = [dt for dt in darts if incoming[dt]]
        if not forward:
            arrivals.reverse()
        passages.append(tuple(arrivals))

    crossings = []
    for ci, x in enumerate(pd.crossings):
        if incoming[(ci, 1)] == incoming[(ci, 3)]:
            raise PDTraceError(f"over-strand of crossing {ci + 1} has no consistent direction")
        over_in = 1 if incoming[(ci, 1)] else 3
        crossings.append(OrientedCrossing(x, over_in, 1 if over_in == 3 else -1))
    return OrientedDiagram(pd, tuple(crossings), len(passages), component_of, tuple(passages))


def seifert_circles(d: OrientedDiagram) -> SeifertGraph:
    """Smooth every crossing along the orientation and collapse to the Seifert graph.

    Circles are numbered in order of their lowest arc label; edge ``k`` is
    crossing ``k`` (zero-based) and carries its sign.
    """
    prov = Provenance("pd", d)
    if not d.crossings:
        return SeifertGraph.from_edges(1, [], d.l, prov)
    pd = d.pd
    where = _darts_by_label(pd)

    def smoothing_exit(dart: Dart) -> Dart:
        ci, k = dart
        x = d.crossings[ci]
        for nb in ((k + 1) % 4, (k - 1) % 4):
            if not x.is_incoming(nb):
                return (ci, nb)
        raise PDTraceError(f"crossing {ci + 1} has no outgoing slot next to slot {k}")

    def arrival(label: int) -> Dart:
        return next(dt for dt in where[label] if d.crossings[dt[0]].is_incoming(dt[1]))

    circle_of: dict[int, int] = {}
    circles = 0
    for label in sorted(where):
        if label in circle_of:
            continue
        circles += 1
        cid = circles
        a = label
        while a not in circle_of:
            circle_of[a] = cid
            ci, slot = smoothing_exit(arrival(a))
            a = pd.crossings[ci][slot]

    edges = []
    for ci, x in enumerate(d.crossings):
        ins = [k for k in range(4) if x.is_incoming(k)]
        u, v = sorted(circle_of[x.labels[k]] for k in ins)
        if u == v:
            raise PDTraceError(f"smoothing crossing {ci + 1} joins a circle to itself")
        edges.append((u, v, x.sign))
    return SeifertGraph.from_edges(circles, edges, d.l, prov)


def is_alternating_diagram(d: OrientedDiagram) -> bool:
    """Whether every component alternates over, under, over, ... (cyclically)."""
    for darts in d.passages:
        kinds = [slot % 2 for _, slot in darts]  # 0 under, 1 over
        for i in range(len(kinds)):
            if kinds[i] == kinds[i - 1] and len(kinds) > 1:
                return False
    return True
