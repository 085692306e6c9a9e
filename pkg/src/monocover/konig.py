"""Bipartite matching, Kőnig vertex covers, and monochromatic component covers.

A 2-coloured graph ``G`` yields a bipartite graph whose left side is the red
components, whose right side is the blue components, and which has an edge
for every vertex of ``G`` (joining its red and its blue component).  A
minimum vertex cover of that graph is a set of components covering ``V(G)``,
and a maximum matching picks pairwise nonadjacent witness vertices of ``G``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidMatching, NotMaximumMatching
from .graph import Colour, ColouredGraph, mono_components, mono_diameter
from .pieces import Cover, CoverPiece, Origin, Provenance

__all__ = [
    "BipartiteGraph",
    "VertexCover",
    "IntersectionGraph",
    "max_matching",
    "konig_cover",
    "build_intersection",
    "component_cover",
    "independent_witness",
]


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    edges: frozenset

    def __init__(self, left_count: int, right_count: int, edges: Iterable[tuple] = ()):
        edges = list(edges)
        as_set = frozenset(edges)
        if len(as_set) != len(edges):
            raise ValueError("duplicate edge in bipartite graph")
        for l, r in as_set:
            if not (0 <= l < left_count and 0 <= r < right_count):
                raise ValueError(f"bipartite edge ({l}, {r}) out of range")
        object.__setattr__(self, "left_count", left_count)
        object.__setattr__(self, "right_count", right_count)
        object.__setattr__(self, "edges", as_set)

    def left_adjacency(self) -> list:
        adj = [[] for _ in range(self.left_count)]
        for l, r in self.edges:
            adj[l].append(r)
        for lst in adj:
            lst.sort()
        return adj


@dataclass(frozen=True)
class VertexCover:
    left: frozenset
    right: frozenset

    def __len__(self):
        return len(self.left) + len(self.right)

    def covers(self, h: BipartiteGraph) -> bool:
        return all(l in self.left or r in self.right for l, r in h.edges)


@dataclass(frozen=True)
class IntersectionGraph:
    graph: BipartiteGraph
    red_components: tuple
    blue_components: tuple
    witness: dict


def _check_matching(h: BipartiteGraph, m) -> None:
    lefts = [l for l, _ in m]
    rights = [r for _, r in m]
    if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
        raise InvalidMatching("matching repeats a vertex")
    for e in m:
        if e not in h.edges:
            raise InvalidMatching(f"{e} is not an edge")


def max_matching(h: BipartiteGraph) -> frozenset:
    """Maximum-cardinality matching by Hopcroft-Karp, as a set of (left, right)."""
    adj = h.left_adjacency()
    match_l = [-1] * h.left_count
    match_r = [-1] * h.right_count
    while True:
        dist = [math.inf] * h.left_count
        queue = deque()
        for u in range(h.left_count):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
        limit = math.inf
        while queue:
            u = queue.popleft()
            if dist[u] >= limit:
                continue
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    limit = min(limit, dist[u] + 1)
                elif dist[w] == math.inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if limit == math.inf:
            break
        pos = [0] * h.left_count
        for root in range(h.left_count):
            if match_l[root] != -1:
                continue
            # iterative DFS along the BFS layers
            stack = [root]
            while stack:
                u = stack[-1]
                advanced = False
                while pos[u] < len(adj[u]):
                    v = adj[u][pos[u]]
                    pos[u] += 1
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == limit:
                            # flip the path recorded on the stack
                            for x in reversed(stack):
                                nxt = match_l[x]
                                match_l[x], match_r[v] = v, x
                                v = nxt
                            stack = []
                            advanced = True
                            break
                    elif dist[w] == dist[u] + 1:
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = math.inf
                    stack.pop()
    return frozenset((u, match_l[u]) for u in range(h.left_count) if match_l[u] != -1)


def konig_cover(h: BipartiteGraph, m) -> VertexCover:
    """Minimum vertex cover from a maximum matching.

    Let Z be the vertices reachable from unmatched left vertices by
    alternating paths (any edge left to right, matching edge right to left).
    The cover is (left minus Z) plus (right within Z).
    """
    m = frozenset(m)
    _check_matching(h, m)
    adj = h.left_adjacency()
    match_l = {l: r for l, r in m}
    match_r = {r: l for l, r in m}
    seen_l = set(u for u in range(h.left_count) if u not in match_l)
    seen_r = set()
    queue = deque(sorted(seen_l))
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in seen_r:
                continue
            seen_r.add(v)
            w = match_r.get(v)
            if w is None:
                raise NotMaximumMatching(f"augmenting path ends at right vertex {v}")
            if w not in seen_l:
                seen_l.add(w)
                queue.append(w)
    return VertexCover(
        frozenset(u for u in range(h.left_count) if u not in seen_l), frozenset(seen_r)
    )


def build_intersection(g: ColouredGraph) -> IntersectionGraph:
    red = mono_components(g, Colour.RED)
    blue = mono_components(g, Colour.BLUE)
    red_of = [0] * g.n
    blue_of = [0] * g.n
    for i, comp in enumerate(red):
        for v in comp:
            red_of[v] = i
    for j, comp in enumerate(blue):
        for v in comp:
            blue_of[v] = j
    witness = {}
    for v in range(g.n):
        witness.setdefault((red_of[v], blue_of[v]), v)
    return IntersectionGraph(
        BipartiteGraph(len(red), len(blue), witness.keys()), tuple(red), tuple(blue), witness
    )


def independent_witness(ig: IntersectionGraph, m) -> frozenset:
    _check_matching(ig.graph, m)
    return frozenset(ig.witness[e] for e in m)


def component_cover(g: ColouredGraph) -> Cover:
    """At most alpha(g) monochromatic components covering all vertices.

    The returned ``Cover`` has ``budget`` equal to the matching number of the
    intersection graph, which is also the number of pieces.
    """
    ig = build_intersection(g)
    m = max_matching(ig.graph)
    cover = konig_cover(ig.graph, m)
    pieces = []
    for colour, comps, chosen in (
        (Colour.RED, ig.red_components, cover.left),
        (Colour.BLUE, ig.blue_components, cover.right),
    ):
        for i in sorted(chosen):
            comp = comps[i]
            pieces.append(
                CoverPiece(colour, comp, Provenance(Origin.COMPONENT), mono_diameter(g, colour, comp))
            )
    return Cover(len(m), pieces)
