"""Red/blue edge-coloured simple graphs and monochromatic distance primitives.

Vertices are ``0..n-1``.  Every edge carries a colour mask: RED, BLUE or
BOTH.  An edge coloured BOTH belongs to the red graph and to the blue graph.
"Adjacent" always means joined by an edge of any colour.

Distances are returned as lists indexed by vertex, with ``None`` for
unreachable vertices.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from enum import Enum, IntFlag
from typing import Iterable, Optional, Sequence

from .errors import (
    DuplicateEdge,
    EmptySet,
    EmptySourceSet,
    SelfLoop,
    UncolouredEdge,
    VertexOutOfRange,
)

__all__ = [
    "Colour",
    "Mask",
    "ColouredGraph",
    "validate",
    "mono_bfs",
    "ball",
    "mono_components",
    "mono_diameter",
    "eccentric_pair",
    "induced",
    "shortest_path_tree",
]


class Colour(Enum):
    RED = 1
    BLUE = 2

    def other(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED

    @property
    def code(self) -> str:
        return "R" if self is Colour.RED else "B"


class Mask(IntFlag):
    NONE = 0
    RED = 1
    BLUE = 2
    BOTH = 3

    def has(self, colour: Colour) -> bool:
        return bool(self & colour.value)


@dataclass(frozen=True)
class ColouredGraph:
    """Immutable simple graph with a 2-colouring of its edges.

    ``edges`` may be given in any order and orientation; after validation it
    is stored as a sorted tuple of ``(u, v, Mask)`` with ``u < v``.
    """

    n: int
    edges: tuple = ()
    _mask: dict = field(init=False, repr=False, compare=False)
    _adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple((u, v, _as_mask(c)) for u, v, c in self.edges)
        object.__setattr__(self, "edges", edges)
        validate(self)
        canon = tuple(sorted((min(u, v), max(u, v), Mask(c)) for u, v, c in edges))
        object.__setattr__(self, "edges", canon)
        masks = {}
        red = [[] for _ in range(self.n)]
        blue = [[] for _ in range(self.n)]
        anyc = [[] for _ in range(self.n)]
        for u, v, c in canon:
            masks[(u, v)] = c
            for a, b in ((u, v), (v, u)):
                anyc[a].append(b)
                if c & Mask.RED:
                    red[a].append(b)
                if c & Mask.BLUE:
                    blue[a].append(b)
        for lists in (red, blue, anyc):
            for lst in lists:
                lst.sort()
        object.__setattr__(self, "_mask", masks)
        object.__setattr__(
            self, "_adj", (None, tuple(map(tuple, red)), tuple(map(tuple, blue)), tuple(map(tuple, anyc)))
        )

    @classmethod
    def complete(cls, n: int, colour_of) -> "ColouredGraph":
        """Complete graph whose pair ``(u, v)`` gets mask ``colour_of(u, v)``."""
        return cls(n, tuple((u, v, colour_of(u, v)) for u in range(n) for v in range(u + 1, n)))

    def mask(self, u: int, v: int) -> Mask:
        if u > v:
            u, v = v, u
        return self._mask.get((u, v), Mask.NONE)

    def adjacent(self, u: int, v: int) -> bool:
        return self.mask(u, v) != Mask.NONE

    def neighbours(self, v: int, colour: Optional[Colour] = None) -> tuple:
        """Sorted neighbours of ``v`` in one colour, or in any colour if ``colour`` is None."""
        return self._adj[3 if colour is None else colour.value][v]

    def vertices(self) -> range:
        return range(self.n)

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def nonadjacent_pair(self) -> Optional[tuple]:
        for u in range(self.n):
            nbrs = set(self._adj[3][u])
            for v in range(u + 1, self.n):
                if v not in nbrs:
                    return (u, v)
        return None

    def adjacency_bits(self) -> list:
        """Any-colour adjacency as one int bitset per vertex."""
        bits = [0] * self.n
        for u, v, _ in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return bits


def _as_mask(c):
    if isinstance(c, Colour):
        return Mask(c.value)
    if isinstance(c, int) and 0 <= c <= 3:
        return Mask(c)
    return c


def validate(g: ColouredGraph) -> None:
    """Raise if ``g.edges`` breaks a graph invariant; the error names the edge."""
    if not isinstance(g.n, int) or g.n < 0:
        raise VertexOutOfRange(f"vertex count must be a non-negative integer, got {g.n!r}")
    seen = set()
    for edge in g.edges:
        u, v, c = edge
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{g.n - 1}", edge)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", edge)
        if not isinstance(c, int) or c not in (Mask.RED, Mask.BLUE, Mask.BOTH):
            raise UncolouredEdge(f"edge ({u}, {v}) has invalid colour mask {c!r}", edge)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) appears more than once", edge)
        seen.add(key)


def mono_bfs(
    g: ColouredGraph,
    colour: Colour,
    sources: Iterable[int],
    limit: Optional[int] = None,
    within=None,
) -> list:
    """Distances from ``sources`` using only edges of ``colour``.

    Vertices farther than ``limit`` (when given) or unreachable map to None.
    With ``within``, paths are confined to that vertex set.
    """
    sources = list(sources)
    if not sources:
        raise EmptySourceSet("mono_bfs needs at least one source")
    dist = [None] * g.n
    adj = g._adj[colour.value]
    queue = deque()
    for s in sources:
        if dist[s] is None:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for w in adj[u]:
            if dist[w] is None and (within is None or w in within):
                dist[w] = du + 1
                queue.append(w)
    return dist


def ball(g: ColouredGraph, colour: Colour, v: int, d: int) -> frozenset:
    """All vertices at ``colour``-distance at most ``d`` from ``v``."""
    dist = mono_bfs(g, colour, [v], limit=d)
    return frozenset(u for u, du in enumerate(dist) if du is not None)


def shortest_path_tree(g: ColouredGraph, colour: Colour, root: int) -> tuple:
    """BFS distances and parents from ``root``; the parent is the first discoverer,
    scanning the queue FIFO and neighbours in ascending order."""
    dist = [None] * g.n
    parent = [None] * g.n
    dist[root] = 0
    queue = deque([root])
    adj = g._adj[colour.value]
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def mono_components(g: ColouredGraph, colour: Colour) -> list:
    """Vertex sets of the ``colour`` components, ordered by smallest vertex.

    A vertex with no edge of this colour is a singleton component.
    """
    comp = [None] * g.n
    out = []
    adj = g._adj[colour.value]
    for s in range(g.n):
        if comp[s] is not None:
            continue
        idx = len(out)
        comp[s] = idx
        members = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if comp[w] is None:
                    comp[w] = idx
                    members.append(w)
                    stack.append(w)
        out.append(frozenset(members))
    return out


def _eccentricities(g, colour, vertices):
    within = vertices if isinstance(vertices, (set, frozenset)) else frozenset(vertices)
    for v in sorted(within):
        dist = mono_bfs(g, colour, [v], within=within)
        far, far_d = v, 0
        for u in sorted(within):
            du = dist[u]
            if du is None:
                yield v, None, math.inf
                break
            if du > far_d:
                far, far_d = u, du
        else:
            yield v, far, far_d


def mono_diameter(g: ColouredGraph, colour: Colour, s: Iterable[int]):
    """Diameter of the ``colour`` subgraph induced on ``s``; ``math.inf`` if disconnected."""
    s = frozenset(s)
    if not s:
        raise EmptySet("diameter of an empty vertex set")
    best = 0
    for _, _, ecc in _eccentricities(g, colour, s):
        if ecc == math.inf:
            return math.inf
        best = max(best, ecc)
    return best


def eccentric_pair(g: ColouredGraph, colour: Colour, component: Iterable[int]) -> tuple:
    """Exact diametral pair ``(z, w, dist)`` of a ``colour`` component.

    Every vertex is BFS'd; ``z`` is the smallest vertex of maximum
    eccentricity and ``w`` the smallest vertex at that distance from it.
    """
    component = frozenset(component)
    if not component:
        raise EmptySet("eccentric_pair of an empty component")
    best = None
    for v, far, ecc in _eccentricities(g, colour, component):
        if ecc == math.inf:
            raise ValueError(f"vertex set is not one {colour.name} component")
        if best is None or ecc > best[2]:
            best = (v, far, ecc)
    return best


def induced(g: ColouredGraph, keep: Sequence[int]) -> tuple:
    """Induced subgraph on ``keep`` relabelled to ``0..len(keep)-1``.

    Returns ``(subgraph, old_ids)`` where ``old_ids[new] == old``.
    """
    old_ids = tuple(sorted(keep))
    new_id = {v: i for i, v in enumerate(old_ids)}
    edges = tuple(
        (new_id[u], new_id[v], c) for u, v, c in g.edges if u in new_id and v in new_id
    )
    return ColouredGraph(len(old_ids), edges), old_ids
