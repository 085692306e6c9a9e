"""Covers by at most ``a`` monochromatic subgraphs of diameter at most ``8a^2+12a+4``.

``bounded_cover(g, a)`` works for any ``a`` that is at least the
independence number of ``g``.  Each level of the recursion does one of:

* ``a == 1``: ``g`` is complete and one colour spans it with diameter <= 3.
* every monochromatic component is short: Kőnig component cover.
* a long component in colour ``role`` exists, with far endpoint ``z``:

  - two nonadjacent vertices near ``z`` joined by a short path of the other
    colour: emit two balls, recurse with budget ``a - 2``;
  - otherwise grow a good set ``S`` near ``z`` until the alternating
    closure ``T`` of a label collision is closed, emit one other-colour ball of
    radius 2 per label of ``T``, recurse with budget ``a - |T|``.

Throughout, "role" is the colour that has the long component and "other"
is the remaining colour.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from typing import Optional

from .errors import (
    BudgetExhausted,
    CountingFailure,
    CoverageGap,
    GoodnessViolated,
    LabelMissing,
    LabelNotUnique,
    NonPositiveBudget,
    NoVertexAtExactDistance,
    NotComplete,
    UnlabelledNeighbour,
)
from .graph import (
    Colour,
    ColouredGraph,
    ball,
    eccentric_pair,
    induced,
    mono_bfs,
    mono_components,
    mono_diameter,
    shortest_path_tree,
)
from .konig import component_cover
from .pieces import Cover, CoverPiece, Origin, Provenance

__all__ = [
    "f_diameter",
    "r_radius",
    "bounded_cover",
    "base_complete",
    "find_large_component",
    "blue_shortcut",
    "build_labels",
    "GoodSetState",
    "initial_state",
    "check_good",
    "extend_or_collide",
    "closure",
    "apply_swap",
    "removal_pieces",
    "Extended",
    "Collision",
    "Closed",
    "SwapWitness",
    "AlternatingForest",
    "CoverTrace",
]


def f_diameter(a: int) -> int:
    if a < 1:
        raise NonPositiveBudget(f"budget must be positive, got {a}")
    return 8 * a * a + 12 * a + 4


def r_radius(a: int) -> int:
    return f_diameter(a) // 2


@dataclass
class CoverTrace:
    """Counts of the branches taken while building a cover."""

    events: list = field(default_factory=list)

    def add(self, name, **info):
        self.events.append((name, info))

    def count(self, name) -> int:
        return sum(1 for e, _ in self.events if e == name)


# ---------------------------------------------------------------- base case

def base_complete(g: ColouredGraph) -> CoverPiece:
    """One piece spanning a complete graph with diameter at most 3.

    Picks the colour with the smaller spanning diameter, RED on ties.
    """
    pair = g.nonadjacent_pair()
    if pair is not None:
        raise NotComplete(f"budget 1 needs a complete graph; {pair} is nonadjacent", pair)
    if g.n == 0:
        raise ValueError("base_complete needs at least one vertex")
    everything = frozenset(range(g.n))
    red = mono_diameter(g, Colour.RED, everything)
    blue = mono_diameter(g, Colour.BLUE, everything)
    colour, diam = (Colour.RED, red) if red <= blue else (Colour.BLUE, blue)
    if diam > 3:
        raise GoodnessViolated(f"complete graph with spanning diameters {red} and {blue}")
    return CoverPiece(colour, everything, Provenance(Origin.BASE_COMPLETE), diam)


# ---------------------------------------------------------------- long component

def find_large_component(g: ColouredGraph, a: int) -> Optional[tuple]:
    """``(role, z)`` for the first component of diameter >= f(a), else None.

    RED components are examined before BLUE, each in order of smallest vertex;
    ``z`` is an endpoint of an exact diametral pair.
    """
    f = f_diameter(a)
    for colour in (Colour.RED, Colour.BLUE):
        for comp in mono_components(g, colour):
            if len(comp) <= f:
                continue
            z, _, dist = eccentric_pair(g, colour, comp)
            if dist >= f:
                return colour, z
    return None


def blue_shortcut(g: ColouredGraph, role: Colour, z: int, r: int, a: int) -> Optional[tuple]:
    """Lexicographically first nonadjacent pair ``x < y`` within role-distance
    ``r - 1`` of ``z`` whose other-colour distance in ``g`` is below ``r``."""
    near = sorted(ball(g, role, z, r - 1))
    other = role.other()
    for x in near:
        candidates = [y for y in near if y > x and not g.adjacent(x, y)]
        if not candidates:
            continue
        dist = mono_bfs(g, other, [x], limit=r - 1)
        for y in candidates:
            if dist[y] is not None:
                return x, y
    return None


# ---------------------------------------------------------------- labels

def build_labels(g: ColouredGraph, role: Colour, z: int, r: int) -> tuple:
    """Label domain, greedy maximal independent set and labels.

    Returns ``(domain, I, labels, dist_from_I)``; ``domain`` is the role ball
    of radius ``r - 1`` around ``z``.  Vertices of the domain at role-distance
    at least 2 from ``I`` are labelled with their unique other-colour
    neighbour in ``I``.
    """
    domain = ball(g, role, z, r - 1)
    indep = []
    taken = set()
    for u in sorted(domain):
        if not any(w in taken for w in g.neighbours(u)):
            indep.append(u)
            taken.add(u)
    indep = frozenset(indep)
    dist_i = mono_bfs(g, role, indep)
    other = role.other()
    labels = {}
    for u in sorted(domain):
        if dist_i[u] is None or dist_i[u] < 2:
            continue
        owners = [w for w in g.neighbours(u, other) if w in indep]
        if not owners:
            raise LabelMissing(f"vertex {u} has no {other.name} neighbour in the independent set")
        if len(owners) > 1:
            raise LabelNotUnique(f"vertex {u} has {other.name} neighbours {owners} in the independent set")
        labels[u] = owners[0]
    if __debug__:
        ordered = sorted(labels)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1:]:
                if labels[u] != labels[v]:
                    assert not g.mask(u, v).has(other), f"{u},{v}: different labels, {other.name} edge"
                else:
                    assert g.adjacent(u, v), f"{u},{v}: same label, nonadjacent"
    return domain, indep, labels, dist_i


@dataclass(frozen=True)
class GoodSetState:
    """Proof state of one level: the good set ``S`` and everything it is measured against."""

    role: Colour
    z: int
    r: int
    a: int
    domain: frozenset
    I: frozenset
    labels: dict
    S: tuple
    dist_z: tuple
    parent: tuple
    dist_I: tuple

    @property
    def t(self) -> int:
        return len(self.S)

    def label_owner(self) -> dict:
        return {self.labels[s]: s for s in self.S}


def initial_state(g: ColouredGraph, role: Colour, z: int, a: int, r: Optional[int] = None) -> GoodSetState:
    if r is None:
        r = r_radius(a)
    domain, indep, labels, dist_i = build_labels(g, role, z, r)
    dist_z, parent = shortest_path_tree(g, role, z)
    return GoodSetState(role, z, r, a, domain, indep, labels, (), tuple(dist_z), tuple(parent), tuple(dist_i))


def check_good(g: ColouredGraph, state: GoodSetState) -> None:
    """Raise GoodnessViolated unless ``state.S`` is t-good."""
    t, a, r = state.t, state.a, state.r
    if t > a:
        raise GoodnessViolated(f"good set of size {t} exceeds budget {a}")
    if len(set(state.S)) != t:
        raise GoodnessViolated("good set repeats a vertex")
    reach = r - a - 2 + t
    sep = 2 * a - 2 * t + 3
    for s in state.S:
        d = state.dist_z[s]
        if d is None or d > reach:
            raise GoodnessViolated(f"{s} at role-distance {d} from z, limit {reach}")
        others = (set(state.S) - {s}) | state.I
        dist = mono_bfs(g, state.role, [s], limit=sep - 1)
        close = sorted(v for v in others if dist[v] is not None)
        if close:
            raise GoodnessViolated(f"{s} within role-distance {sep - 1} of {close}")
        if s not in state.labels:
            raise GoodnessViolated(f"{s} is unlabelled")
    labs = [state.labels[s] for s in state.S]
    if len(set(labs)) != t:
        raise GoodnessViolated(f"repeated label among {labs}")


# ---------------------------------------------------------------- phases

@dataclass(frozen=True)
class Extended:
    state: GoodSetState


@dataclass(frozen=True)
class Collision:
    y0: int
    s: int


@dataclass(frozen=True)
class AlternatingForest:
    """Members of ``T`` with how each entered: ``pred[s2] = (s, y)`` means a
    role edge ``s-y`` followed by an other-colour edge ``y-s2``."""

    T: frozenset
    order: tuple
    pred: dict
    root: tuple

    def path_to(self, s: int) -> tuple:
        """Alternating path ``(y0, s1, y1, s2, ..., s)``."""
        chain = [s]
        while s in self.pred:
            prev, y = self.pred[s]
            chain += [y, prev]
            s = prev
        chain.append(self.root[0])
        return tuple(reversed(chain))


@dataclass(frozen=True)
class Closed:
    forest: AlternatingForest


@dataclass(frozen=True)
class SwapWitness:
    path: tuple
    y: int


def extend_or_collide(g: ColouredGraph, state: GoodSetState, a: Optional[int] = None):
    """Find the first vertex ``y0`` on a shortest role path from ``z`` that is
    far from ``S`` and ``I``; extend ``S`` by it or report whose label it shares."""
    a = state.a if a is None else a
    t = state.t
    target = state.r - a - 2 + t
    ends = [v for v in range(g.n) if state.dist_z[v] == target]
    if not ends:
        raise NoVertexAtExactDistance(f"no vertex at role-distance {target} from {state.z}")
    path = []
    v = min(ends)
    while v is not None:
        path.append(v)
        v = state.parent[v]
    path.reverse()
    sep = 2 * a - 2 * t + 3
    blocked = mono_bfs(g, state.role, set(state.S) | state.I, limit=sep - 1)
    y0 = next((y for y in path if blocked[y] is None), None)
    if y0 is None:
        raise CountingFailure(f"all {len(path)} path vertices lie within {sep - 1} of S or I")
    label = state.labels.get(y0)
    if label is None:
        raise LabelMissing(f"path vertex {y0} is unlabelled")
    owner = state.label_owner().get(label)
    if owner is None:
        new = replace(state, S=state.S + (y0,))
        check_good(g, new)
        return Extended(new)
    if not g.mask(y0, owner).has(state.role.other()):
        raise GoodnessViolated(f"{y0} and {owner} share a label but no {state.role.other().name} edge")
    return Collision(y0, owner)


def closure(g: ColouredGraph, state: GoodSetState, y0: int, s1: int):
    """Grow the alternating closure of ``s1`` until closed or a fresh label shows up."""
    owner = state.label_owner()
    other = state.role.other()
    order = [s1]
    in_t = {s1}
    pred = {}
    queue = deque([s1])
    while queue:
        s = queue.popleft()
        for y in g.neighbours(s, state.role):
            label = state.labels.get(y)
            if label is None:
                raise UnlabelledNeighbour(f"role neighbour {y} of {s} is unlabelled")
            nxt = owner.get(label)
            if nxt is None:
                forest = AlternatingForest(frozenset(in_t), tuple(order), dict(pred), (y0, s1))
                return SwapWitness(forest.path_to(s), y)
            if nxt in in_t:
                continue
            if not g.mask(y, nxt).has(other):
                raise GoodnessViolated(f"{y} and {nxt} share a label but no {other.name} edge")
            in_t.add(nxt)
            order.append(nxt)
            pred[nxt] = (s, y)
            queue.append(nxt)
    t_labels = {state.labels[s] for s in in_t}
    for s in in_t:
        for y in g.neighbours(s, state.role):
            if state.labels[y] not in t_labels:
                raise GoodnessViolated(f"closed set misses the label of {y}")
    return Closed(AlternatingForest(frozenset(in_t), tuple(order), pred, (y0, s1)))


def apply_swap(g: ColouredGraph, state: GoodSetState, path: tuple, y: int) -> GoodSetState:
    """Replace ``s1..sk`` on the alternating path by ``y0..y_{k-1}`` and ``y``."""
    if state.t >= len(state.I):
        raise GoodnessViolated("swap with every label already used")
    ys = path[0::2]
    ss = path[1::2]
    gone = set(ss)
    new_s = tuple(s for s in state.S if s not in gone) + tuple(ys) + (y,)
    new = replace(state, S=new_s)
    check_good(g, new)
    old_labels = {state.labels[s] for s in state.S}
    if {state.labels[v] for v in new_s} != old_labels | {state.labels[y]} or state.labels[y] in old_labels:
        raise GoodnessViolated("label bookkeeping after swap")
    return new


def removal_pieces(g: ColouredGraph, state: GoodSetState, forest: AlternatingForest) -> list:
    """Other-colour balls of radius 2 around the labels of ``T``; they swallow ``T`` and ``N(T)``."""
    other = state.role.other()
    pieces = []
    union = set()
    for label in sorted({state.labels[s] for s in forest.T}):
        verts = ball(g, other, label, 2)
        union |= verts
        pieces.append(CoverPiece(other, verts, Provenance.ball(other, label, 2), 4))
    for s in forest.T:
        missing = [v for v in (s,) + g.neighbours(s) if v not in union]
        if missing:
            raise CoverageGap(f"{missing} escape the removal around {s}")
    return pieces


# ---------------------------------------------------------------- driver

def bounded_cover(g: ColouredGraph, a: int, trace: Optional[CoverTrace] = None) -> Cover:
    """Cover ``V(g)`` by at most ``a`` monochromatic pieces of diameter <= f(a).

    ``a`` must be at least the independence number of ``g``; a violation is
    reported as BudgetExhausted (or NotComplete when ``a == 1``).
    """
    f_diameter(a)
    budget = a
    trace = trace if trace is not None else CoverTrace()
    pieces = []
    ids = tuple(range(g.n))
    while True:
        emitted, removed, next_a = _level(g, a, trace)
        pieces += [p.relabel(ids) for p in emitted]
        if removed is None:
            break
        keep = [v for v in range(g.n) if v not in removed]
        g, sub_ids = induced(g, keep)
        ids = tuple(ids[v] for v in sub_ids)
        a = next_a
    return Cover(budget, pieces)


def _level(g: ColouredGraph, a: int, trace: CoverTrace) -> tuple:
    """One recursion level: ``(pieces, removed vertex set or None, next budget)``."""
    if g.n == 0:
        return [], None, a
    if a <= 0:
        raise BudgetExhausted(f"{g.n} vertices left with no budget")
    if a == 1:
        trace.add("base_complete", n=g.n)
        return [base_complete(g)], None, a
    hit = find_large_component(g, a)
    if hit is None:
        cover = component_cover(g)
        if len(cover) > a:
            raise BudgetExhausted(f"component cover needs {len(cover)} pieces, budget {a}")
        trace.add("component_cover", n=g.n, pieces=len(cover))
        return cover.pieces, None, a
    role, z = hit
    r = r_radius(a)
    other = role.other()
    trace.add("large_component", role=role, z=z, a=a)
    pair = blue_shortcut(g, role, z, r, a)
    if pair is not None:
        x, _ = pair
        near = ball(g, role, z, r)
        around = ball(g, other, x, r)
        trace.add("shortcut", pair=pair, a=a)
        pieces = [
            CoverPiece(role, near, Provenance.ball(role, z, r), 2 * r),
            CoverPiece(other, around, Provenance.ball(other, x, r), 2 * r),
        ]
        return pieces, near | around, a - 2
    state = initial_state(g, role, z, a, r)
    if len(state.I) > a:
        raise BudgetExhausted(f"independent set of size {len(state.I)} exceeds budget {a}")
    while True:
        step = extend_or_collide(g, state, a)
        if isinstance(step, Extended):
            trace.add("extend", t=step.state.t)
            state = step.state
            continue
        trace.add("collision", y0=step.y0, s=step.s)
        result = closure(g, state, step.y0, step.s)
        if isinstance(result, SwapWitness):
            state = apply_swap(g, state, result.path, result.y)
            trace.add("swap", t=state.t, k=len(result.path) // 2)
            continue
        pieces = removal_pieces(g, state, result.forest)
        trace.add("removal", size=len(result.forest.T))
        removed = set()
        for p in pieces:
            removed |= p.vertices
        return pieces, removed, a - len(result.forest.T)
