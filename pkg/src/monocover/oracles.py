"""Exact ground truth for small instances and the cover validator."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from .cover import f_diameter
from .errors import NotComplete, TooLarge, TrichotomyViolation
from .graph import Colour, ColouredGraph, mono_components, mono_diameter

ALPHA_LIMIT = 60
COMPONENT_LIMIT = 22
FOLK_SCAN_LIMIT = 5


# ---------------------------------------------------------------- alpha

def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_size(P, adj):
    """Greedy partition of ``P`` into cliques; the count bounds alpha from above."""
    count = 0
    while P:
        low = P & -P
        v = low.bit_length() - 1
        P ^= low
        cand = P & adj[v]
        while cand:
            u_low = cand & -cand
            u = u_low.bit_length() - 1
            P ^= u_low
            cand &= adj[u]
        count += 1
    return count


def _greedy_independent(P, adj):
    size = 0
    while P:
        v = min(_bits(P), key=lambda x: (bin(adj[x] & P).count("1"), x))
        size += 1
        P &= ~(adj[v] | (1 << v))
    return size


def _split(P, adj):
    parts = []
    while P:
        low = P & -P
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & P & ~comp
            comp |= frontier
        parts.append(comp)
        P &= ~comp
    return parts


def _alpha(P, adj):
    taken = 0
    changed = True
    while changed:
        changed = False
        for v in _bits(P):
            if bin(adj[v] & P).count("1") <= 1:
                # a vertex of degree <= 1 lies in some maximum independent set
                taken += 1
                P &= ~(adj[v] | (1 << v))
                changed = True
                break
    if not P:
        return taken
    parts = _split(P, adj)
    if len(parts) > 1:
        return taken + sum(_alpha(part, adj) for part in parts)
    best = _greedy_independent(P, adj)

    def search(P, size):
        nonlocal best
        if not P:
            best = max(best, size)
            return
        if size + _clique_cover_size(P, adj) <= best:
            return
        v = max(_bits(P), key=lambda x: (bin(adj[x] & P).count("1"), -x))
        search(P & ~(adj[v] | (1 << v)), size + 1)
        search(P & ~(1 << v), size)

    search(P, 0)
    return taken + best


def alpha_exact(g: ColouredGraph, limit: int | None = ALPHA_LIMIT) -> int:
    """Independence number of ``g`` (edges of any colour count as adjacency).

    Branch and bound on a highest-degree vertex, with a greedy lower bound
    and a greedy clique-partition upper bound.
    """
    if limit is not None and g.n > limit:
        raise TooLarge(f"alpha_exact limited to {limit} vertices, graph has {g.n}")
    return _alpha((1 << g.n) - 1, g.adjacency_bits())


def is_independent(g: ColouredGraph, vertices) -> bool:
    vs = sorted(vertices)
    return not any(g.adjacent(u, v) for u, v in itertools.combinations(vs, 2))


# ---------------------------------------------------------------- validator

@dataclass
class CoverReport:
    covers_all: bool
    piece_count: int
    max_piece_diameter: float
    budget: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        d = self.max_piece_diameter
        return {
            "covers_all": self.covers_all,
            "piece_count": self.piece_count,
            "max_piece_diameter": None if d == math.inf else d,
            "budget": self.budget,
            "violations": [{"piece": i, "reason": why} for i, why in self.violations],
        }


def verify_cover(g: ColouredGraph, cover, a: int) -> CoverReport:
    """Check a cover against the bounded-diameter contract for budget ``a``.

    Every problem found is reported; nothing is raised.  Piece diameters are
    computed exactly on the induced monochromatic subgraph.
    """
    pieces = list(cover)
    bound = f_diameter(a) if a >= 1 else 0
    violations = []
    covered = set()
    max_diam = 0
    for i, piece in enumerate(pieces):
        verts = frozenset(piece.vertices)
        bad = sorted(v for v in verts if not (isinstance(v, int) and 0 <= v < g.n))
        if bad:
            violations.append((i, f"vertex {bad[0]} out of range"))
            continue
        if not verts:
            violations.append((i, "empty piece"))
            continue
        covered |= verts
        diam = mono_diameter(g, piece.colour, verts)
        if diam == math.inf:
            violations.append((i, "disconnected piece"))
        elif diam > bound:
            violations.append((i, f"diameter {diam} exceeds bound {bound}"))
        max_diam = max(max_diam, diam)
    missing = [v for v in range(g.n) if v not in covered]
    for v in missing:
        violations.append((None, f"uncovered vertex {v}"))
    if len(pieces) > a:
        violations.append((None, f"{len(pieces)} pieces exceed budget {a}"))
    return CoverReport(not missing, len(pieces), max_diam, a, violations)


# ---------------------------------------------------------------- set cover

def min_component_cover_exact(g: ColouredGraph, limit: int = COMPONENT_LIMIT) -> int:
    """Fewest monochromatic components covering ``V(g)``, by subset enumeration."""
    comps = mono_components(g, Colour.RED) + mono_components(g, Colour.BLUE)
    if len(comps) > limit:
        raise TooLarge(f"{len(comps)} components exceed the enumeration limit {limit}")
    full = (1 << g.n) - 1
    masks = [sum(1 << v for v in c) for c in comps]
    for k in range(g.n + 1):
        for combo in itertools.combinations(masks, k):
            acc = 0
            for m in combo:
                acc |= m
            if acc == full:
                return k
    raise AssertionError("the red components alone cover every vertex")


# ---------------------------------------------------------------- folklore

class FolkCase(Enum):
    RED_LE_2 = "RED_LE_2"
    BLUE_LE_2 = "BLUE_LE_2"
    BOTH_EQ_3 = "BOTH_EQ_3"


def spanning_diameter(g: ColouredGraph, colour: Colour):
    if g.n == 0:
        return 0
    return mono_diameter(g, colour, range(g.n))


def folk_classify(g: ColouredGraph) -> FolkCase:
    pair = g.nonadjacent_pair()
    if pair is not None:
        raise NotComplete(f"vertices {pair[0]} and {pair[1]} are nonadjacent", pair)
    red = spanning_diameter(g, Colour.RED)
    if red <= 2:
        return FolkCase.RED_LE_2
    blue = spanning_diameter(g, Colour.BLUE)
    if blue <= 2:
        return FolkCase.BLUE_LE_2
    if red == 3 and blue == 3:
        return FolkCase.BOTH_EQ_3
    raise TrichotomyViolation(f"red diameter {red}, blue diameter {blue}")


def all_colourings(n: int):
    """Every RED/BLUE/BOTH colouring of K_n, in lexicographic order."""
    pairs = list(itertools.combinations(range(n), 2))
    for masks in itertools.product((1, 2, 3), repeat=len(pairs)):
        yield ColouredGraph(n, tuple((u, v, c) for (u, v), c in zip(pairs, masks)))


def folk_scan(n: int) -> dict:
    """Classify all colourings of K_n; violations are counted, not raised."""
    if n > FOLK_SCAN_LIMIT:
        raise TooLarge(f"folk scan limited to n <= {FOLK_SCAN_LIMIT}")
    if n < 0:
        raise ValueError("n must be non-negative")
    tally = Counter()
    violations = 0
    total = 0
    for g in all_colourings(n):
        total += 1
        try:
            tally[folk_classify(g).value] += 1
        except TrichotomyViolation:
            violations += 1
    return {
        "n": n,
        "colourings": total,
        "cases": {case.value: tally[case.value] for case in FolkCase},
        "violations": violations,
    }
