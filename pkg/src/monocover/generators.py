"""Seeded instance generators.

Random kinds draw from ``random.Random(seed)`` and nothing else.  The three
gadgets are built so that ``bounded_cover(g, a)`` is forced through a given
branch:

LONG_PATH_GADGET
    ``a`` disjoint blocks.  Each block is complete on ``f(a) + 2`` vertices:
    a red path of length ``f(a) + 1``, every other pair blue.  Independence
    number ``a``; the top level always finds a long red component and ends in
    a blue-ball removal.
SHORTCUT_GADGET
    One block like the above with two pairs left nonadjacent, one near each
    end of the path (blue distance 2 inside the block), plus ``a - 2`` long
    path blocks.  Independence number ``a``; the top level takes the
    two-ball shortcut.
SWAP_GADGET
    A long red path ``q0..qL`` inside a blue clique ``X`` and a two-vertex blue
    clique ``Y = {p, y}``, with red edges ``p-q1`` and ``y-q_{2a+3}`` and
    nothing else between ``X`` and ``Y``, plus ``a - 2`` isolated vertices.
    The good set first takes ``q_{2a+3}``, then collides at ``q_{4a+4}``, and
    the red neighbour ``y`` carries the unused label ``p``, forcing one swap.
    Vertex ids are fixed (``q0 = 0``, ``p = 1``) because the tie-breaks
    decide which vertices play these roles.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import asdict, dataclass
from enum import Enum

from .cover import f_diameter
from .errors import InvalidSpec
from .graph import ColouredGraph, Mask


class Kind(Enum):
    GNP = "GNP"
    COMPLETE = "COMPLETE"
    LONG_PATH_GADGET = "LONG_PATH_GADGET"
    SHORTCUT_GADGET = "SHORTCUT_GADGET"
    SWAP_GADGET = "SWAP_GADGET"


GADGETS = (Kind.LONG_PATH_GADGET, Kind.SHORTCUT_GADGET, Kind.SWAP_GADGET)


@dataclass(frozen=True)
class GenSpec:
    """What to generate.  ``n`` applies to GNP/COMPLETE, ``a`` to the gadgets."""

    kind: Kind
    n: int = 0
    p_edge: float = 0.5
    p_red: float = 0.4
    p_blue: float = 0.4
    p_both: float = 0.2
    seed: int = 0
    a: int = 2

    def as_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GenSpec":
        d = dict(d)
        try:
            d["kind"] = Kind(d["kind"])
            return cls(**d)
        except (KeyError, ValueError, TypeError) as exc:
            raise InvalidSpec(f"bad generator spec: {exc}") from exc


def child_seed(seed: int, index: int) -> int:
    """Independent 64-bit seed for the ``index``-th instance of a batch."""
    digest = hashlib.blake2b(f"{seed}/{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _check(spec: GenSpec) -> None:
    if not isinstance(spec.kind, Kind):
        raise InvalidSpec(f"unknown kind {spec.kind!r}")
    if spec.n < 0:
        raise InvalidSpec("n must be non-negative")
    probs = (spec.p_edge, spec.p_red, spec.p_blue, spec.p_both)
    if any(not 0.0 <= p <= 1.0 for p in probs):
        raise InvalidSpec("probabilities must lie in [0, 1]")
    if not math.isclose(spec.p_red + spec.p_blue + spec.p_both, 1.0, abs_tol=1e-9):
        raise InvalidSpec("p_red + p_blue + p_both must equal 1")
    if spec.kind in GADGETS and spec.a < 2:
        raise InvalidSpec("gadgets need a >= 2")
    if not 0 <= spec.seed < 2**64:
        raise InvalidSpec("seed must be a 64-bit unsigned integer")


def generate(spec: GenSpec) -> ColouredGraph:
    _check(spec)
    rng = random.Random(spec.seed)
    if spec.kind is Kind.GNP:
        return _random(spec, rng, complete=False)
    if spec.kind is Kind.COMPLETE:
        return _random(spec, rng, complete=True)
    if spec.kind is Kind.LONG_PATH_GADGET:
        return _shuffled(_long_path_blocks(spec.a, spec.a), rng)
    if spec.kind is Kind.SHORTCUT_GADGET:
        return _shuffled(_shortcut(spec.a), rng)
    return swap_gadget(spec.a)


def _colour(spec, rng):
    u = rng.random()
    if u < spec.p_red:
        return Mask.RED
    if u < spec.p_red + spec.p_blue:
        return Mask.BLUE
    return Mask.BOTH


def _random(spec, rng, complete):
    edges = []
    for u in range(spec.n):
        for v in range(u + 1, spec.n):
            if complete or rng.random() < spec.p_edge:
                edges.append((u, v, _colour(spec, rng)))
    return ColouredGraph(spec.n, tuple(edges))


def _path_block(offset, length, missing=()):
    """Complete block on ``length + 1`` vertices: red path, blue elsewhere."""
    edges = []
    for i in range(length + 1):
        for j in range(i + 1, length + 1):
            if (i, j) in missing:
                continue
            edges.append((offset + i, offset + j, Mask.RED if j == i + 1 else Mask.BLUE))
    return edges


def _long_path_blocks(a, blocks, offset=0):
    length = f_diameter(a) + 1
    edges = []
    for b in range(blocks):
        edges += _path_block(offset + b * (length + 1), length)
    return offset + blocks * (length + 1), edges


def _shortcut(a):
    length = f_diameter(a) + 1
    missing = {(2, 4), (length - 4, length - 2)}
    edges = _path_block(0, length, missing)
    n, more = _long_path_blocks(a, a - 2, offset=length + 1)
    return n, edges + more


def _shuffled(built, rng):
    n, edges = built
    perm = list(range(n))
    rng.shuffle(perm)
    return ColouredGraph(n, tuple((perm[u], perm[v], c) for u, v, c in edges))


def swap_gadget(a: int) -> ColouredGraph:
    """See the module docstring; ids: ``q0 = 0``, ``p = 1``, ``q_k = k + 1``."""
    length = f_diameter(a) + 1
    q = [0] + [k + 1 for k in range(1, length + 1)]
    p = 1
    y = length + 2
    edges = []
    for i in range(length + 1):
        for j in range(i + 1, length + 1):
            edges.append((q[i], q[j], Mask.RED if j == i + 1 else Mask.BLUE))
    edges.append((p, y, Mask.BLUE))
    edges.append((p, q[1], Mask.RED))
    edges.append((y, q[2 * a + 3], Mask.RED))
    n = y + 1 + (a - 2)
    return ColouredGraph(n, tuple(edges))
