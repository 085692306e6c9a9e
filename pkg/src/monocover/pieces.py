"""Cover pieces and covers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .graph import Colour


class Origin(Enum):
    COMPONENT = "COMPONENT"
    RED_BALL = "RED_BALL"
    BLUE_BALL = "BLUE_BALL"
    BASE_COMPLETE = "BASE_COMPLETE"


@dataclass(frozen=True)
class Provenance:
    kind: Origin
    centre: Optional[int] = None
    radius: Optional[int] = None

    @classmethod
    def ball(cls, colour: Colour, centre: int, radius: int) -> "Provenance":
        kind = Origin.RED_BALL if colour is Colour.RED else Origin.BLUE_BALL
        return cls(kind, centre, radius)


@dataclass(frozen=True)
class CoverPiece:
    """A monochromatic vertex set together with a diameter certificate.

    ``bound`` is an upper bound on the diameter of the ``colour`` subgraph
    induced on ``vertices``: exact for components and the complete-graph
    base case, ``2 * radius`` for balls.
    """

    colour: Colour
    vertices: frozenset
    provenance: Provenance
    bound: int

    def relabel(self, old_ids) -> "CoverPiece":
        prov = self.provenance
        if prov.centre is not None:
            prov = Provenance(prov.kind, old_ids[prov.centre], prov.radius)
        return CoverPiece(self.colour, frozenset(old_ids[v] for v in self.vertices), prov, self.bound)


@dataclass
class Cover:
    budget: int
    pieces: list = field(default_factory=list)

    def __len__(self):
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def covered(self) -> frozenset:
        out = set()
        for p in self.pieces:
            out |= p.vertices
        return frozenset(out)
