"""Bounded-diameter monochromatic covers of 2-edge-coloured graphs."""

from .cover import bounded_cover, f_diameter, r_radius
from .graph import Colour, ColouredGraph, Mask
from .konig import component_cover
from .oracles import alpha_exact, verify_cover
from .pieces import Cover, CoverPiece

__all__ = [
    "Colour",
    "ColouredGraph",
    "Cover",
    "CoverPiece",
    "Mask",
    "alpha_exact",
    "bounded_cover",
    "component_cover",
    "f_diameter",
    "r_radius",
    "verify_cover",
]
