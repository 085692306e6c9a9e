"""JSON documents for instances and covers, and DOT export.

Instance: ``{"n": 3, "edges": [{"u": 0, "v": 1, "c": "R"}]}`` with ``c`` one
of ``"R"``, ``"B"``, ``"RB"``.  An optional ``"generator"`` field records the
spec an instance was generated from.

Cover: ``{"budget": a, "pieces": [{"colour": "R", "vertices": [...],
"provenance": {"kind": "RED_BALL", "centre": 0, "radius": 30},
"certified_diameter_bound": 60}]}``.
"""

from __future__ import annotations

import json
import math

from .errors import GraphError, InvalidSpec, ParseError
from .generators import GenSpec
from .graph import Colour, ColouredGraph, Mask
from .pieces import Cover, CoverPiece, Origin, Provenance

MASK_CODE = {Mask.RED: "R", Mask.BLUE: "B", Mask.BOTH: "RB"}
CODE_MASK = {v: k for k, v in MASK_CODE.items()}
COLOUR_CODE = {"R": Colour.RED, "B": Colour.BLUE}


def _fields(obj, required, optional=(), where="document"):
    if not isinstance(obj, dict):
        raise ParseError(f"{where} must be an object")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise ParseError(f"unknown field(s) in {where}: {sorted(unknown)}")
    missing = [k for k in required if k not in obj]
    if missing:
        raise ParseError(f"missing field(s) in {where}: {missing}")


def _int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{what} must be an integer")
    return value


def graph_to_dict(g: ColouredGraph, spec: GenSpec | None = None) -> dict:
    doc = {"n": g.n, "edges": [{"u": u, "v": v, "c": MASK_CODE[c]} for u, v, c in g.edges]}
    if spec is not None:
        doc["generator"] = spec.as_dict()
    return doc


def graph_from_dict(doc) -> ColouredGraph:
    _fields(doc, ("n", "edges"), ("generator",))
    n = _int(doc["n"], "n")
    if not isinstance(doc["edges"], list):
        raise ParseError("edges must be a list")
    edges = []
    for i, e in enumerate(doc["edges"]):
        _fields(e, ("u", "v", "c"), where=f"edge {i}")
        if e["c"] not in CODE_MASK:
            raise ParseError(f"edge {i}: colour must be R, B or RB, got {e['c']!r}")
        edges.append((_int(e["u"], f"edge {i} u"), _int(e["v"], f"edge {i} v"), CODE_MASK[e["c"]]))
    if "generator" in doc:
        try:
            GenSpec.from_dict(doc["generator"])
        except InvalidSpec as exc:
            raise ParseError(str(exc)) from exc
    try:
        return ColouredGraph(n, tuple(edges))
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def cover_to_dict(cover: Cover) -> dict:
    pieces = []
    for p in cover:
        prov = {"kind": p.provenance.kind.value}
        if p.provenance.centre is not None:
            prov["centre"] = p.provenance.centre
            prov["radius"] = p.provenance.radius
        bound = None if p.bound == math.inf else p.bound
        pieces.append(
            {
                "colour": p.colour.code,
                "vertices": sorted(p.vertices),
                "provenance": prov,
                "certified_diameter_bound": bound,
            }
        )
    return {"budget": cover.budget, "pieces": pieces}


def cover_from_dict(doc) -> Cover:
    _fields(doc, ("budget", "pieces"))
    budget = _int(doc["budget"], "budget")
    if not isinstance(doc["pieces"], list):
        raise ParseError("pieces must be a list")
    pieces = []
    for i, p in enumerate(doc["pieces"]):
        where = f"piece {i}"
        _fields(p, ("colour", "vertices", "provenance", "certified_diameter_bound"), where=where)
        if p["colour"] not in COLOUR_CODE:
            raise ParseError(f"{where}: colour must be R or B")
        if not isinstance(p["vertices"], list):
            raise ParseError(f"{where}: vertices must be a list")
        verts = frozenset(_int(v, f"{where} vertex") for v in p["vertices"])
        prov = p["provenance"]
        _fields(prov, ("kind",), ("centre", "radius"), where=f"{where} provenance")
        try:
            kind = Origin(prov["kind"])
        except ValueError as exc:
            raise ParseError(f"{where}: unknown provenance {prov['kind']!r}") from exc
        bound = p["certified_diameter_bound"]
        pieces.append(
            CoverPiece(
                COLOUR_CODE[p["colour"]],
                verts,
                Provenance(kind, prov.get("centre"), prov.get("radius")),
                math.inf if bound is None else _int(bound, f"{where} bound"),
            )
        )
    return Cover(budget, pieces)


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


DOT_COLOUR = {Mask.RED: "red", Mask.BLUE: "blue", Mask.BOTH: "purple"}


def to_dot(g: ColouredGraph, cover: Cover | None = None) -> str:
    """Undirected DOT; with a cover, each vertex is labelled with the first piece holding it."""
    owner = {}
    if cover is not None:
        for i, p in enumerate(cover):
            for v in p.vertices:
                owner.setdefault(v, i)
    lines = ["graph G {"]
    for v in range(g.n):
        if v in owner:
            lines.append(f'  {v} [label="{v}|p{owner[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v, c in g.edges:
        lines.append(f"  {u} -- {v} [color={DOT_COLOUR[c]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
