"""JSON diagram files and report rendering.

A diagram file looks like::

    {
      "components": [
        {"id": "U", "topological": [1, 3], "tb": -1, "unknot": true},
        {"id": "K", "contact": [-3, 2], "tb": -1}
      ],
      "linking": [[0, 1], [1, 0]],
      "aux": {"tb": -1, "linking": [1, 0]}
    }

Each component needs "topological", or "contact" together with "tb"; when
both are given they must satisfy topological = contact + tb.  Rationals are
[num, den] pairs, plain integers, or "num/den" strings.  [1, 0] is the
meridian (coefficient infinity).
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Optional

import jsonschema

from .legendrian import contact_to_topological
from .linalg import IntMatrix
from .model import (AuxKnot, DiagramError, LegendrianData, LinkComponent, Slope, SurgeryDiagram,
                    normalize_slope, validate_diagram)

_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*-?\d+\s*(/\s*-?\d+\s*)?$"},
        {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
    ]
}

DIAGRAM_SCHEMA = {
    "type": "object",
    "properties": {
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": {"type": "string"},
                    "topological": _RATIONAL,
                    "contact": _RATIONAL,
                    "tb": {"type": "integer"},
                    "rot": {"type": ["integer", "null"]},
                    "unknot": {"type": "boolean"},
                },
                "anyOf": [{"required": ["topological"]}, {"required": ["contact", "tb"]}],
            },
        },
        "linking": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "aux": {
            "type": "object",
            "properties": {
                "tb": {"type": "integer"},
                "rot": {"type": ["integer", "null"]},
                "linking": {"type": "array", "items": {"type": "integer"}},
            },
            "required": ["tb", "linking"],
        },
    },
    "required": ["components"],
}

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "argv": {"type": "array", "items": {"type": "string"}},
        "input_digest": {"type": "string"},
        "results": {"type": "object"},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["command", "argv", "input_digest", "results", "warnings"],
}


def parse_pair(value) -> tuple[int, int]:
    """Read a rational as an unreduced (num, den) pair; den may be 0."""
    if isinstance(value, bool):
        raise DiagramError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return value, 1
    if isinstance(value, str):
        num, _, den = value.partition("/")
        try:
            return int(num), int(den) if den.strip() else 1
        except ValueError:
            raise DiagramError(f"not a rational: {value!r}") from None
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(isinstance(x, int) for x in value):
        return int(value[0]), int(value[1])
    raise DiagramError(f"not a rational: {value!r}")


def parse_rational(value) -> Fraction:
    num, den = parse_pair(value)
    if den == 0:
        raise DiagramError(f"{value!r} is infinite, a finite rational is required here")
    return Fraction(num, den)


def fmt(x) -> str:
    """Exact string form of a rational, never a decimal."""
    return str(Fraction(x))


def _component(obj: dict, idx: int) -> LinkComponent:
    cid = obj.get("id", f"L{idx + 1}")
    tb = obj.get("tb")
    leg = None if tb is None else LegendrianData(tb, obj.get("rot"))
    top = None
    if "topological" in obj:
        top = normalize_slope(*parse_pair(obj["topological"]))
    if "contact" in obj:
        if tb is None:
            raise DiagramError(f"component {cid}: a contact coefficient needs tb")
        cp, cq = parse_pair(obj["contact"])
        if cq == 0:
            derived = normalize_slope(cp, cq)
        else:
            derived = Slope.from_coefficient(contact_to_topological(Fraction(cp, cq), tb))
        if top is not None and top != derived:
            raise DiagramError(f"component {cid}: contact coefficient {cp}/{cq} with tb {tb} gives "
                               f"topological {derived}, but topological {top} was given")
        top = derived
    if top is None:
        raise DiagramError(f"component {cid}: needs 'topological' or 'contact' + 'tb'")
    return LinkComponent(cid, top, leg, bool(obj.get("unknot", False)))


def load_diagram(obj) -> tuple[SurgeryDiagram, Optional[AuxKnot]]:
    """Build and validate a diagram (and optional aux knot) from parsed JSON."""
    try:
        jsonschema.validate(obj, DIAGRAM_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise DiagramError(f"schema violation: {exc.message}") from None
    comps = tuple(_component(c, i) for i, c in enumerate(obj["components"]))
    n = len(comps)
    rows = obj.get("linking")
    if rows is None:
        rows = [[0] * n for _ in range(n)]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DiagramError(f"linking matrix must be {n}x{n}")
    d = SurgeryDiagram(comps, IntMatrix.from_rows(rows, n))
    aux = None
    if "aux" in obj:
        a = obj["aux"]
        aux = AuxKnot(a["tb"], tuple(a["linking"]), a.get("rot"))
    return validate_diagram(d, aux), aux


def read_diagram(path) -> tuple[SurgeryDiagram, Optional[AuxKnot]]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"{path}: invalid JSON ({exc})") from None
    return load_diagram(obj)


def dump_diagram(d: SurgeryDiagram, aux: Optional[AuxKnot] = None) -> dict:
    comps = []
    for c in d.components:
        item = {"id": c.id, "topological": [c.slope.p, c.slope.q]}
        if c.legendrian is not None:
            item["tb"] = c.legendrian.tb
            if c.legendrian.rot is not None:
                item["rot"] = c.legendrian.rot
            cc = c.contact_coefficient()
            if cc is not None:
                item["contact"] = [cc.numerator, cc.denominator]
        if c.unknot:
            item["unknot"] = True
        comps.append(item)
    out = {"components": comps, "linking": d.linking.tolist()}
    if aux is not None:
        out["aux"] = {"tb": aux.tb_old, "linking": list(aux.linking)}
        if aux.rot_old is not None:
            out["aux"]["rot"] = aux.rot_old
    return out
