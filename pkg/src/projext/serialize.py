"""JSON forms of geometric objects.

Scalars use the backend's exact string form; lines are canonical triples,
points coordinate pairs; pencils and v-lines are tagged objects.
"""

from __future__ import annotations

from . import extension as ex
from . import pencil as pc
from . import vline as vl
from .plane import Line, Plane, Point


class SchemaError(ValueError):
    pass


def point_to_json(plane: Plane, Q: Point):
    return [plane.backend.to_json(Q.x), plane.backend.to_json(Q.y)]


def line_to_json(plane: Plane, l: Line):
    return [plane.backend.to_json(v) for v in l]


def point_from_json(plane: Plane, doc) -> Point:
    if not isinstance(doc, list) or len(doc) != 2:
        raise SchemaError(f"point must be a pair, got {doc!r}")
    B = plane.backend
    return Point(B.from_json(doc[0]), B.from_json(doc[1]))


def line_from_json(plane: Plane, doc) -> Line:
    if not isinstance(doc, list) or len(doc) != 3:
        raise SchemaError(f"line must be a triple, got {doc!r}")
    B = plane.backend
    return plane.normalize_line(*(B.from_json(v) for v in doc))


def pencil_to_json(plane: Plane, alpha):
    if isinstance(alpha, pc.PointPencil):
        return {"kind": "point", "at": point_to_json(plane, alpha.at)}
    if isinstance(alpha, pc.ParallelPencil):
        return {"kind": "parallel", "dir": line_to_json(plane, alpha.dir)}
    if isinstance(alpha, pc.TwoLine):
        return {"kind": "two_line", "l": line_to_json(plane, alpha.l), "m": line_to_json(plane, alpha.m)}
    if isinstance(alpha, pc.TwoVLine):
        return {"kind": "two_vline", "p": vline_to_json(plane, alpha.p), "q": vline_to_json(plane, alpha.q)}
    raise TypeError(f"not a pencil: {alpha!r}")


def pencil_from_json(plane: Plane, doc):
    kind = _field(doc, "kind")
    if kind == "point":
        return pc.PointPencil(point_from_json(plane, _field(doc, "at")))
    if kind == "parallel":
        return pc.ParallelPencil(line_from_json(plane, _field(doc, "dir")))
    if kind == "two_line":
        return pc.TwoLine(line_from_json(plane, _field(doc, "l")), line_from_json(plane, _field(doc, "m")))
    if kind == "two_vline":
        return pc.TwoVLine(vline_from_json(plane, _field(doc, "p")), vline_from_json(plane, _field(doc, "q")))
    raise SchemaError(f"unknown pencil kind {kind!r}")


def vline_to_json(plane: Plane, p):
    if isinstance(p, vl.Resolved):
        return {"state": "line", "line": line_to_json(plane, p.line)}
    if isinstance(p, vl.Empty):
        return {"state": "empty"}
    if isinstance(p, vl.Pending):
        doc = {"state": "pending", "alpha": pencil_to_json(plane, p.alpha), "beta": pencil_to_json(plane, p.beta)}
        if p.prime:
            doc["prime"] = True
        return doc
    raise TypeError(f"not a v-line: {p!r}")


def vline_from_json(plane: Plane, doc):
    state = _field(doc, "state")
    if state == "line":
        return vl.Resolved(line_from_json(plane, _field(doc, "line")))
    if state == "empty":
        return vl.EMPTY
    if state == "pending":
        return vl.Pending(
            pencil_from_json(plane, _field(doc, "alpha")),
            pencil_from_json(plane, _field(doc, "beta")),
            bool(doc.get("prime", False)),
        )
    raise SchemaError(f"unknown v-line state {state!r}")


def classification_to_json(plane: Plane, c):
    if isinstance(c, pc.IsPoint):
        return {"classification": "point", "at": point_to_json(plane, c.at)}
    if isinstance(c, pc.IsParallel):
        return {"classification": "parallel", "dir": line_to_json(plane, c.dir)}
    return {"classification": "undetermined", "budget": c.budget}


def epoint_to_json(plane: Plane, e: ex.EPoint):
    return pencil_to_json(plane, e.rep)


def epoint_from_json(plane: Plane, doc) -> ex.EPoint:
    return ex.EPoint(pencil_from_json(plane, doc))


def eline_to_json(plane: Plane, lam: ex.ELine):
    return vline_to_json(plane, lam.root)


def eline_from_json(plane: Plane, doc) -> ex.ELine:
    return ex.ELine(vline_from_json(plane, doc))


def _field(doc, name):
    if not isinstance(doc, dict):
        raise SchemaError(f"expected an object with field {name!r}, got {doc!r}")
    if name not in doc:
        raise SchemaError(f"missing field {name!r}")
    return doc[name]
