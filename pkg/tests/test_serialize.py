import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from projext import extension as ex
from projext import lazy
from projext import pencil as pc
from projext import serialize as ser
from projext import vline as vl
from projext.backends import FiniteBackend, LazyBackend
from projext.plane import Plane, Point

from conftest import lines, points

Q = Plane()


@st.composite
def pencils(draw, depth=1):
    kind = draw(st.integers(0, 3 if depth else 2))
    if kind == 0:
        return pc.PointPencil(Q.point(*draw(points())))
    if kind == 1:
        return pc.ParallelPencil(draw(lines()))
    if kind == 2:
        return pc.TwoLine(draw(lines()), draw(lines()))
    return pc.TwoVLine(draw(vlines(depth - 1)), draw(vlines(depth - 1)))


@st.composite
def vlines(draw, depth=0):
    kind = draw(st.integers(0, 2))
    if kind == 0:
        return vl.Resolved(draw(lines()))
    if kind == 1:
        return vl.EMPTY
    return vl.Pending(draw(pencils(depth)), draw(pencils(depth)), draw(st.booleans()))


def _through_text(doc):
    return json.loads(json.dumps(doc, sort_keys=True))


@given(pencils())
def test_pencil_round_trip(alpha):
    assert ser.pencil_from_json(Q, _through_text(ser.pencil_to_json(Q, alpha))) == alpha


@given(vlines(1))
def test_vline_round_trip(p):
    assert ser.vline_from_json(Q, _through_text(ser.vline_to_json(Q, p))) == p


@given(pencils(), vlines(1))
def test_extension_round_trip(alpha, p):
    e, lam = ex.EPoint(alpha), ex.ELine(p)
    assert ser.epoint_from_json(Q, ser.epoint_to_json(Q, e)) == e
    assert ser.eline_from_json(Q, ser.eline_to_json(Q, lam)) == lam


def test_scalar_forms():
    assert ser.line_to_json(Q, Q.line(-3, 2, -1)) == ["1/1", "-2/3", "1/3"]
    G = Plane(FiniteBackend(5))
    assert ser.point_to_json(G, Point(3, 4)) == [3, 4]
    R = Plane(LazyBackend())
    doc = ser.line_to_json(R, R.line(lazy.pow2(-100), 1, -1))
    assert doc == ["pow2(-100)", "1/1", "-1/1"]
    assert ser.line_from_json(R, doc) == R.line(lazy.pow2(-100), 1, -1)


def test_parsing_canonicalizes_lines():
    assert ser.line_from_json(Q, ["0", "2", "0"]) == Q.line(0, 1, 0)


@pytest.mark.parametrize("doc", [
    {"kind": "cone"}, {"at": [0, 0]}, [1, 2], {"kind": "point", "at": [0]},
    {"kind": "two_vline", "p": {"state": "maybe"}, "q": {"state": "empty"}},
])
def test_schema_errors(doc):
    with pytest.raises(ser.SchemaError):
        ser.pencil_from_json(Q, doc)


def test_bad_scalars():
    with pytest.raises(ValueError):
        ser.point_from_json(Q, ["x", "1"])
    with pytest.raises(ValueError):
        ser.point_from_json(Plane(FiniteBackend(3)), [3, 0])


def test_classification_json():
    assert ser.classification_to_json(Q, pc.Undetermined(9)) == {"classification": "undetermined", "budget": 9}
    assert ser.classification_to_json(Q, pc.IsPoint(Point(1, 0)))["at"] == ["1/1", "0/1"]
