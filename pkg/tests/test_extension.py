import itertools

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from projext import extension as ex
from projext import lazy
from projext import pencil as pc
from projext import vline as vl
from projext.backends import LazyBackend
from projext.plane import GeometryError, Plane, Point

from conftest import lines, points, true_value


def E(Q, x, y):
    return ex.proper_epoint(Q, Q.point(x, y))


def L(Q, a, b, c):
    return ex.proper_eline(Q, Q.line(a, b, c))


def test_constructors(Q):
    y0 = L(Q, 0, 1, 0)
    assert ex.incident_e(Q, E(Q, 0, 0), y0).yes
    t = ex.tip(Q, y0)
    assert t == ex.EPoint(pc.ParallelPencil(Q.line(0, 1, 0)))
    assert ex.incident_e(Q, t, ex.line_at_infinity()).yes
    with pytest.raises(GeometryError):
        ex.tip(Q, ex.line_at_infinity())


def test_incidence_examples(Q):
    y0, iota = L(Q, 0, 1, 0), ex.line_at_infinity()
    assert ex.incident_e(Q, E(Q, 0, 0), y0).yes
    assert ex.incident_e(Q, E(Q, 0, 1), y0).no
    assert ex.incident_e(Q, E(Q, 0, 0), iota).no


def test_outside_examples(Q):
    y0, iota = L(Q, 0, 1, 0), ex.line_at_infinity()
    assert ex.outside_e(Q, E(Q, 0, 1), y0).yes
    assert ex.outside_e(Q, ex.tip(Q, L(Q, 1, 0, 0)), y0).yes
    assert ex.outside_e(Q, ex.tip(Q, y0), iota).no


def test_distinctness_examples(Q):
    assert ex.epoint_distinct(Q, E(Q, 0, 0), E(Q, 1, 0)).yes
    assert ex.epoint_distinct(Q, ex.tip(Q, L(Q, 0, 1, 0)), ex.tip(Q, L(Q, 0, 1, -5))).no
    assert ex.eline_distinct(Q, L(Q, 0, 1, 0), ex.line_at_infinity()).yes


def test_join_examples(Q):
    lam = ex.join(Q, E(Q, 0, 0), E(Q, 1, 1))
    assert lam == L(Q, 1, -1, 0)
    assert ex.join(Q, ex.tip(Q, L(Q, 0, 1, 0)), ex.tip(Q, L(Q, 1, 0, 0))) == ex.line_at_infinity()
    assert ex.join(Q, E(Q, 0, 1), ex.tip(Q, L(Q, 0, 1, 0))) == L(Q, 0, 1, -1)
    with pytest.raises(ex.JoinUndefined):
        ex.join(Q, E(Q, 2, 2), E(Q, 2, 2))


def test_meet_examples(Q):
    y0, x0, y1, iota = L(Q, 0, 1, 0), L(Q, 1, 0, 0), L(Q, 0, 1, -1), ex.line_at_infinity()
    assert ex.epoint_equal(Q, ex.meet(Q, y0, x0), E(Q, 0, 0)).yes
    assert ex.meet(Q, y0, x0) == E(Q, 0, 0)
    assert ex.meet(Q, y0, y1) == ex.tip(Q, y0)
    assert ex.meet(Q, iota, iota) == ex.EPoint(pc.ParallelPencil(Q.l0))


def test_meet_of_equal_lines_is_the_tip(Q):
    lam = L(Q, 2, 3, 5)
    assert ex.meet(Q, lam, lam) == ex.tip(Q, lam)


def test_stem_examples(Q):
    assert ex.stem_contains(Q, Point(0, 0), L(Q, 0, 1, 0)).yes
    assert ex.stem_contains(Q, Point(0, 0), ex.line_at_infinity()).no


@given(points(), lines())
def test_stem_is_incidence(P, l):
    Q = Plane()
    P = Q.point(*P)
    assert ex.stem_contains(Q, P, ex.proper_eline(Q, l)) == Q.incident(P, l)


def test_three_points_examples(Q):
    y0 = L(Q, 0, 1, 0)
    a, b, t = ex.three_points_on(Q, y0)
    assert (a, b) == (E(Q, 0, 0), E(Q, 1, 0)) and t == ex.tip(Q, y0)
    trio = ex.three_points_on(Q, ex.line_at_infinity())
    assert trio == tuple(ex.tip(Q, L(Q, *c)) for c in ((0, 1, 0), (1, 0, 0), (1, -1, 0)))
    for lam in (y0, ex.line_at_infinity(), L(Q, 1, 0, -3)):
        trio = ex.three_points_on(Q, lam)
        assert all(ex.incident_e(Q, e, lam).yes for e in trio)
        assert all(ex.epoint_distinct(Q, s, t).yes for s, t in itertools.combinations(trio, 2))


def test_embedding_examples(Q):
    assert ex.incident_e(Q, ex.embed_point(Q, Point(0, 0)), ex.embed_line(Q, Q.l0)).yes
    assert ex.epoint_distinct(Q, ex.embed_point(Q, Point(0, 1)), ex.embed_point(Q, Point(0, 1))).no
    assert ex.outside_e(Q, ex.embed_point(Q, Point(0, 1)), ex.embed_line(Q, Q.l0)).yes


def test_join_meet_round_trip_on_axes(Q):
    diag = ex.join(Q, E(Q, 0, 0), E(Q, 1, 1))
    assert diag == L(Q, 1, -1, 0)
    x_axis = ex.join(Q, E(Q, 0, 0), E(Q, 1, 0))
    assert ex.meet(Q, diag, x_axis) == E(Q, 0, 0)
    back = ex.join(Q, ex.meet(Q, diag, x_axis), E(Q, 2, 2))
    assert ex.eline_equal(Q, back, diag).yes


def test_infinity_line_law(Q):
    a, b = ex.tip(Q, L(Q, 0, 1, 0)), ex.tip(Q, L(Q, 1, 1, 0))
    assert vl.resolve(Q, vl.core(Q, a.rep, b.rep)) == vl.EMPTY_RESULT
    assert ex.join(Q, a, b) == ex.line_at_infinity()


@given(points(), points(), lines())
def test_join_incident_and_unique(P, R, l):
    Q = Plane()
    a, b = ex.proper_epoint(Q, Q.point(*P)), ex.tip(Q, ex.proper_eline(Q, l))
    lam = ex.join(Q, a, b)
    assert ex.incident_e(Q, a, lam).yes and ex.incident_e(Q, b, lam).yes
    c = ex.proper_epoint(Q, Q.point(*R))
    if ex.epoint_distinct(Q, a, c).yes:
        mu = ex.join(Q, a, c)
        if ex.incident_e(Q, b, mu).yes:
            assert ex.eline_equal(Q, mu, lam).yes


# lazy soundness

scalars = st.one_of(
    st.integers(-2, 2).map(lazy.const),
    st.just(lazy.true_zero()),
    st.integers(-40, -1).map(lazy.pow2),
    st.integers(-40, -1).map(lambda e: lazy.sub(lazy.ONE, lazy.pow2(e))),
)
triples = st.tuples(scalars, scalars, scalars)


def _rational(t):
    return tuple(true_value(v) for v in t)


@given(triples, triples, triples, st.integers(0, 48))
def test_lazy_incidence_is_sound(t, u, w, k):
    # a determined lazy answer agrees with the exact instantiation
    for x in (t, u, w):
        assume(_rational(x)[:2] != (0, 0))
        assume(not (x[0].exact == 0 and x[1].exact == 0))
    R, Q = Plane(LazyBackend()), Plane()
    lr = [ex.proper_eline(R, R.normalize_line(*x, k)) for x in (t, u, w)]
    lq = [ex.proper_eline(Q, Q.line(*_rational(x))) for x in (t, u, w)]
    e_r, e_q = ex.meet(R, lr[0], lr[1], k), ex.meet(Q, lq[0], lq[1])
    d = ex.incident_e(R, e_r, lr[2], k)
    if d.determined:
        assert d == ex.incident_e(Q, e_q, lq[2])
    assert ex.incident_e(R, e_r, lr[0], k).yes and ex.incident_e(R, e_r, lr[1], k).yes
    o = ex.outside_e(R, e_r, lr[2], k)
    if o.determined:
        assert o == ex.outside_e(Q, e_q, lq[2])


def test_true_zero_meet_is_incident_but_unclassified(R):
    c = lazy.true_zero()
    lam, mu = ex.proper_eline(R, R.l0), ex.proper_eline(R, R.line(c, 1, -1))
    for k in (8, 64, 200):
        g = ex.meet(R, lam, mu, k)
        assert pc.classify(R, g.rep, k) == pc.Undetermined(k)
        assert ex.incident_e(R, g, lam, k).yes and ex.incident_e(R, g, mu, k).yes
        assert ex.epoint_distinct(R, g, ex.tip(R, lam), k).unknown
        assert ex.epoint_distinct(R, g, ex.tip(R, mu), k).unknown


def test_source_does_not_affect_equality(Q):
    a = ex.epoint(Q, pc.TwoLine(Q.line(0, 1, 0), Q.line(1, 0, 0)))
    assert a == E(Q, 0, 0) and hash(a) == hash(E(Q, 0, 0))
