import itertools
from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from projext import lazy
from projext.backends import FiniteBackend, LazyBackend
from projext.plane import GeometryError, Line, Plane, Point

from conftest import lines, points


def on(plane, P, l):
    return plane.incident(plane.point(*P), l).yes


# normalize_line


def test_scaling_gives_canonical_x_axis(Q):
    assert Q.line(0, 2, 0) == Line(0, 1, 0)


def test_degenerate_triple_rejected(Q):
    with pytest.raises(GeometryError):
        Q.line(0, 0, 1)


def test_sign_normalization(Q):
    assert Q.line(-3, 2, -1) == Q.line(3, -2, 1)


@given(lines(), st.fractions().filter(lambda t: t != 0))
def test_normalization_idempotent_and_scale_free(l, t):
    Q = Plane()
    assert Q.normalize_line(*l) == l
    assert Q.normalize_line(t * l.a, t * l.b, t * l.c) == l


@given(lines(), lines())
def test_same_canonical_form_iff_same_locus(l, m):
    # two lines are the same locus iff they share two distinct points
    Q = Plane()
    pts = []
    for x in (F(0), F(1), F(2)):
        if l.b:
            pts.append(Point(x, -(l.a * x + l.c) / l.b))
        else:
            pts.append(Point(-l.c / l.a, x))
    same = all(Q.incident(P, m).yes for P in pts)
    assert same == (l == m)


# incidence


def test_incidence_examples(Q):
    x_axis = Q.line(0, 1, 0)
    assert Q.incident(Q.point(0, 0), x_axis).yes
    assert Q.incident(Q.point(0, 1), x_axis).no
    l = Q.line(3, -2, 1)
    assert 3 * 1 - 2 * 2 + 1 == 0
    assert Q.incident(Q.point(1, 2), l).yes


# line_through


def test_line_through_examples(Q):
    assert Q.line_through(Q.point(0, 0), Q.point(1, 0)) == Line(0, 1, 0)
    with pytest.raises(GeometryError):
        Q.line_through(Q.point(0, 0), Q.point(0, 0))
    l = Q.line_through(Q.point(1, 2), Q.point(3, 5))
    assert on(Q, (1, 2), l) and on(Q, (3, 5), l)
    assert l == Line(1, F(-2, 3), F(1, 3))


@given(points(), points())
def test_line_through_symmetric_and_incident(P, R):
    assume(P != R)
    Q = Plane()
    P, R = Q.point(*P), Q.point(*R)
    l = Q.line_through(P, R)
    assert l == Q.line_through(R, P)
    assert Q.incident(P, l).yes and Q.incident(R, l).yes


# parallel


def test_parallel_examples(Q, R):
    assert Q.parallel(Q.line(0, 1, 0), Q.line(0, 1, -1)).yes
    assert Q.parallel(Q.line(0, 1, 0), Q.line(1, 0, 0)).no
    eps = lazy.true_zero()
    m = Line(lazy.neg(eps), lazy.ONE, lazy.ZERO)  # y = eps x
    for k in (1, 8, 64, 256):
        assert R.parallel(R.l0, m, k).unknown


# intersection


def test_intersection_examples(Q):
    assert Q.intersection(Q.line(0, 1, 0), Q.line(1, 0, 0)) == Point(0, 0)
    l, m = Q.line(1, -1, 0), Q.line(1, 1, -1)
    # Cramer's rule on x - y = 0, x + y = 1
    det = 1 * 1 - (-1) * 1
    x, y = F(0 * 1 - (-1) * 1, det), F(1 * 1 - 1 * 0, det)
    assert Q.intersection(l, m) == Point(x, y) == Point(F(1, 2), F(1, 2))
    with pytest.raises(GeometryError):
        Q.intersection(Q.line(0, 1, 0), Q.line(0, 1, -1))


@given(lines(), lines())
def test_intersection_incident_to_both(l, m):
    Q = Plane()
    assume(Q.parallel(l, m).no)
    X = Q.intersection(l, m)
    assert Q.incident(X, l).yes and Q.incident(X, m).yes


# parallel_through


def test_parallel_through_examples(Q):
    x_axis = Q.line(0, 1, 0)
    assert Q.parallel_through(Q.point(0, 1), x_axis) == Q.line(0, 1, -1)
    assert Q.parallel_through(Q.point(5, 0), x_axis) == x_axis
    l = Q.line(1, -1, 0)
    m = Q.parallel_through(Q.point(2, 3), l)
    assert m == Q.line(1, -1, 1)
    assert Q.parallel(l, m).yes and on(Q, (2, 3), m)


# finite planes


def _brute_force_plane(q):
    # lines as point sets, computed from all nonzero (a, b) directions
    from projext.gf import field
    Fq = field(q)
    pts = [(x, y) for x in range(q) for y in range(q)]
    sets = set()
    for a, b, c in itertools.product(range(q), repeat=3):
        if a or b:
            sets.add(frozenset(P for P in pts if Fq.add(Fq.add(Fq.mul(a, P[0]), Fq.mul(b, P[1])), c) == 0))
    return pts, sets


@pytest.mark.parametrize("q,npoints,nlines", [(2, 4, 6), (3, 9, 12), (4, 16, 20), (5, 25, 30)])
def test_enumerate_counts(q, npoints, nlines):
    plane = Plane(FiniteBackend(q))
    pts, lns = plane.enumerate()
    bpts, bsets = _brute_force_plane(q)
    assert len(pts) == len(bpts) == npoints
    assert len(lns) == len(bsets) == nlines
    loci = {frozenset((P.x, P.y) for P in pts if plane.incident(P, l).yes) for l in lns}
    assert loci == bsets
    assert all(len(s) == q for s in loci)


def test_finite_affine_axioms(finite):
    pts, lns = finite.enumerate()
    for P, R in itertools.combinations(pts, 2):
        assert sum(finite.incident(P, l).yes and finite.incident(R, l).yes for l in lns) == 1
    for l, m in itertools.combinations(lns, 2):
        common = sum(finite.incident(P, l).yes and finite.incident(P, m).yes for P in pts)
        assert common == (0 if finite.parallel(l, m).yes else 1)


def test_enumerate_needs_finite_backend(Q):
    with pytest.raises(GeometryError):
        Q.enumerate()


def test_decidable_backends_never_unknown(finite):
    pts, lns = finite.enumerate()
    for P, l in itertools.product(pts[:5], lns):
        assert finite.incident(P, l).determined


# lazy monotonicity


scalars = st.one_of(
    st.integers(-3, 3).map(lazy.const),
    st.just(lazy.true_zero()),
    st.integers(-70, -1).map(lazy.pow2),
    st.integers(-70, -1).map(lambda e: lazy.add(lazy.ONE, lazy.pow2(e))),
)


@given(st.tuples(scalars, scalars, scalars), st.tuples(scalars, scalars, scalars), st.integers(0, 60))
def test_lazy_predicates_monotone(t, u, k):
    R = Plane(LazyBackend())
    assume(not (t[0].exact == 0 and t[1].exact == 0) and not (u[0].exact == 0 and u[1].exact == 0))
    l, m = R.normalize_line(*t), R.normalize_line(*u)
    P = Point(t[2], u[2])
    for pred in (lambda j: R.parallel(l, m, j), lambda j: R.lines_apart(l, m, j),
                 lambda j: R.incident(P, l, j), lambda j: R.concurrent(l, m, R.l0, j)):
        d = pred(k)
        if d.determined:
            assert all(pred(j) == d for j in (k + 1, k + 20, k + 80))
