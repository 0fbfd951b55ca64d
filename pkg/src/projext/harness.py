"""Executable checks of the extension's theorems.

Three kinds of suite:

* exhaustive checks over AG(2, q), cross-checked against homogeneous
  coordinates for PG(2, q);
* seeded random suites over exact rationals;
* budget traces over lazy reals that exhibit questions no finite budget
  settles.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import extension as ex
from . import lazy
from . import pencil as pc
from . import serialize as ser
from . import vline as vl
from .backends import FiniteBackend, LazyBackend, RationalBackend
from .plane import Line, Plane, Point

MAX_RECORDED_FAILURES = 50


@dataclass
class Report:
    suite: str
    seed: int = None
    q: int = None
    cases: int = 0
    failures: list = field(default_factory=list)
    properties: dict = field(default_factory=dict)
    budget_traces: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(p["failures"] == 0 for p in self.properties.values())

    def check(self, prop: str, passed: bool, inputs=None):
        entry = self.properties.setdefault(prop, {"cases": 0, "failures": 0})
        entry["cases"] += 1
        self.cases += 1
        if not passed:
            entry["failures"] += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append({"property": prop, "inputs": inputs})

    def failed(self, prop: str) -> int:
        return self.properties.get(prop, {}).get("failures", 0)

    def to_json(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "q": self.q,
            "ok": self.ok,
            "cases": self.cases,
            "counts": dict(sorted(self.counts.items())),
            "properties": {k: self.properties[k] for k in sorted(self.properties)},
            "failures": self.failures,
            "budget_traces": self.budget_traces,
        }


def _dedup(items, same):
    reps = []
    for it in items:
        if not any(same(it, r) for r in reps):
            reps.append(it)
    return reps


def _dump(plane, *objs):
    out = []
    for o in objs:
        if isinstance(o, ex.EPoint):
            out.append({"epoint": ser.epoint_to_json(plane, o)})
        elif isinstance(o, ex.ELine):
            out.append({"eline": ser.eline_to_json(plane, o)})
        elif isinstance(o, Line):
            out.append({"line": ser.line_to_json(plane, o)})
        elif isinstance(o, Point):
            out.append({"point": ser.point_to_json(plane, o)})
        elif isinstance(o, (pc.PointPencil, pc.ParallelPencil, pc.TwoLine, pc.TwoVLine)):
            out.append({"pencil": ser.pencil_to_json(plane, o)})
        else:
            out.append(repr(o))
    return out


# finite planes


def finite_extension(q: int):
    """The plane over GF(q) with its e-points and e-lines, built from pencils.

    E-points are the classes of every point pencil, parallel pencil and
    two-line pencil; e-lines the classes of every proper e-line, the line
    at infinity, and every join.
    """
    plane = Plane(FiniteBackend(q))
    points, lines = plane.enumerate()
    candidates = [pc.PointPencil(P) for P in points]
    candidates += [pc.ParallelPencil(l) for l in lines]
    candidates += [pc.TwoLine(l, m) for l in lines for m in lines]
    epoints = _dedup(
        (ex.epoint(plane, a) for a in candidates),
        lambda a, b: a == b or ex.epoint_equal(plane, a, b).yes,
    )
    roots = [ex.proper_eline(plane, l) for l in lines] + [ex.line_at_infinity()]
    roots += [ex.join(plane, a, b) for a, b in itertools.combinations(epoints, 2)]
    elines = _dedup(roots, lambda a, b: a == b or ex.eline_equal(plane, a, b).yes)
    return plane, points, lines, epoints, elines


def check_finite_projective(q: int) -> Report:
    if q not in (2, 3, 4, 5):
        raise ValueError(f"finite harness supports q in (2, 3, 4, 5), got {q}")
    rep = Report("finite_projective", q=q)
    plane, points, lines, epoints, elines = finite_extension(q)
    n = q * q + q + 1

    rep.counts.update(points=len(points), lines=len(lines), epoints=len(epoints), elines=len(elines))
    rep.check("affine_counts", len(points) == q * q and len(lines) == q * q + q, [len(points), len(lines)])
    for l in lines:
        on = [P for P in points if plane.incident(P, l).yes]
        rep.check("affine_line_size", len(on) == q, _dump(plane, l))
    for P, R in itertools.combinations(points, 2):
        through = [l for l in lines if plane.incident(P, l).yes and plane.incident(R, l).yes]
        rep.check("affine_unique_line", len(through) == 1, _dump(plane, P, R))
    for l, m in itertools.combinations(lines, 2):
        common = [P for P in points if plane.incident(P, l).yes and plane.incident(P, m).yes]
        ok = len(common) == 0 if plane.parallel(l, m).yes else len(common) == 1
        rep.check("affine_two_lines", ok, _dump(plane, l, m))

    rep.check("epoint_count", len(epoints) == n, [len(epoints), n])
    rep.check("eline_count", len(elines) == n, [len(elines), n])
    inc = {(i, j): ex.incident_e(plane, e, lam).yes for i, e in enumerate(epoints) for j, lam in enumerate(elines)}
    for j, lam in enumerate(elines):
        k = sum(inc[i, j] for i in range(len(epoints)))
        rep.check("points_per_eline", k == q + 1, _dump(plane, lam) + [k])
    for i, e in enumerate(epoints):
        k = sum(inc[i, j] for j in range(len(elines)))
        rep.check("elines_per_epoint", k == q + 1, _dump(plane, e) + [k])

    for (i, a), (j, b) in itertools.combinations(enumerate(epoints), 2):
        rep.check("epoints_distinct", ex.epoint_distinct(plane, a, b).yes, _dump(plane, a, b))
        lam = ex.join(plane, a, b)
        rep.check("join_incident", ex.incident_e(plane, a, lam).yes and ex.incident_e(plane, b, lam).yes,
                  _dump(plane, a, b))
        through = [t for t in range(len(elines)) if inc[i, t] and inc[j, t]]
        unique = len(through) == 1 and ex.eline_equal(plane, elines[through[0]], lam).yes
        rep.check("join_unique", unique, _dump(plane, a, b))
    for (i, lam), (j, mu) in itertools.product(enumerate(elines), repeat=2):
        e = ex.meet(plane, lam, mu)
        rep.check("meet_incident", ex.incident_e(plane, e, lam).yes and ex.incident_e(plane, e, mu).yes,
                  _dump(plane, lam, mu))
        if i != j:
            common = [t for t in range(len(epoints)) if inc[t, i] and inc[t, j]]
            unique = len(common) == 1 and ex.epoint_equal(plane, epoints[common[0]], e).yes
            rep.check("meet_unique", unique, _dump(plane, lam, mu))
    for e, lam in itertools.product(epoints, elines):
        out, on = ex.outside_e(plane, e, lam), ex.incident_e(plane, e, lam)
        rep.check("tite_extension", not out.no or on.yes, _dump(plane, e, lam))
        rep.check("outside_complements_incident", out.yes != on.yes, _dump(plane, e, lam))
    for lam in elines:
        trio = ex.three_points_on(plane, lam)
        ok = all(ex.incident_e(plane, t, lam).yes for t in trio) and all(
            ex.epoint_distinct(plane, s, t).yes for s, t in itertools.combinations(trio, 2))
        rep.check("three_points", ok, _dump(plane, lam))
    _check_embedding_exhaustive(rep, plane, points, lines)
    return rep


def _check_embedding_exhaustive(rep, plane, points, lines):
    emb = {P: ex.embed_point(plane, P) for P in points}
    embl = {l: ex.embed_line(plane, l) for l in lines}
    for P, R in itertools.product(points, repeat=2):
        rep.check("embed_equality", (P == R) == ex.epoint_equal(plane, emb[P], emb[R]).yes, _dump(plane, P, R))
        rep.check("embed_apartness", plane.points_apart(P, R).yes == ex.epoint_distinct(plane, emb[P], emb[R]).yes,
                  _dump(plane, P, R))
    for P, l in itertools.product(points, lines):
        rep.check("embed_incidence", plane.incident(P, l).yes == ex.incident_e(plane, emb[P], embl[l]).yes,
                  _dump(plane, P, l))
        rep.check("embed_outside", plane.outside(P, l).yes == ex.outside_e(plane, emb[P], embl[l]).yes,
                  _dump(plane, P, l))
    for l, m in itertools.product(lines, repeat=2):
        rep.check("embed_line_equality", (l == m) == ex.eline_equal(plane, embl[l], embl[m]).yes, _dump(plane, l, m))


# homogeneous-coordinate oracle


def pg_points(field):
    """Nonzero triples over ``field`` up to scalars, first nonzero entry 1."""
    els = list(field.elements())
    out = []
    for t in itertools.product(els, repeat=3):
        if any(t):
            lead = next(v for v in t if v)
            if lead == 1:
                out.append(t)
    return out


def _pg_normalize(field, t):
    lead = next(v for v in t if v)
    return tuple(field.div(v, lead) for v in t)


def _pg_dot(field, u, v):
    s = 0
    for a, b in zip(u, v):
        s = field.add(s, field.mul(a, b))
    return s


def compare_with_pg_oracle(q: int, incidence=None) -> Report:
    """Match the pencil-built extension against PG(2, q) in coordinates.

    Proper points go to ``(x:y:1)``, the tip of a direction ``ax+by+c=0``
    to ``(-b:a:0)``, proper lines to ``[a:b:c]`` and the line at infinity
    to ``[0:0:1]``.  ``incidence`` replaces :func:`extension.incident_e`
    (used by the harness self-test).
    """
    incidence = incidence or ex.incident_e
    rep = Report("pg_oracle", q=q)
    plane, _, _, epoints, elines = finite_extension(q)
    F = plane.backend.field
    one, zero = 1, 0

    def point_image(e):
        c = pc.classify(plane, e.rep)
        if isinstance(c, pc.IsPoint):
            return _pg_normalize(F, (c.at.x, c.at.y, one))
        return _pg_normalize(F, (F.neg(c.dir.b), c.dir.a, zero))

    def line_image(lam):
        r = vl.resolve(plane, lam.root)
        if isinstance(r, Line):
            return _pg_normalize(F, (r.a, r.b, r.c))
        return (zero, zero, one)

    opts = pg_points(F)
    pimg = [point_image(e) for e in epoints]
    limg = [line_image(lam) for lam in elines]
    rep.counts.update(pg_points=len(opts), epoints=len(epoints), elines=len(elines))
    rep.check("bijection_points", sorted(pimg) == sorted(opts), [len(set(pimg)), len(opts)])
    rep.check("bijection_lines", sorted(limg) == sorted(opts), [len(set(limg)), len(opts)])
    matched = 0
    for (e, pi), (lam, li) in itertools.product(zip(epoints, pimg), zip(elines, limg)):
        ours = incidence(plane, e, lam).yes
        theirs = _pg_dot(F, pi, li) == 0
        matched += ours and theirs
        rep.check("incidence", ours == theirs, _dump(plane, e, lam) + [list(pi), list(li)])
    rep.counts["incidences"] = matched
    return rep


# random rational configurations


class Sampler:
    """Seeded generator of rational configurations.

    Most coordinates have height <= 1000; about a third are small integers
    so that coincidences and parallels turn up often.
    """

    def __init__(self, plane: Plane, seed: int):
        self.plane = plane
        self.rng = random.Random(seed)

    def scalar(self):
        r = self.rng
        if r.random() < 0.35:
            return Fraction(r.randint(-3, 3))
        return Fraction(r.randint(-1000, 1000), r.randint(1, 1000))

    def point(self):
        return Point(self.scalar(), self.scalar())

    def line(self):
        while True:
            a, b, c = self.scalar(), self.scalar(), self.scalar()
            if self.rng.random() < 0.2:
                a = Fraction(0)
            elif self.rng.random() < 0.2:
                b = Fraction(0)
            if a or b:
                return self.plane.normalize_line(a, b, c)

    def point_on(self, l: Line):
        t = self.scalar()
        if l.b:
            return Point(t, -(l.a * t + l.c) / l.b)
        return Point(-l.c / l.a, t)

    def line_through(self, P: Point):
        l = self.line()
        return self.plane.parallel_through(P, l)

    def pencil(self):
        r, pl = self.rng.random(), self.plane
        if r < 0.3:
            return pc.PointPencil(self.point())
        if r < 0.45:
            return pc.ParallelPencil(self.line())
        if r < 0.75:
            l = self.line()
            k = self.rng.random()
            m = l if k < 0.1 else pl.parallel_through(self.point(), l) if k < 0.3 else self.line()
            return pc.TwoLine(l, m)
        return pc.TwoVLine(self.vline(), self.vline())

    def vline(self):
        r = self.rng.random()
        if r < 0.5:
            return vl.Resolved(self.line())
        if r < 0.65:
            return vl.EMPTY
        while True:
            a, b = self.pencil_shallow(), self.pencil_shallow()
            if pc.distinct(self.plane, a, b).yes:
                return vl.core(self.plane, a, b)

    def pencil_shallow(self):
        r = self.rng.random()
        if r < 0.4:
            return pc.PointPencil(self.point())
        if r < 0.7:
            return pc.ParallelPencil(self.line())
        return pc.TwoLine(self.line(), self.line())

    def epoint(self):
        return ex.epoint(self.plane, self.pencil())

    def eline(self):
        r, pl = self.rng.random(), self.plane
        if r < 0.45:
            return ex.proper_eline(pl, self.line())
        if r < 0.6:
            return ex.line_at_infinity()
        return ex.eline(pl, self.vline())

    def distinct_epoints(self):
        while True:
            a = self.epoint()
            b = self.epoint() if self.rng.random() < 0.7 else self.epoint_on(self.eline_through(a))
            if ex.epoint_distinct(self.plane, a, b).yes:
                return a, b

    def eline_through(self, e: ex.EPoint):
        while True:
            f = self.epoint()
            if ex.epoint_distinct(self.plane, e, f).yes:
                return ex.join(self.plane, e, f)

    def epoint_on(self, lam: ex.ELine):
        """A random e-point of ``lam``: proper, its tip, or a meet."""
        pl = self.plane
        r = vl.resolve(pl, lam.root)
        k = self.rng.random()
        if isinstance(r, Line):
            if k < 0.5:
                return ex.proper_epoint(pl, self.point_on(r))
            if k < 0.7:
                return ex.tip(pl, ex.proper_eline(pl, r))
        elif k < 0.7:
            return ex.EPoint(pc.ParallelPencil(pl.direction(self.line())))
        return ex.meet(pl, lam, self.eline())


def _check_join(rep, s, n):
    pl = s.plane
    for _ in range(n):
        a, b = s.distinct_epoints()
        lam = ex.join(pl, a, b)
        both = ex.incident_e(pl, a, lam).yes and ex.incident_e(pl, b, lam).yes
        rep.check("join_incident", both, _dump(pl, a, b))
        others = [f for f in ex.three_points_on(pl, lam) if ex.epoint_distinct(pl, a, f).yes]
        candidates = [s.eline(), ex.line_at_infinity(), s.eline_through(a), s.eline_through(b),
                      ex.join(pl, b, a), ex.join(pl, a, others[0])]
        for c in candidates:
            if ex.incident_e(pl, a, c).yes and ex.incident_e(pl, b, c).yes:
                rep.check("join_unique", ex.eline_equal(pl, c, lam).yes, _dump(pl, a, b, c))


def _meet_pair(s):
    """``(kind, lambda, mu)`` covering equal, parallel and infinite cases."""
    r = s.rng.random()
    lam = s.eline()
    if r < 0.15:
        return "equal", lam, lam
    if r < 0.35:
        l = s.line()
        return "parallel_proper", ex.proper_eline(s.plane, l), ex.proper_eline(
            s.plane, s.plane.parallel_through(s.point(), l))
    if r < 0.5:
        return "with_infinity", lam, ex.line_at_infinity()
    if r < 0.55:
        return "infinity_twice", ex.line_at_infinity(), ex.line_at_infinity()
    return "general", lam, s.eline()


def _check_meet(rep, s, n):
    pl = s.plane
    iota = ex.line_at_infinity()
    l0_point = ex.EPoint(pc.ParallelPencil(pl.direction(pl.l0)))
    for _ in range(n):
        kind, lam, mu = _meet_pair(s)
        rep.counts[f"meet_{kind}"] = rep.counts.get(f"meet_{kind}", 0) + 1
        e = ex.meet(pl, lam, mu)
        rep.check("meet_incident", ex.incident_e(pl, e, lam).yes and ex.incident_e(pl, e, mu).yes, _dump(pl, lam, mu))
        if lam == iota and mu == iota:
            rep.check("meet_infinity_is_l0_tip", e == l0_point, _dump(pl, e))
        if ex.eline_distinct(pl, lam, mu).yes:
            f = s.epoint_on(lam)
            if ex.incident_e(pl, f, mu).yes:
                rep.check("meet_unique", ex.epoint_equal(pl, e, f).yes, _dump(pl, lam, mu, f))


def _check_core_invariance(rep, s, n):
    pl = s.plane
    for _ in range(n):
        lam = s.eline()
        pts = list(ex.three_points_on(pl, lam)) + [s.epoint_on(lam) for _ in range(2)]
        a, b = s.rng.sample(pts, 2)
        if not ex.epoint_distinct(pl, a, b).yes:
            a, b = pts[0], pts[1]
        r = vl.resolve(pl, vl.core(pl, a.rep, b.rep))
        root = vl.resolve(pl, lam.root)
        if isinstance(r, Line) and isinstance(root, Line):
            same = pl.lines_equal(r, root).yes
        else:
            same = type(r) is type(root)
        rep.check("core_invariance", same, _dump(pl, lam, a, b))


def _check_embedding(rep, s, n):
    pl = s.plane
    for _ in range(n):
        l = s.line()
        P = s.point_on(l) if s.rng.random() < 0.3 else s.point()
        R = P if s.rng.random() < 0.25 else s.point()
        m = l if s.rng.random() < 0.25 else s.line()
        eP, eR, el, em = ex.embed_point(pl, P), ex.embed_point(pl, R), ex.embed_line(pl, l), ex.embed_line(pl, m)
        inputs = _dump(pl, P, R, l, m)
        rep.check("embed_equality", pl.points_equal(P, R).yes == ex.epoint_equal(pl, eP, eR).yes, inputs)
        rep.check("embed_apartness", pl.points_apart(P, R).yes == ex.epoint_distinct(pl, eP, eR).yes, inputs)
        rep.check("embed_incidence", pl.incident(P, l).yes == ex.incident_e(pl, eP, el).yes, inputs)
        rep.check("embed_outside", pl.outside(P, l).yes == ex.outside_e(pl, eP, el).yes, inputs)
        rep.check("embed_line_equality", pl.lines_equal(l, m).yes == ex.eline_equal(pl, el, em).yes, inputs)
        rep.check("embed_line_apartness", pl.lines_apart(l, m).yes == ex.eline_distinct(pl, el, em).yes, inputs)


def _check_three_points(rep, s, n):
    pl = s.plane
    for i in range(n):
        lam = ex.line_at_infinity() if i % 10 == 0 else s.eline()
        trio = ex.three_points_on(pl, lam)
        ok = all(ex.incident_e(pl, t, lam).yes for t in trio) and all(
            ex.epoint_distinct(pl, a, b).yes for a, b in itertools.combinations(trio, 2))
        rep.check("three_points", ok, _dump(pl, lam))


def _check_tite(rep, s, n):
    pl = s.plane
    for _ in range(n):
        alpha = s.pencil()
        prime = pc.prime_closure(pl, alpha)
        n_ = s.line() if s.rng.random() < 0.5 else next(iter(pc.generators(alpha, pl)), s.line())
        if pc.outside_line(pl, n_, prime).no:
            rep.check("tite_pencil", pc.member(pl, n_, prime).yes, _dump(pl, n_, alpha))
        e, lam = s.epoint(), s.eline()
        if s.rng.random() < 0.5:
            e = s.epoint_on(lam)
        if ex.outside_e(pl, e, lam).no:
            rep.check("tite_extension", ex.incident_e(pl, e, lam).yes, _dump(pl, e, lam))


def _check_pencils(rep, s, n):
    pl = s.plane
    for _ in range(n):
        l, m = s.line(), s.line()
        if s.rng.random() < 0.3:
            m = pl.parallel_through(s.point(), l)
        phi = pc.pencil_from_lines(l, m)
        rep.check("generators_are_members", pc.member(pl, l, phi).yes and pc.member(pl, m, phi).yes, _dump(pl, l, m))
        alpha = s.pencil()
        rho = pc.regular(pc.classify(pl, alpha))
        n1, n2 = _two_members(pl, rho)
        if pl.lines_apart(n1, n2).yes and pc.member(pl, n1, alpha).yes and pc.member(pl, n2, alpha).yes:
            # any regular pencil holding two distinct members is rho
            sigma = _regular_through(pl, n1, n2)
            rep.check("completeness", pc.equivalent(pl, sigma, rho).yes and _same_family(pl, s, sigma, alpha),
                      _dump(pl, alpha))
        pool = _pencil_pool(s)
        a, b, c = (s.rng.choice(pool) for _ in range(3))
        eq = lambda x, y: pc.equivalent(pl, x, y).yes
        rep.check("equivalence_reflexive", eq(a, a), _dump(pl, a))
        rep.check("equivalence_symmetric", eq(a, b) == eq(b, a), _dump(pl, a, b))
        if eq(a, b) and eq(b, c):
            rep.check("equivalence_transitive", eq(a, c), _dump(pl, a, b, c))
        d, e = pc.distinct(pl, a, b), pc.equivalent(pl, a, b)
        rep.check("distinct_xor_equivalent", d.yes != e.yes, _dump(pl, a, b))


def _pencil_pool(s):
    # several descriptors of the same few pencils, so equivalences occur
    pl = s.plane
    Q, l = s.point(), s.line()
    m = pl.parallel_through(s.point(), l)
    through = [s.line_through(Q) for _ in range(3)]
    return [pc.PointPencil(Q), pc.TwoLine(through[0], through[1]), pc.TwoLine(through[1], through[2]),
            pc.ParallelPencil(l), pc.TwoLine(l, m), pc.TwoLine(m, m), s.pencil()]


def _vline_pool(s):
    pl = s.plane
    l = s.line()
    P, R = s.point_on(l), s.point_on(l)
    pool = [vl.Resolved(l), vl.EMPTY, s.vline()]
    if pl.points_apart(P, R).yes:
        pool.append(vl.Pending(pc.PointPencil(P), pc.PointPencil(R)))
    return pool


def _two_members(pl, rho):
    B = pl.backend
    if isinstance(rho, pc.PointPencil):
        Q = rho.at
        return (pl.normalize_line(B.one(), B.zero(), -Q.x), pl.normalize_line(B.zero(), B.one(), -Q.y))
    d = rho.dir
    return d, Line(d.a, d.b, d.c + 1)


def _regular_through(pl, n1, n2):
    if pl.parallel(n1, n2).yes:
        return pc.ParallelPencil(n1)
    return pc.PointPencil(pl.intersection(n1, n2))


def _same_family(pl, s, x, y):
    for _ in range(4):
        n = s.line()
        if pc.member(pl, n, x).yes != pc.member(pl, n, y).yes:
            return False
    for g in _two_members(pl, pc.regular(pc.classify(pl, x))):
        if not pc.member(pl, g, y).yes:
            return False
    return True


def _check_vlines(rep, s, n):
    pl = s.plane
    for _ in range(n):
        a, b = s.pencil_shallow(), s.pencil_shallow()
        if not pc.distinct(pl, a, b).yes:
            continue
        r = vl.resolve(pl, vl.core(pl, a, b))
        if isinstance(r, Line):
            rep.check("core_membership", pc.member(pl, r, a).yes and pc.member(pl, r, b).yes, _dump(pl, a, b))
            for cand in list(pc.generators(a, pl)) + list(pc.generators(b, pl)) + [s.line()]:
                if pc.member(pl, cand, a).yes and pc.member(pl, cand, b).yes:
                    rep.check("core_at_most_one_line", pl.lines_equal(cand, r).yes, _dump(pl, a, b, cand))
        ca, cb = pc.classify(pl, a), pc.classify(pl, b)
        if isinstance(ca, pc.IsParallel) and isinstance(cb, pc.IsParallel):
            rep.check("parallel_core_empty", isinstance(r, vl.EmptyLine), _dump(pl, a, b))
        pool = _vline_pool(s)
        p, q, t = (s.rng.choice(pool) for _ in range(3))
        eqv = lambda x, y: vl.vline_equivalent(pl, x, y).yes
        rep.check("vline_reflexive", eqv(p, p), None)
        rep.check("vline_symmetric", eqv(p, q) == eqv(q, p), None)
        if eqv(p, q) and eqv(q, t):
            rep.check("vline_transitive", eqv(p, t), None)
        phi = vl.pencil_from_vlines(p, q)
        n1, n2 = _two_members(pl, pc.regular(pc.classify(pl, phi)))
        ok = pc.member(pl, n1, phi).yes and pc.member(pl, n2, phi).yes and pl.lines_apart(n1, n2).yes
        rep.check("phi_two_lines", ok, _dump(pl, phi))


def _check_roundtrips(rep, s, n):
    pl = s.plane
    for _ in range(n):
        a, b = s.distinct_epoints()
        lam = ex.join(pl, a, b)
        c = s.epoint()
        if ex.outside_e(pl, c, lam).yes:
            mu = ex.join(pl, a, c)
            rep.check("join_meet_roundtrip", ex.epoint_equal(pl, ex.meet(pl, lam, mu), a).yes, _dump(pl, a, b, c))
        l1, l2 = s.eline(), s.eline()
        if ex.eline_distinct(pl, l1, l2).yes:
            e = ex.meet(pl, l1, l2)
            others = [f for f in ex.three_points_on(pl, l1) if ex.epoint_distinct(pl, e, f).yes]
            rep.check("meet_join_roundtrip", ex.eline_equal(pl, ex.join(pl, e, others[0]), l1).yes, _dump(pl, l1, l2))


def _check_infinity(rep, s, n):
    pl = s.plane
    iota = ex.line_at_infinity()
    for _ in range(n):
        a = ex.EPoint(pc.ParallelPencil(pl.direction(s.line())))
        b = ex.EPoint(pc.ParallelPencil(pl.direction(s.line())))
        if ex.epoint_distinct(pl, a, b).yes:
            rep.check("infinity_disjoint", isinstance(vl.resolve(pl, vl.core(pl, a.rep, b.rep)), vl.EmptyLine),
                      _dump(pl, a, b))
            lam = s.eline()
            if ex.incident_e(pl, a, lam).yes and ex.incident_e(pl, b, lam).yes:
                rep.check("infinity_converse", ex.eline_equal(pl, lam, iota).yes, _dump(pl, a, b, lam))
            rep.check("infinity_join", ex.join(pl, a, b) == iota, _dump(pl, a, b))


def _check_plane(rep, s, n):
    pl = s.plane
    for _ in range(n):
        P, R = s.point(), s.point()
        if pl.points_apart(P, R).yes:
            rep.check("line_through_symmetric", pl.line_through(P, R) == pl.line_through(R, P), _dump(pl, P, R))
        l, m = s.line(), s.line()
        if pl.parallel(l, m).no:
            X = pl.intersection(l, m)
            rep.check("intersection_incident", pl.incident(X, l).yes and pl.incident(X, m).yes, _dump(pl, l, m))


RATIONAL_PROPERTIES = {
    "plane": _check_plane,
    "pencils": _check_pencils,
    "vlines": _check_vlines,
    "join": _check_join,
    "meet": _check_meet,
    "core_invariance": _check_core_invariance,
    "embedding": _check_embedding,
    "three_points": _check_three_points,
    "tite": _check_tite,
    "roundtrips": _check_roundtrips,
    "infinity": _check_infinity,
}


def check_rational_suite(samples: int, seed: int, only=None, plane=None) -> Report:
    """Run the rational property families, each on ``samples`` cases.

    Every family draws from its own generator seeded from ``seed`` and the
    family name, so selecting a subset with ``only`` replays the same cases.
    """
    plane = plane or Plane(RationalBackend())
    rep = Report("rational", seed=seed)
    for name, fn in RATIONAL_PROPERTIES.items():
        if only is not None and name not in only:
            continue
        fn(rep, Sampler(plane, f"{seed}:{name}"), samples)
    rep.counts["samples"] = samples
    return rep


# lazy demonstrations

SCENARIOS = ("true-zero", "pow2-100", "constant-one", "sign-split")
ALIASES = {
    "true-zero stream": "true-zero",
    "true_zero": "true-zero",
    "2^-100 stream": "pow2-100",
    "pow2(-100)": "pow2-100",
    "constant": "constant-one",
    "sign-split stream": "sign-split",
    "llpo": "sign-split",
}


def _c_family(name):
    return {"true-zero": lazy.true_zero(), "pow2-100": lazy.pow2(-100), "constant-one": lazy.const(1)}[name]


def _monotone(values):
    """A sequence of Decisions (or classification kinds) never retracts."""
    seen = None
    for v in values:
        if seen is not None and v != seen:
            return False
        if v not in ("unknown", "undetermined"):
            seen = v
        elif seen is not None:
            return False
    return True


def _kind(c):
    return {pc.IsPoint: "point", pc.IsParallel: "parallel", pc.Undetermined: "undetermined"}[type(c)]


def demonstrate_undecidability(scenario: str, max_budget: int = 200, budgets=None) -> Report:
    name = ALIASES.get(scenario, scenario)
    if name not in SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}; choose one of {SCENARIOS}")
    plane = Plane(LazyBackend())
    budgets = list(budgets) if budgets is not None else list(range(1, max_budget + 1))
    rep = Report(f"demo:{name}")
    rep.counts["max_budget"] = max_budget
    if name == "sign-split":
        _demo_sign_split(rep, plane, budgets)
    else:
        _demo_c_family(rep, plane, name, budgets)
    for key in rep.budget_traces[0]:
        if key not in ("budget", "at"):
            rep.check("monotone", _monotone([t[key] for t in rep.budget_traces]), [key])
    for prop, ok in scenario_expectations(rep).items():
        rep.check(prop, ok, [name])
    return rep


def _demo_c_family(rep, plane, name, budgets):
    c = _c_family(name)
    l0 = plane.l0
    m = plane.line(c, 1, -1)  # y = 1 - c x
    lam, mu = ex.proper_eline(plane, l0), ex.proper_eline(plane, m)
    tip_l, tip_m = ex.tip(plane, lam), ex.tip(plane, mu)
    rep.counts["c"] = str(c)
    for k in budgets:
        g = ex.meet(plane, lam, mu, k)
        cls = pc.classify(plane, g.rep, k)
        row = {
            "budget": k,
            "classification": _kind(cls),
            "incident_lambda": ex.incident_e(plane, g, lam, k).value,
            "incident_mu": ex.incident_e(plane, g, mu, k).value,
            "distinct_tip_lambda": ex.epoint_distinct(plane, g, tip_l, k).value,
            "distinct_tip_mu": ex.epoint_distinct(plane, g, tip_m, k).value,
        }
        if isinstance(cls, pc.IsPoint):
            row["at"] = [_approx(v, k) for v in cls.at]
        rep.budget_traces.append(row)
        rep.check("construction_incidence", ex.generated_by(g, lam) and ex.generated_by(g, mu)
                  or row["incident_lambda"] == row["incident_mu"] == "yes", [k])


def _approx(v, k):
    lo, hi = lazy.interval(v, k)
    return [f"{lo.numerator}/{lo.denominator}", f"{hi.numerator}/{hi.denominator}"]


def sign_split_configuration(plane: Plane, c, budget):
    """The two distinct e-points and the pencil a cotransitivity query needs.

    ``alpha`` is generated by the x-axis and ``y = 1 - max(c,0) x``, ``beta``
    by the y-axis and ``x = 1 - max(-c,0) y``; ``gamma`` is the pencil of the
    vertical v-line through alpha's point and the horizontal v-line through
    beta's point.  When ``c < 0`` gamma equals alpha, when ``c > 0`` it
    equals beta.
    """
    d, e = lazy.maximum(c, lazy.ZERO), lazy.maximum(lazy.neg(c), lazy.ZERO)
    x_axis, y_axis = plane.l0, plane.line(1, 0, 0)
    alpha = pc.TwoLine(x_axis, plane.line(d, 1, -1))
    beta = pc.TwoLine(y_axis, plane.line(1, e, -1))
    p = vl.core(plane, alpha, pc.ParallelPencil(y_axis), budget)
    q = vl.core(plane, beta, pc.ParallelPencil(x_axis), budget)
    gamma = pc.TwoVLine(p, q)
    return alpha, beta, gamma


def _demo_sign_split(rep, plane, budgets):
    c = lazy.true_zero()
    rep.counts["c"] = str(c)
    for k in budgets:
        alpha, beta, gamma = sign_split_configuration(plane, c, k)
        ea, eb, eg = (ex.epoint(plane, x, k) for x in (alpha, beta, gamma))
        row = {
            "budget": k,
            "classification": _kind(pc.classify(plane, gamma, k)),
            "distinct_alpha_beta": ex.epoint_distinct(plane, ea, eb, k).value,
            "distinct_gamma_alpha": ex.epoint_distinct(plane, eg, ea, k).value,
            "distinct_gamma_beta": ex.epoint_distinct(plane, eg, eb, k).value,
        }
        rep.budget_traces.append(row)


def scenario_expectations(rep: Report):
    """Named pass/fail verdicts for the documented behavior of each scenario."""
    tr = {t["budget"]: t for t in rep.budget_traces}
    name = rep.suite.split(":", 1)[1]
    out = {}
    if name == "true-zero":
        out["undetermined_throughout"] = all(t["classification"] == "undetermined" for t in tr.values())
        out["incidences_yes"] = all(t["incident_lambda"] == t["incident_mu"] == "yes" for t in tr.values())
        out["distinctness_unknown"] = all(
            t["distinct_tip_lambda"] == t["distinct_tip_mu"] == "unknown" for t in tr.values())
    elif name == "pow2-100":
        if 60 in tr:
            out["undetermined_at_60"] = tr[60]["classification"] == "undetermined"
        if 120 in tr:
            out["point_at_120"] = tr[120]["classification"] == "point"
    elif name == "constant-one":
        out["point_immediately"] = tr[min(tr)]["classification"] == "point"
    else:
        out["alpha_beta_distinct"] = all(t["distinct_alpha_beta"] == "yes" for t in tr.values())
        out["gamma_unknown_both"] = all(
            t["distinct_gamma_alpha"] == t["distinct_gamma_beta"] == "unknown" for t in tr.values())
    return out
