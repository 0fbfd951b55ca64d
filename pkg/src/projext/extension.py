"""The projective extension: e-points, e-lines, join and meet.

An e-point is a class of equivalent pencils, carried by its prime closure.
An e-line is carried by its root, a prime v-line.  Join goes through the
core of two pencils and meet through the pencil of two v-lines, so neither
ever has to decide whether two lines are parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import pencil as pc
from . import vline as vl
from .decision import NO, YES, Decision, unknown
from .plane import GeometryError, Line, Plane, Point


@dataclass(frozen=True)
class EPoint:
    """``rep`` is the prime closure; ``source`` the pencil it was built from.

    Equality ignores ``source``.  It is kept because membership in any pencil
    of the class implies membership in the closure, and over lazy reals the
    generators often witness an incidence that the closed form cannot.
    """

    rep: pc.Pencil
    source: Optional[pc.Pencil] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ELine:
    root: vl.VLine


class JoinUndefined(GeometryError):
    pass


def _k(plane, budget):
    return plane.budget if budget is None else budget


def epoint(plane: Plane, alpha: pc.Pencil, budget=None) -> EPoint:
    rep = pc.prime_closure(plane, alpha, budget)
    return EPoint(rep, alpha if rep != alpha else None)


def _settle(first: Decision, fallback) -> Decision:
    # both routes are sound, so a determined answer from either stands
    if first.determined:
        return first
    return fallback()


def eline(plane: Plane, p: vl.VLine, budget=None) -> ELine:
    return ELine(vl.prime_closure_v(plane, p, budget))


def proper_epoint(plane: Plane, Q: Point) -> EPoint:
    return EPoint(pc.PointPencil(Q))


def proper_eline(plane: Plane, l: Line) -> ELine:
    return ELine(vl.Resolved(l))


def line_at_infinity() -> ELine:
    return ELine(vl.EMPTY)


def tip(plane: Plane, lam: ELine) -> EPoint:
    if not isinstance(lam.root, vl.Resolved):
        if isinstance(lam.root, vl.Empty):
            raise GeometryError("infinity line has no tip")
        raise GeometryError("tip requires a proper e-line")
    return EPoint(pc.ParallelPencil(plane.direction(lam.root.line)))


embed_point = proper_epoint
embed_line = proper_eline


def incident_e(plane: Plane, e: EPoint, lam: ELine, budget=None) -> Decision:
    k = _k(plane, budget)
    root = vl.resolve(plane, lam.root, k)
    rep = pc.prime_closure(plane, e.rep, k)
    src = e.source
    if isinstance(root, Line):
        d = pc.member(plane, root, rep, k)
        return _settle(d, lambda: pc.member(plane, root, src, k)) if src is not None else d
    if isinstance(root, vl.EmptyLine):
        d = pc.is_parallel_pencil(plane, rep, k)
        return _settle(d, lambda: pc.is_parallel_pencil(plane, src, k)) if src is not None else d
    return unknown(k)


def outside_e(plane: Plane, e: EPoint, lam: ELine, budget=None) -> Decision:
    """Whether ``e`` is distinct from every regular e-point on ``lam``."""
    k = _k(plane, budget)
    root = vl.resolve(plane, lam.root, k)
    rep = pc.prime_closure(plane, e.rep, k)
    if isinstance(root, Line):
        return pc.outside_line(plane, root, rep, k)
    if isinstance(root, vl.EmptyLine):
        c = pc.classify(plane, rep, k)
        if isinstance(c, pc.IsPoint):
            return YES
        if isinstance(c, pc.IsParallel):
            return NO
        return ~pc.is_parallel_pencil(plane, rep, k)
    return unknown(k)


def epoint_equal(plane: Plane, e1: EPoint, e2: EPoint, budget=None) -> Decision:
    return pc.equivalent(plane, e1.rep, e2.rep, budget)


def epoint_distinct(plane: Plane, e1: EPoint, e2: EPoint, budget=None) -> Decision:
    k = _k(plane, budget)
    a, b = pc.prime_closure(plane, e1.rep, k), pc.prime_closure(plane, e2.rep, k)
    d = pc.distinct(plane, a, b, k)
    if d.determined:
        return d
    # generators of a source pencil lie in the closure too
    for src, other in ((e1.source, b), (e2.source, a)):
        if src is None:
            continue
        for g in pc.generators(src, plane, k):
            if pc.member(plane, g, src, k).yes and pc.outside_line(plane, g, other, k).yes:
                return YES
    return d


def eline_equal(plane: Plane, l1: ELine, l2: ELine, budget=None) -> Decision:
    return vl.vline_equivalent(plane, l1.root, l2.root, budget)


def eline_distinct(plane: Plane, l1: ELine, l2: ELine, budget=None) -> Decision:
    return vl.vline_distinct(plane, l1.root, l2.root, budget)


def join(plane: Plane, e1: EPoint, e2: EPoint, budget=None) -> ELine:
    """The unique e-line through two distinct e-points."""
    k = _k(plane, budget)
    a, b = pc.prime_closure(plane, e1.rep, k), pc.prime_closure(plane, e2.rep, k)
    if not pc.distinct(plane, a, b, k).yes:
        raise JoinUndefined("join requires distinct e-points")
    return ELine(vl.prime_closure_v(plane, vl.core(plane, a, b, k), k))


def meet(plane: Plane, l1: ELine, l2: ELine, budget=None) -> EPoint:
    """A common e-point of any two e-lines, equal or not."""
    return epoint(plane, vl.pencil_from_vlines(l1.root, l2.root), budget)


def stem_contains(plane: Plane, Q: Point, lam: ELine, budget=None) -> Decision:
    return incident_e(plane, proper_epoint(plane, Q), lam, budget)


def three_points_on(plane: Plane, lam: ELine, budget=None):
    k = _k(plane, budget)
    root = vl.resolve(plane, lam.root, k)
    if isinstance(root, vl.Unresolved):
        raise GeometryError(f"root unresolved at budget {k}: {unknown(k)!r}")
    if isinstance(root, Line):
        P, R = plane.points_on(root, 2)
        return (proper_epoint(plane, P), proper_epoint(plane, R), EPoint(pc.ParallelPencil(plane.direction(root))))
    B = plane.backend
    zero, one = B.zero(), B.one()
    dirs = [Line(zero, one, zero), Line(one, zero, zero), Line(one, B.neg(one), zero)]
    return tuple(EPoint(pc.ParallelPencil(d)) for d in dirs)


def generated_by(e: EPoint, lam: ELine) -> bool:
    """Construction-level incidence: ``lam``'s root is a generator of ``e``."""
    rep = e.rep
    if isinstance(rep, pc.TwoVLine):
        return lam.root in (rep.p, rep.q) or vl._strip(lam.root) in (vl._strip(rep.p), vl._strip(rep.q))
    if isinstance(rep, pc.TwoLine) and isinstance(lam.root, vl.Resolved):
        return lam.root.line in (rep.l, rep.m)
    return False
