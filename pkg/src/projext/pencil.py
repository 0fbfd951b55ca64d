"""Pencils of lines, held as finite generator descriptors.

Four descriptors cover every pencil the construction ever builds:

* ``PointPencil(Q)``   all lines through ``Q``
* ``ParallelPencil(l)`` all lines parallel to ``l``
* ``TwoLine(l, m)``    the complete pencil generated by two lines
* ``TwoVLine(p, q)``   the complete pencil generated by two virtual lines

Each descriptor denotes a complete pencil, so once it is known to sit in a
regular pencil it *equals* that regular pencil.  Everything below is a
case analysis over generators; nothing is ever enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import decision as dec
from . import vline as vl
from .decision import NO, YES, Decision, unknown
from .plane import Line, Plane, Point


@dataclass(frozen=True)
class PointPencil:
    at: Point


@dataclass(frozen=True)
class ParallelPencil:
    dir: Line


@dataclass(frozen=True)
class TwoLine:
    l: Line
    m: Line


@dataclass(frozen=True)
class TwoVLine:
    p: "vl.VLine"
    q: "vl.VLine"


Pencil = Union[PointPencil, ParallelPencil, TwoLine, TwoVLine]
REGULAR = (PointPencil, ParallelPencil)


@dataclass(frozen=True)
class IsPoint:
    at: Point


@dataclass(frozen=True)
class IsParallel:
    dir: Line


@dataclass(frozen=True)
class Undetermined:
    budget: int


Classification = Union[IsPoint, IsParallel, Undetermined]


def _k(plane, budget):
    return plane.budget if budget is None else budget


def pencil_from_lines(l: Line, m: Line) -> TwoLine:
    return TwoLine(l, m)


def generators(alpha: Pencil, plane: Plane, budget=None):
    """Lines known to belong to ``alpha`` without any case analysis."""
    if isinstance(alpha, TwoLine):
        return [alpha.l] if alpha.l == alpha.m else [alpha.l, alpha.m]
    if isinstance(alpha, ParallelPencil):
        return [alpha.dir]
    if isinstance(alpha, TwoVLine):
        out = []
        for v in (alpha.p, alpha.q):
            r = vl.resolve(plane, v, budget)
            if isinstance(r, Line) and r not in out:
                out.append(r)
        return out
    return []


def classify(plane: Plane, alpha: Pencil, budget=None) -> Classification:
    """The regular pencil that ``alpha`` equals, when it can be found."""
    k = _k(plane, budget)
    if isinstance(alpha, PointPencil):
        return IsPoint(alpha.at)
    if isinstance(alpha, ParallelPencil):
        return IsParallel(alpha.dir)
    if isinstance(alpha, TwoLine):
        return _classify_pair(plane, alpha.l, alpha.m, k)
    if isinstance(alpha, TwoVLine):
        rp = vl.resolve(plane, alpha.p, k)
        rq = vl.resolve(plane, alpha.q, k)
        if isinstance(rp, vl.Unresolved) or isinstance(rq, vl.Unresolved):
            return Undetermined(k)
        if isinstance(rp, Line) and isinstance(rq, Line):
            return _classify_pair(plane, rp, rq, k)
        if isinstance(rp, Line):
            return IsParallel(rp)
        if isinstance(rq, Line):
            return IsParallel(rq)
        return IsParallel(plane.l0)
    raise TypeError(f"not a pencil: {alpha!r}")


def _classify_pair(plane, l, m, k):
    par = plane.parallel(l, m, k)
    if par.no:
        return IsPoint(plane.intersection(l, m, k))
    if par.yes:
        return IsParallel(l)
    return Undetermined(k)


def regular(c: Classification) -> Optional[Pencil]:
    if isinstance(c, IsPoint):
        return PointPencil(c.at)
    if isinstance(c, IsParallel):
        return ParallelPencil(c.dir)
    return None


def _vstate(plane, v, k):
    """``(is_line, is_empty, line_or_None)`` for a virtual line at budget k."""
    r = vl.resolve(plane, v, k)
    if isinstance(r, Line):
        return YES, NO, r
    if isinstance(r, vl.EmptyLine):
        return NO, YES, None
    return unknown(k), unknown(k), None


def member(plane: Plane, n: Line, alpha: Pencil, budget=None) -> Decision:
    """Whether ``n`` belongs to the family denoted by ``alpha``."""
    k = _k(plane, budget)
    if isinstance(alpha, PointPencil):
        return plane.incident(alpha.at, n, k)
    if isinstance(alpha, ParallelPencil):
        return plane.parallel(n, alpha.dir, k)
    if isinstance(alpha, TwoLine):
        l, m = alpha.l, alpha.m
        par = plane.parallel(l, m, k)
        return dec.any_of((
            plane.lines_equal(n, l, k),
            plane.lines_equal(n, m, k),
            ~par & plane.concurrent(n, l, m, k),
            par & plane.parallel(n, l, k),
        ))
    if isinstance(alpha, TwoVLine):
        return _member_vv(plane, n, alpha, k)
    raise TypeError(f"not a pencil: {alpha!r}")


def _member_vv(plane, n, alpha, k):
    pl, pe, p = _vstate(plane, alpha.p, k)
    ql, qe, q = _vstate(plane, alpha.q, k)
    u = unknown(k)
    both = pl & ql
    if both.yes:
        par = plane.parallel(p, q, k)
        phi12 = (~par & plane.concurrent(n, p, q, k)) | (par & plane.parallel(n, p, k))
    else:
        phi12 = NO if both.no else u
    phi0 = dec.any_of((
        plane.lines_equal(n, p, k) if pl.yes else pl,
        plane.lines_equal(n, q, k) if ql.yes else ql,
    ))
    phi3 = dec.any_of((
        (qe & plane.parallel(n, p, k)) if pl.yes else (NO if pl.no else u),
        (pe & plane.parallel(n, q, k)) if ql.yes else (NO if ql.no else u),
    ))
    phi4 = pe & qe & plane.parallel(n, plane.l0, k)
    return dec.any_of((phi0, phi12, phi3, phi4))


def outside_line(plane: Plane, n: Line, alpha: Pencil, budget=None) -> Decision:
    """Whether ``n`` is apart from every member of ``alpha``.

    ``n`` lies outside ``Q*`` iff ``Q`` lies outside ``n``, and outside ``l*``
    iff ``n`` meets ``l``.  Generated pencils are checked clause by clause,
    which decides more than waiting for a classification.
    """
    k = _k(plane, budget)
    if isinstance(alpha, PointPencil):
        return plane.outside(alpha.at, n, k)
    if isinstance(alpha, ParallelPencil):
        return plane.intersects(n, alpha.dir, k)
    if isinstance(alpha, TwoLine):
        l, m = alpha.l, alpha.m
        par = plane.parallel(l, m, k)
        return dec.all_of((
            plane.lines_apart(n, l, k),
            plane.lines_apart(n, m, k),
            par | ~plane.concurrent(n, l, m, k),
            ~par | plane.intersects(n, l, k),
        ))
    if isinstance(alpha, TwoVLine):
        return _outside_vv(plane, n, alpha, k)
    raise TypeError(f"not a pencil: {alpha!r}")


def _outside_vv(plane, n, alpha, k):
    pl, pe, p = _vstate(plane, alpha.p, k)
    ql, qe, q = _vstate(plane, alpha.q, k)
    u = unknown(k)
    both = pl & ql
    if both.yes:
        par = plane.parallel(p, q, k)
        phi12 = (par | ~plane.concurrent(n, p, q, k)) & (~par | plane.intersects(n, p, k))
    else:
        phi12 = YES if both.no else u
    phi0 = dec.all_of((
        plane.lines_apart(n, p, k) if pl.yes else pe,
        plane.lines_apart(n, q, k) if ql.yes else qe,
    ))
    phi3 = dec.all_of((
        (ql | plane.intersects(n, p, k)) if pl.yes else (YES if pl.no else u),
        (pl | plane.intersects(n, q, k)) if ql.yes else (YES if ql.no else u),
    ))
    phi4 = pl | ql | plane.intersects(n, plane.l0, k)
    return dec.all_of((phi0, phi12, phi3, phi4))


def equivalent(plane: Plane, alpha: Pencil, beta: Pencil, budget=None) -> Decision:
    """Whether the pencils sit in the same regular pencil."""
    k = _k(plane, budget)
    if alpha == beta:
        return YES
    ca, cb = classify(plane, alpha, k), classify(plane, beta, k)
    if isinstance(ca, Undetermined) or isinstance(cb, Undetermined):
        # a positive distinctness witness still settles the question
        if distinct_witness(plane, alpha, beta, k)[0].yes:
            return NO
        return unknown(k)
    if isinstance(ca, IsPoint) and isinstance(cb, IsPoint):
        return plane.points_equal(ca.at, cb.at, k)
    if isinstance(ca, IsParallel) and isinstance(cb, IsParallel):
        return plane.parallel(ca.dir, cb.dir, k)
    return NO


def distinct(plane: Plane, alpha: Pencil, beta: Pencil, budget=None) -> Decision:
    return distinct_witness(plane, alpha, beta, budget)[0]


def distinct_witness(plane: Plane, alpha: Pencil, beta: Pencil, budget=None):
    """``(Decision, witness line or None)``.

    A witness is a line in one pencil lying outside the other.  Candidates
    come from the classifications first, then from the generator lines.
    """
    k = _k(plane, budget)
    ca, cb = classify(plane, alpha, k), classify(plane, beta, k)
    candidates = []
    for mine, other, ours in ((ca, cb, alpha), (cb, ca, beta)):
        candidates += [(w, ours) for w in _regular_witnesses(plane, mine, other, k)]
    for ours in (alpha, beta):
        candidates += [(g, ours) for g in generators(ours, plane, k)]
    for line, ours in candidates:
        other = beta if ours is alpha else alpha
        if member(plane, line, ours, k).yes and outside_line(plane, line, other, k).yes:
            return YES, line
    if not isinstance(ca, Undetermined) and not isinstance(cb, Undetermined):
        # complete pencils in the same regular pencil are equal as families
        if isinstance(ca, IsPoint) and isinstance(cb, IsPoint):
            if plane.points_equal(ca.at, cb.at, k).yes:
                return NO, None
        elif isinstance(ca, IsParallel) and isinstance(cb, IsParallel):
            if plane.parallel(ca.dir, cb.dir, k).yes:
                return NO, None
        if plane.decidable:
            raise AssertionError("regular pencils neither equal nor witnessed distinct")
    if alpha == beta:
        return NO, None
    return unknown(k), None


def _regular_witnesses(plane, mine, other, k):
    """Lines of the regular pencil ``mine`` likely to miss the pencil ``other``."""
    B = plane.backend
    if isinstance(mine, IsPoint):
        Q = mine.at
        vertical = plane.normalize_line(B.one(), B.zero(), B.neg(Q.x), k)
        horizontal = plane.normalize_line(B.zero(), B.one(), B.neg(Q.y), k)
        if isinstance(other, IsPoint):
            return [vertical, horizontal]
        if isinstance(other, IsParallel):
            # a line through Q that meets the direction of `other`
            return [horizontal, vertical]
        return [vertical, horizontal]
    if isinstance(mine, IsParallel):
        out = [mine.dir]
        if isinstance(other, IsPoint):
            out.append(plane.parallel_through(other.at, mine.dir))
        return out
    return []


def prime_closure(plane: Plane, alpha: Pencil, budget=None) -> Pencil:
    """Canonical representative of ``alpha``'s equivalence class.

    Classified pencils become the regular pencil containing them, parallel
    pencils written with their direction through the origin.  Unclassified
    pencils are returned unchanged.
    """
    c = classify(plane, alpha, budget)
    if isinstance(c, IsPoint):
        return PointPencil(c.at)
    if isinstance(c, IsParallel):
        return ParallelPencil(plane.direction(c.dir))
    return alpha


def is_parallel_pencil(plane: Plane, alpha: Pencil, budget=None) -> Decision:
    k = _k(plane, budget)
    c = classify(plane, alpha, k)
    if isinstance(c, IsParallel):
        return YES
    if isinstance(c, IsPoint):
        return NO
    gens = generators(alpha, plane, k)
    if any(plane.intersects(g, h, k).yes for g in gens for h in gens):
        return NO
    return unknown(k)
