"""Virtual lines: point sets that, if nonvoid, are lines.

A v-line is carried in one of three states.  ``Resolved`` holds a line,
``Empty`` is the void v-line (the root of the line at infinity), and
``Pending`` holds the pair of pencils whose core it is, to be resolved
by classifying them at some budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import pencil as pc
from .decision import NO, YES, Decision, unknown
from .plane import GeometryError, Line, Plane


@dataclass(frozen=True)
class Resolved:
    line: Line


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Pending:
    alpha: "pc.Pencil"
    beta: "pc.Pencil"
    prime: bool = False


VLine = Union[Resolved, Empty, Pending]
EMPTY = Empty()


@dataclass(frozen=True)
class EmptyLine:
    """Resolution result for a void v-line."""


@dataclass(frozen=True)
class Unresolved:
    budget: int


EMPTY_RESULT = EmptyLine()


class CoreUndefined(GeometryError):
    pass


def _k(plane, budget):
    return plane.budget if budget is None else budget


def _core_table(plane, alpha, beta, k):
    """Decidable case table for the core of two classified pencils."""
    ca, cb = pc.classify(plane, alpha, k), pc.classify(plane, beta, k)
    if isinstance(ca, pc.Undetermined) or isinstance(cb, pc.Undetermined):
        return None
    if isinstance(ca, pc.IsPoint) and isinstance(cb, pc.IsPoint):
        return Resolved(plane.line_through(ca.at, cb.at, k))
    if isinstance(ca, pc.IsPoint):
        return Resolved(plane.parallel_through(ca.at, cb.dir))
    if isinstance(cb, pc.IsPoint):
        return Resolved(plane.parallel_through(cb.at, ca.dir))
    return EMPTY


def core(plane: Plane, alpha, beta, budget=None) -> VLine:
    """The v-line of points on lines common to two distinct pencils."""
    k = _k(plane, budget)
    d = pc.distinct(plane, alpha, beta, k)
    if d.no:
        raise CoreUndefined("core undefined for equivalent pencils")
    if d.unknown:
        raise CoreUndefined(f"core needs a distinctness witness; none found at budget {k}")
    table = _core_table(plane, alpha, beta, k)
    return table if table is not None else Pending(alpha, beta)


def resolve(plane: Plane, p: VLine, budget=None):
    """A :class:`Line`, :data:`EMPTY_RESULT`, or :class:`Unresolved`."""
    k = _k(plane, budget)
    if isinstance(p, Resolved):
        return p.line
    if isinstance(p, Empty):
        return EMPTY_RESULT
    if isinstance(p, Pending):
        table = _core_table(plane, p.alpha, p.beta, k)
        if table is None:
            return Unresolved(k)
        return resolve(plane, table, k)
    raise TypeError(f"not a v-line: {p!r}")


def vline_equivalent(plane: Plane, p: VLine, q: VLine, budget=None) -> Decision:
    k = _k(plane, budget)
    if _strip(p) == _strip(q):
        return YES
    rp, rq = resolve(plane, p, k), resolve(plane, q, k)
    if isinstance(rp, Unresolved) or isinstance(rq, Unresolved):
        return unknown(k)
    if isinstance(rp, Line) and isinstance(rq, Line):
        return plane.lines_equal(rp, rq, k)
    if isinstance(rp, EmptyLine) and isinstance(rq, EmptyLine):
        return YES
    return NO


def vline_distinct(plane: Plane, p: VLine, q: VLine, budget=None) -> Decision:
    return ~vline_equivalent(plane, p, q, budget)


def _strip(p):
    return Pending(p.alpha, p.beta) if isinstance(p, Pending) else p


def prime_closure_v(plane: Plane, p: VLine, budget=None) -> VLine:
    if isinstance(p, Pending):
        return Pending(p.alpha, p.beta, prime=True)
    return p


def pencil_from_vlines(p: VLine, q: VLine) -> "pc.TwoVLine":
    return pc.TwoVLine(p, q)
