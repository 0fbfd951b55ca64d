"""The underlying affine incidence plane over a scalar backend."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import decision as dec
from .backends import Backend, FiniteBackend, RationalBackend
from .decision import DEFAULT_BUDGET, Decision


class GeometryError(ValueError):
    """Raised when a construction's precondition fails."""


@dataclass(frozen=True)
class Point:
    x: Any
    y: Any

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass(frozen=True)
class Line:
    """The locus ``a*x + b*y + c = 0``; build through :meth:`Plane.line`."""

    a: Any
    b: Any
    c: Any

    def __iter__(self):
        return iter((self.a, self.b, self.c))


class Plane:
    """An incidence plane: points, lines and the primitive relations.

    ``l0`` is the distinguished line used by the pencil of two empty
    virtual lines; it defaults to ``y = 0``.
    """

    def __init__(self, backend: Backend = None, l0=None, budget: int = DEFAULT_BUDGET):
        self.backend = backend if backend is not None else RationalBackend()
        self.budget = budget
        if l0 is None:
            l0 = (0, 1, 0)
        if not isinstance(l0, Line):
            l0 = self.line(*l0)
        self.l0 = l0

    def __repr__(self):
        return f"Plane({self.backend.name}, l0={self.l0})"

    @property
    def decidable(self) -> bool:
        return self.backend.decidable

    def _b(self, budget):
        return self.budget if budget is None else budget

    # construction

    def point(self, x, y) -> Point:
        lift = self.backend.lift
        return Point(lift(x) if not _is_scalar(x, self.backend) else x,
                     lift(y) if not _is_scalar(y, self.backend) else y)

    def line(self, a, b, c) -> Line:
        lift = self.backend.lift
        return self.normalize_line(*(v if _is_scalar(v, self.backend) else lift(v) for v in (a, b, c)))

    def normalize_line(self, a, b, c, budget=None) -> Line:
        k = self._b(budget)
        B = self.backend
        if B.is_zero(a, k).yes and B.is_zero(b, k).yes:
            raise GeometryError("not a line: (a, b) = (0, 0)")
        if B.decidable:
            lead = a if a != 0 else b
        else:
            lead = None
            if a.exact is not None and a.exact != 0:
                lead = a
            elif a.exact == 0 and b.exact is not None:
                lead = b
            if lead is None:
                return Line(a, b, c)
        return Line(B.div(a, lead), B.div(b, lead), B.div(c, lead))

    # predicates

    def evaluate(self, Q: Point, l: Line):
        B = self.backend
        return B.add(B.add(B.mul(l.a, Q.x), B.mul(l.b, Q.y)), l.c)

    def incident(self, Q: Point, l: Line, budget=None) -> Decision:
        return self.backend.is_zero(self.evaluate(Q, l), self._b(budget))

    def outside(self, Q: Point, l: Line, budget=None) -> Decision:
        return ~self.incident(Q, l, budget)

    def points_apart(self, Q: Point, R: Point, budget=None) -> Decision:
        k, B = self._b(budget), self.backend
        return B.nonzero(B.sub(Q.x, R.x), k) | B.nonzero(B.sub(Q.y, R.y), k)

    def points_equal(self, Q: Point, R: Point, budget=None) -> Decision:
        return ~self.points_apart(Q, R, budget)

    def cross(self, l: Line, m: Line):
        B = self.backend
        return B.sub(B.mul(l.a, m.b), B.mul(m.a, l.b))

    def parallel(self, l: Line, m: Line, budget=None) -> Decision:
        """Yes iff the lines share no point or coincide."""
        return self.backend.is_zero(self.cross(l, m), self._b(budget))

    def intersects(self, l: Line, m: Line, budget=None) -> Decision:
        return ~self.parallel(l, m, budget)

    def lines_apart(self, l: Line, m: Line, budget=None) -> Decision:
        k, B = self._b(budget), self.backend
        minors = (
            self.cross(l, m),
            B.sub(B.mul(l.a, m.c), B.mul(m.a, l.c)),
            B.sub(B.mul(l.b, m.c), B.mul(m.b, l.c)),
        )
        return dec.any_of(B.nonzero(v, k) for v in minors)

    def lines_equal(self, l: Line, m: Line, budget=None) -> Decision:
        if l == m:
            return dec.YES
        return ~self.lines_apart(l, m, budget)

    def concurrent(self, n: Line, l: Line, m: Line, budget=None) -> Decision:
        """Zero test of the 3x3 determinant of three line triples.

        When ``l`` and ``m`` intersect, this is exactly whether their common
        point lies on ``n``; it is defined without knowing that they do.
        """
        B = self.backend
        minor = lambda p, q, r, s: B.sub(B.mul(p, s), B.mul(q, r))
        det = B.add(
            B.sub(B.mul(n.a, minor(l.b, l.c, m.b, m.c)), B.mul(n.b, minor(l.a, l.c, m.a, m.c))),
            B.mul(n.c, minor(l.a, l.b, m.a, m.b)),
        )
        return B.is_zero(det, self._b(budget))

    # constructions

    def line_through(self, Q: Point, R: Point, budget=None) -> Line:
        apart = self.points_apart(Q, R, budget)
        if apart.no:
            raise GeometryError("coincident points")
        if apart.unknown:
            raise GeometryError(f"no distinctness witness for points at budget {apart.budget}")
        B = self.backend
        return self.normalize_line(
            B.sub(Q.y, R.y), B.sub(R.x, Q.x), B.sub(B.mul(Q.x, R.y), B.mul(R.x, Q.y)), budget
        )

    def intersection(self, l: Line, m: Line, budget=None) -> Point:
        par = self.parallel(l, m, budget)
        if par.yes:
            raise GeometryError("no unique intersection: lines are parallel or equal")
        if par.unknown:
            raise GeometryError(f"no unique intersection: parallelism undetermined at budget {par.budget}")
        B = self.backend
        z = self.cross(l, m)
        X = B.sub(B.mul(l.b, m.c), B.mul(m.b, l.c))
        Y = B.sub(B.mul(m.a, l.c), B.mul(l.a, m.c))
        return Point(B.div(X, z), B.div(Y, z))

    def parallel_through(self, Q: Point, l: Line) -> Line:
        B = self.backend
        return self.normalize_line(l.a, l.b, B.neg(B.add(B.mul(l.a, Q.x), B.mul(l.b, Q.y))))

    def direction(self, l: Line) -> Line:
        """The member of ``l``'s parallel class through the origin."""
        return Line(l.a, l.b, self.backend.zero())

    def points_on(self, l: Line, count: int = 2):
        """``count`` distinct points of ``l`` (x = 0, 1, ... or y = 0, 1, ...)."""
        B = self.backend
        b_zero = B.is_zero(l.b, self.budget)
        if b_zero.unknown:
            raise GeometryError("cannot parametrize line: slope undetermined")
        out = []
        for i in range(count):
            t = B.lift(i)
            if b_zero.no:
                out.append(Point(t, B.div(B.neg(B.add(B.mul(l.a, t), l.c)), l.b)))
            else:
                out.append(Point(B.div(B.neg(l.c), l.a), t))
        return out

    def enumerate(self):
        """All points and lines of AG(2, q); finite backend only."""
        if not isinstance(self.backend, FiniteBackend):
            raise GeometryError("enumerate requires a finite backend")
        els = list(self.backend.field.elements())
        points = [Point(x, y) for x in els for y in els]
        lines = [Line(1, b, c) for b in els for c in els] + [Line(0, 1, c) for c in els]
        return points, lines


def _is_scalar(v, backend):
    if isinstance(backend, RationalBackend):
        return False
    if isinstance(backend, FiniteBackend):
        # field elements are given directly as their integer codes
        backend.from_json(v)
        return True
    from .lazy import Real
    return isinstance(v, Real)
