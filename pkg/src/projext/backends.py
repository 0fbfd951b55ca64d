"""Scalar backends: exact rationals, GF(q), and lazy reals.

A backend supplies field arithmetic and one budgeted primitive,
:meth:`is_zero`.  Every geometric predicate reduces to it.
"""

from __future__ import annotations

from fractions import Fraction

from . import gf, lazy
from .decision import NO, YES, Decision, unknown


class Backend:
    name = "abstract"
    decidable = True

    def is_zero(self, x, budget: int) -> Decision:
        raise NotImplementedError

    def nonzero(self, x, budget: int) -> Decision:
        return ~self.is_zero(x, budget)

    def zero(self):
        return self.lift(0)

    def one(self):
        return self.lift(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<backend {self.name}>"


class RationalBackend(Backend):
    name = "rational"

    def lift(self, v):
        return Fraction(v)

    def is_zero(self, x, budget=None):
        return YES if x == 0 else NO

    def to_json(self, x):
        return f"{x.numerator}/{x.denominator}"

    def from_json(self, s):
        if isinstance(s, bool):
            raise ValueError(f"not a rational: {s!r}")
        if isinstance(s, int):
            return Fraction(s)
        if not isinstance(s, str):
            raise ValueError(f"not a rational: {s!r}")
        return Fraction(s)


class FiniteBackend(Backend):
    def __init__(self, q: int):
        self.field = gf.field(q)
        self.q = q
        self.name = f"gf:{q}"

    def lift(self, v):
        v = int(v)
        if v < 0:
            return self.field.neg(self.lift(-v))
        out = 0
        for _ in range(v % self.field.p):
            out = self.field.add(out, 1)
        return out

    def is_zero(self, x, budget=None):
        return YES if x == 0 else NO

    def add(self, a, b):
        return self.field.add(a, b)

    def sub(self, a, b):
        return self.field.sub(a, b)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def div(self, a, b):
        return self.field.div(a, b)

    def neg(self, a):
        return self.field.neg(a)

    def to_json(self, x):
        return x

    def from_json(self, s):
        if isinstance(s, bool) or not isinstance(s, int) or not 0 <= s < self.q:
            raise ValueError(f"not an element of GF({self.q}): {s!r}")
        return s


class LazyBackend(Backend):
    name = "lazy"
    decidable = False

    def lift(self, v):
        return lazy.lift(v)

    def is_zero(self, x, budget):
        if x.exact is None:
            x = lazy.settle(x, budget)
        if x.exact is not None:
            return YES if x.exact == 0 else NO
        if lazy.excludes_zero(x, budget):
            return NO
        return unknown(budget)

    def add(self, a, b):
        return lazy.add(a, b)

    def sub(self, a, b):
        return lazy.sub(a, b)

    def mul(self, a, b):
        return lazy.mul(a, b)

    def div(self, a, b):
        return lazy.div(a, b)

    def neg(self, a):
        return lazy.neg(a)

    def to_json(self, x):
        return str(x)

    def from_json(self, s):
        if isinstance(s, bool):
            raise ValueError(f"not a lazy real: {s!r}")
        if isinstance(s, int):
            return lazy.const(s)
        if not isinstance(s, str):
            raise ValueError(f"not a lazy real: {s!r}")
        return lazy.parse(s)


def get(selector: str) -> Backend:
    """``rational`` | ``lazy`` | ``gf:q``."""
    if selector == "rational":
        return RationalBackend()
    if selector == "lazy":
        return LazyBackend()
    if selector.startswith("gf:"):
        try:
            q = int(selector[3:])
        except ValueError:
            raise gf.UnsupportedOrder(f"bad field order in {selector!r}") from None
        return FiniteBackend(q)
    raise ValueError(f"unsupported backend {selector!r}")
