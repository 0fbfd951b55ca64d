"""Lazy exact reals.

A lazy real is a small expression tree over opaque streams.  At budget ``k``
it yields a closed rational interval of width at most ``2**-k`` containing
its value, and the intervals shrink monotonically as ``k`` grows.

Constants fold eagerly, so a product with an exact zero is itself an exact
zero.  That folding is the only route by which a lazy real is ever known to
*equal* zero; an opaque stream whose value happens to be zero is never
confirmed as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

# Precision at which a division gives up looking for a nonzero denominator.
DIVISION_SEARCH_LIMIT = 4096


class LazyError(ArithmeticError):
    pass


class Real:
    """Base for lazy real nodes.  Subclasses are frozen dataclasses."""

    __slots__ = ()

    def interval(self, k: int):
        return interval(self, k)

    @property
    def exact(self):
        return None

    def __add__(self, other):
        return add(self, lift(other))

    def __radd__(self, other):
        return add(lift(other), self)

    def __sub__(self, other):
        return sub(self, lift(other))

    def __rsub__(self, other):
        return sub(lift(other), self)

    def __mul__(self, other):
        return mul(self, lift(other))

    def __rmul__(self, other):
        return mul(lift(other), self)

    def __truediv__(self, other):
        return div(self, lift(other))

    def __rtruediv__(self, other):
        return div(lift(other), self)

    def __neg__(self):
        return neg(self)


@dataclass(frozen=True)
class Const(Real):
    value: Fraction

    @property
    def exact(self):
        return self.value

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator}"


@dataclass(frozen=True)
class TrueZero(Real):
    """A stream whose every approximation is 0, never certified as zero."""

    def __str__(self):
        return "true_zero"


@dataclass(frozen=True)
class Pow2(Real):
    """The stream of dyadic approximations of ``2**exponent``."""

    exponent: int

    def __str__(self):
        return f"pow2({self.exponent})"


@dataclass(frozen=True)
class Neg(Real):
    x: Real

    def __str__(self):
        return f"neg({self.x})"


@dataclass(frozen=True)
class Add(Real):
    x: Real
    y: Real

    def __str__(self):
        return f"add({self.x},{self.y})"


@dataclass(frozen=True)
class Mul(Real):
    x: Real
    y: Real

    def __str__(self):
        return f"mul({self.x},{self.y})"


@dataclass(frozen=True)
class Max(Real):
    x: Real
    y: Real

    def __str__(self):
        return f"max({self.x},{self.y})"


@dataclass(frozen=True)
class Inv(Real):
    x: Real

    def __str__(self):
        return f"inv({self.x})"


ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))


def lift(v) -> Real:
    if isinstance(v, Real):
        return v
    return Const(Fraction(v))


def const(v) -> Const:
    return Const(Fraction(v))


def true_zero() -> Real:
    return TrueZero()


def pow2(exponent: int) -> Real:
    return Pow2(int(exponent))


def _ordered(x, y):
    # commutative nodes get a canonical argument order so that symbolic
    # cancellation sees a*b and b*a as the same term
    return (x, y) if str(x) <= str(y) else (y, x)


def neg(x: Real) -> Real:
    if x.exact is not None:
        return Const(-x.exact)
    if isinstance(x, Neg):
        return x.x
    return Neg(x)


def add(x: Real, y: Real) -> Real:
    if x.exact is not None and y.exact is not None:
        return Const(x.exact + y.exact)
    if x.exact == 0:
        return y
    if y.exact == 0:
        return x
    if isinstance(y, Neg) and y.x == x or isinstance(x, Neg) and x.x == y:
        return ZERO
    return Add(*_ordered(x, y))


def sub(x: Real, y: Real) -> Real:
    if x == y:
        return ZERO
    return add(x, neg(y))


def mul(x: Real, y: Real) -> Real:
    if x.exact is not None and y.exact is not None:
        return Const(x.exact * y.exact)
    for a, b in ((x, y), (y, x)):
        if a.exact == 0:
            return ZERO
        if a.exact == 1:
            return b
        if a.exact == -1:
            return neg(b)
    return Mul(*_ordered(x, y))


def inv(x: Real) -> Real:
    if x.exact is not None:
        if x.exact == 0:
            raise ZeroDivisionError("lazy division by exact zero")
        return Const(1 / x.exact)
    if isinstance(x, Inv):
        return x.x
    return Inv(x)


def div(x: Real, y: Real) -> Real:
    if x == y and not (y.exact == 0):
        return ONE
    return mul(x, inv(y))


def maximum(x: Real, y: Real) -> Real:
    if x.exact is not None and y.exact is not None:
        return Const(max(x.exact, y.exact))
    if x == y:
        return x
    return Max(*_ordered(x, y))


def _dyadic_floor(v: Fraction, k: int):
    scale = 1 << k
    lo = Fraction(math.floor(v * scale), scale)
    if lo == v:
        return (v, v)
    return (lo, lo + Fraction(1, scale))


def _magnitude(x: Real) -> Fraction:
    lo, hi = interval(x, 0)
    return max(abs(lo), abs(hi))


def _extra_bits(bound: Fraction) -> int:
    return max(1, math.ceil(bound).bit_length())


@lru_cache(maxsize=None)
def _separation(x: Real):
    """First budget at which ``x`` is bounded away from zero, and that bound."""
    for k in range(DIVISION_SEARCH_LIMIT + 1):
        lo, hi = interval(x, k)
        if lo > 0 or hi < 0:
            return k, min(abs(lo), abs(hi))
    raise LazyError(f"cannot separate {x} from zero within budget {DIVISION_SEARCH_LIMIT}")


@lru_cache(maxsize=None)
def _raw(x: Real, k: int):
    if isinstance(x, Const):
        return (x.value, x.value)
    if isinstance(x, TrueZero):
        half = Fraction(1, 1 << (k + 1))
        return (-half, half)
    if isinstance(x, Pow2):
        return _dyadic_floor(Fraction(2) ** x.exponent, k)
    if isinstance(x, Neg):
        lo, hi = interval(x.x, k)
        return (-hi, -lo)
    if isinstance(x, Add):
        a, b = interval(x.x, k + 1), interval(x.y, k + 1)
        return (a[0] + b[0], a[1] + b[1])
    if isinstance(x, Max):
        a, b = interval(x.x, k), interval(x.y, k)
        return (max(a[0], b[0]), max(a[1], b[1]))
    if isinstance(x, Mul):
        j = _extra_bits(_magnitude(x.x) + _magnitude(x.y) + 1)
        a, b = interval(x.x, k + j), interval(x.y, k + j)
        ps = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
        return (min(ps), max(ps))
    if isinstance(x, Inv):
        k0, m = _separation(x.x)
        j = _extra_bits(1 / (m * m))
        lo, hi = interval(x.x, max(k0, k + j))
        return (1 / hi, 1 / lo)
    raise TypeError(f"not a lazy real: {x!r}")


@lru_cache(maxsize=None)
def settle(x: Real, k: int) -> Real:
    """``x`` with every ``max`` whose arguments separate at budget k resolved.

    Separation persists at larger budgets because intervals are nested, so
    an exact value found here stays exact.  This is how ``max(c, 0)`` for a
    stream of known sign becomes an exact zero.
    """
    if isinstance(x, (Const, TrueZero, Pow2)):
        return x
    if isinstance(x, Neg):
        return neg(settle(x.x, k))
    if isinstance(x, Add):
        return add(settle(x.x, k), settle(x.y, k))
    if isinstance(x, Mul):
        return mul(settle(x.x, k), settle(x.y, k))
    if isinstance(x, Inv):
        y = settle(x.x, k)
        return x if y.exact == 0 else inv(y)
    if isinstance(x, Max):
        a, b = settle(x.x, k), settle(x.y, k)
        (alo, ahi), (blo, bhi) = interval(a, k), interval(b, k)
        if ahi < blo:
            return b
        if bhi < alo:
            return a
        return maximum(a, b)
    raise TypeError(f"not a lazy real: {x!r}")


def interval(x: Real, k: int):
    """Closed interval ``(lo, hi)`` of width <= 2**-k containing ``x``."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    return _raw(x, k)


def excludes_zero(x: Real, k: int) -> bool:
    lo, hi = interval(x, k)
    return lo > 0 or hi < 0


def opaque(x: Real) -> bool:
    """True when ``x`` depends on a stream that never reveals its value."""
    return x.exact is None


_NAMES = {"neg": 1, "add": 2, "mul": 2, "max": 2, "sub": 2, "inv": 1, "div": 2}


def parse(text: str) -> Real:
    """Parse the expression grammar used by :func:`str` on lazy reals.

    Grammar: ``p/q`` | ``n`` | ``true_zero`` | ``pow2(k)`` | ``neg(e)`` |
    ``add(e,e)`` | ``sub(e,e)`` | ``mul(e,e)`` | ``max(e,e)`` | ``inv(e)`` |
    ``div(e,e)``.
    """
    text = text.replace(" ", "")
    node, rest = _parse(text)
    if rest:
        raise ValueError(f"trailing input in lazy expression: {rest!r}")
    return node


def _parse(s):
    if s.startswith("true_zero"):
        return TrueZero(), s[len("true_zero"):]
    if s.startswith("pow2("):
        end = s.index(")")
        return Pow2(int(s[5:end])), s[end + 1:]
    for name, arity in _NAMES.items():
        if s.startswith(name + "("):
            args, rest = [], s[len(name) + 1:]
            for i in range(arity):
                a, rest = _parse(rest)
                args.append(a)
                sep = "," if i < arity - 1 else ")"
                if not rest.startswith(sep):
                    raise ValueError(f"expected {sep!r} in lazy expression near {rest!r}")
                rest = rest[1:]
            return _build(name, args), rest
    i = 0
    while i < len(s) and (s[i].isdigit() or s[i] in "-/"):
        i += 1
    if i == 0:
        raise ValueError(f"cannot parse lazy expression at {s!r}")
    return Const(Fraction(s[:i])), s[i:]


def _build(name, args):
    # keep parsed trees structurally faithful rather than refolding them
    if name == "neg":
        return neg(args[0])
    if name == "add":
        return add(*args)
    if name == "sub":
        return sub(*args)
    if name == "mul":
        return mul(*args)
    if name == "max":
        return maximum(*args)
    if name == "inv":
        return inv(args[0])
    return div(*args)
