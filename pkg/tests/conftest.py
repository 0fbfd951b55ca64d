from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from projext import lazy
from projext.backends import FiniteBackend, LazyBackend, RationalBackend
from projext.plane import Plane

settings.register_profile("repo", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture
def Q():
    return Plane(RationalBackend())


@pytest.fixture
def R():
    return Plane(LazyBackend())


@pytest.fixture(params=[2, 3, 4, 5])
def finite(request):
    return Plane(FiniteBackend(request.param))


def rationals(height=50):
    return st.builds(Fraction, st.integers(-height, height), st.integers(1, height))


def points(height=50):
    return st.tuples(rationals(height), rationals(height))


@st.composite
def lines(draw, plane=None, height=50):
    plane = plane or Plane()
    a, b, c = draw(rationals(height)), draw(rationals(height)), draw(rationals(height))
    if a == 0 and b == 0:
        b = Fraction(1)
    return plane.normalize_line(a, b, c)


def true_value(x):
    """The real number a lazy tree denotes, computed exactly."""
    if isinstance(x, lazy.Const):
        return x.value
    if isinstance(x, lazy.TrueZero):
        return Fraction(0)
    if isinstance(x, lazy.Pow2):
        return Fraction(2) ** x.exponent
    if isinstance(x, lazy.Neg):
        return -true_value(x.x)
    if isinstance(x, lazy.Add):
        return true_value(x.x) + true_value(x.y)
    if isinstance(x, lazy.Mul):
        return true_value(x.x) * true_value(x.y)
    if isinstance(x, lazy.Max):
        return max(true_value(x.x), true_value(x.y))
    if isinstance(x, lazy.Inv):
        return 1 / true_value(x.x)
    raise TypeError(x)
