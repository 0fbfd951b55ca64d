import itertools

import pytest

from projext import gf

ORDERS = gf.SUPPORTED


def _order(F, a):
    n, x = 1, a
    while x != 1:
        x = F.mul(x, a)
        n += 1
    return n


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms(q):
    # a finite commutative ring with inverses and a cyclic unit group of
    # order q-1 is GF(q); that pins the tables down up to isomorphism
    F = gf.field(q)
    els = list(F.elements())
    assert els == list(range(q))
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(a, b) == F.add(a, F.neg(b))
    for a, b, c in itertools.product(els, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    for a in els[1:]:
        assert F.mul(a, F.inv(a)) == 1
    assert max(_order(F, a) for a in els[1:]) == q - 1


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_prime_fields_are_integers_mod_q(q):
    F = gf.field(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert F.add(a, b) == (a + b) % q
        assert F.mul(a, b) == (a * b) % q


def test_gf4_table():
    # x^2 = x + 1, encoded 2 = x and 3 = x + 1
    F = gf.field(4)
    assert F.mul(2, 2) == 3
    assert F.mul(2, 3) == 1
    assert F.add(2, 3) == 1


@pytest.mark.parametrize("q", [0, 1, 6, 10, 16, 17])
def test_unsupported_orders(q):
    with pytest.raises(gf.UnsupportedOrder):
        gf.field(q)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gf.field(5).inv(0)
