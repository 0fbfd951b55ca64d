"""Small Galois fields GF(q), elements encoded as integers 0..q-1.

For q = p**n the integer ``sum(c_i * p**i)`` encodes the polynomial
``sum(c_i * x**i)`` reduced modulo a fixed irreducible of degree n.
"""

from __future__ import annotations

from functools import lru_cache

# Coefficients low degree first, monic, degree n.
IRREDUCIBLE = {
    4: (1, 1, 1),        # x^2 + x + 1 over GF(2)
    8: (1, 1, 0, 1),     # x^3 + x + 1 over GF(2)
    9: (1, 0, 1),        # x^2 + 1 over GF(3)
}
SUPPORTED = (2, 3, 4, 5, 7, 8, 9, 11, 13)


class UnsupportedOrder(ValueError):
    pass


def _prime_power(q):
    for p in (2, 3, 5, 7, 11, 13):
        n, r = 0, q
        while r % p == 0:
            r //= p
            n += 1
        if r == 1 and n:
            return p, n
    raise UnsupportedOrder(f"unsupported field order {q}")


def _digits(v, p, n):
    out = []
    for _ in range(n):
        out.append(v % p)
        v //= p
    return out


def _undigits(ds, p):
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


class GF:
    """Arithmetic in GF(q) via precomputed tables."""

    def __init__(self, q: int):
        if q not in SUPPORTED:
            raise UnsupportedOrder(f"unsupported field order {q}; choose one of {SUPPORTED}")
        self.q = q
        self.p, self.n = _prime_power(q)
        self._add = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._slow_mul(a, b) for b in range(q)] for a in range(q)]
        self._neg = [next(b for b in range(q) if self._add[a][b] == 0) for a in range(q)]
        self._inv = [None] + [next(b for b in range(1, q) if self._mul[a][b] == 1) for a in range(1, q)]

    def _slow_add(self, a, b):
        p, n = self.p, self.n
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, n), _digits(b, p, n))], p)

    def _slow_mul(self, a, b):
        p, n = self.p, self.n
        if n == 1:
            return a * b % p
        x, y = _digits(a, p, n), _digits(b, p, n)
        prod = [0] * (2 * n - 1)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                prod[i + j] = (prod[i + j] + xi * yj) % p
        mod = IRREDUCIBLE[self.q]
        for d in range(len(prod) - 1, n - 1, -1):
            c = prod[d]
            if c:
                for i, m in enumerate(mod):
                    prod[d - n + i] = (prod[d - n + i] - c * m) % p
        return _undigits(prod[:n], p)

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
