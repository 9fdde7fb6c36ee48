"""Arithmetic for small prime-power finite fields GF(p^e).

Field elements are plain integers in ``[0, q)``: the element
``a_0 + a_1 x + ... + a_{e-1} x^{e-1}`` is encoded as the base-p integer
with ``a_0`` least significant.  All arithmetic goes through tables
precomputed at context creation, so a :class:`FieldCtx` is immutable and
safe to share; the context is passed explicitly wherever elements are
combined.

The reducing modulus is the lexicographically smallest monic irreducible
polynomial of degree e over GF(p), where coefficient vectors are compared
as base-p integers with the constant term least significant.  This rule is
deterministic and needs no external polynomial tables.  For e = 1 it
degenerates to the polynomial x, i.e. plain mod-p arithmetic.

:class:`ExtensionField` applies the same construction one level up: a
degree-t power-basis extension of an existing GF(q), with elements encoded
base q.  It is the workhorse behind field-reduction spreads, where
V(n, q) is read as V(n/t, q^t) and the power basis 1, y, ..., y^{t-1}
supplies the GF(q)-coordinates.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DivisionByZero, NotPrimePower, TooLarge

FieldElement = int

DEFAULT_MAX_ORDER = 16
EXTENSION_MAX_ORDER = 4096
_TABLE_LIMIT = 512  # largest order for which op tables are materialized


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"field order must be >= 2, got {q}")
    p = None
    for d in range(2, q + 1):
        if d * d > q:
            p = q  # q itself is prime
            break
        if q % d == 0:
            p = d
            break
    assert p is not None
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


class _PrimeField:
    """Mod-p scalars; bootstraps polynomial arithmetic for FieldCtx."""

    def __init__(self, p: int):
        self.q = p

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def mul(self, a, b):
        return (a * b) % self.q

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return pow(a, self.q - 2, self.q)


# -- polynomial helpers over an arbitrary scalar field ----------------------
#
# Polynomials are tuples of scalar encodings, constant term first.  Leading
# zeros are permitted in intermediate values; _trim removes them.


def _trim(poly):
    d = len(poly)
    while d > 0 and poly[d - 1] == 0:
        d -= 1
    return poly[:d]


def _poly_mul(field, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return tuple(out)


def _poly_rem(field, a, m):
    """Remainder of a modulo the monic polynomial m."""
    rem = list(a)
    dm = len(m) - 1
    for i in range(len(rem) - 1, dm - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        rem[i] = 0
        for j in range(dm):
            rem[i - dm + j] = field.sub(rem[i - dm + j], field.mul(c, m[j]))
    return tuple(rem[:dm])


def _is_irreducible(field, m) -> bool:
    """Trial division of the monic polynomial m by all lower-degree monics."""
    deg = len(m) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    q = field.q
    for d in range(1, deg // 2 + 1):
        for code in range(q**d):
            div = _decode_poly(code, q, d) + (1,)
            if not any(_trim(_poly_rem(field, m, div))):
                return False
    return True


def _decode_poly(code: int, q: int, length: int):
    digits = []
    for _ in range(length):
        digits.append(code % q)
        code //= q
    return tuple(digits)


def _smallest_irreducible(field, deg: int):
    """Lexicographically smallest monic irreducible of the given degree.

    Candidates are compared as base-q integers of their coefficient vector,
    constant term least significant, which is exactly ascending-code order.
    """
    q = field.q
    for code in range(q**deg):
        cand = _decode_poly(code, q, deg) + (1,)
        if _is_irreducible(field, cand):
            return cand
    raise AssertionError(f"no irreducible of degree {deg} over GF({q})")


class FieldCtx:
    """GF(p^e) with table-driven arithmetic.  Immutable after construction."""

    def __init__(self, q: int, max_order: int = DEFAULT_MAX_ORDER):
        p, e = factor_prime_power(q)
        if q > max_order:
            raise TooLarge(f"field order {q} exceeds ceiling {max_order}")
        self.p = p
        self.e = e
        self.q = q
        prime = _PrimeField(p)
        self.modulus = _smallest_irreducible(prime, e)
        assert _is_irreducible(prime, self.modulus)

        # element <-> coefficient tuple
        decode = [_decode_poly(v, p, e) for v in range(q)]
        encode = {c: v for v, c in enumerate(decode)}

        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        neg = [0] * q
        inv = [0] * q
        for a in range(q):
            ca = decode[a]
            neg[a] = encode[tuple(prime.sub(0, x) for x in ca)]
            for b in range(a, q):
                cb = decode[b]
                s = encode[tuple(prime.add(x, y) for x, y in zip(ca, cb))]
                add[a][b] = add[b][a] = s
                prod = _poly_rem(prime, _poly_mul(prime, ca, cb), self.modulus)
                prod = prod + (0,) * (e - len(prod))
                m = encode[prod]
                mul[a][b] = mul[b][a] = m
                if m == 1:
                    inv[a], inv[b] = b, a
        self.add_table = tuple(tuple(r) for r in add)
        self.mul_table = tuple(tuple(r) for r in mul)
        self.neg_table = tuple(neg)
        self.inv_table = tuple(inv)

    # -- element operations --------------------------------------------
    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.add_table[a][b]

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul_table[a][b]

    def neg(self, a: FieldElement) -> FieldElement:
        return self.neg_table[a]

    def inv(self, a: FieldElement) -> FieldElement:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return self.inv_table[a]

    def coeffs(self, a: FieldElement) -> tuple[int, ...]:
        """Polynomial coefficients of a, constant term first."""
        return _decode_poly(a, self.p, self.e)

    def from_coeffs(self, coeffs) -> FieldElement:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.q == other.q
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.q, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_new(q: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldCtx:
    """Context for GF(q) with the canonical modulus.  Cached per (q, ceiling)."""
    return FieldCtx(q, max_order=max_order)


class ExtensionField:
    """Degree-t power-basis extension GF(q^t) of a base GF(q).

    Elements are integers in [0, q^t) whose base-q digits are the
    coordinates over the power basis 1, y, ..., y^{t-1}; digit i is the
    coefficient of y^i.  The modulus is selected by the same rule as
    FieldCtx, one level up.
    """

    def __init__(self, base: FieldCtx, t: int, max_order: int = EXTENSION_MAX_ORDER):
        if t < 1:
            raise NotPrimePower(f"extension degree must be >= 1, got {t}")
        self.base = base
        self.t = t
        self.order = base.q**t
        if self.order > max_order:
            raise TooLarge(
                f"extension order {base.q}^{t} exceeds ceiling {max_order}"
            )
        self.modulus = _smallest_irreducible(base, t)
        self._tables = self.order <= _TABLE_LIMIT
        if self._tables:
            n = self.order
            mul = [[0] * n for _ in range(n)]
            inv = [0] * n
            for a in range(n):
                ca = self.coords(a)
                for b in range(a, n):
                    prod = _poly_rem(base, _poly_mul(base, ca, self.coords(b)), self.modulus)
                    m = self.from_coords(prod + (0,) * (t - len(prod)))
                    mul[a][b] = mul[b][a] = m
                    if m == 1:
                        inv[a], inv[b] = b, a
            self._mul = tuple(tuple(r) for r in mul)
            self._inv = tuple(inv)

    def coords(self, a: int) -> tuple[FieldElement, ...]:
        """Base-field coordinates of a over the power basis (length t)."""
        return _decode_poly(a, self.base.q, self.t)

    def from_coords(self, coords) -> int:
        v = 0
        for c in reversed(coords):
            v = v * self.base.q + c
        return v

    def add(self, a: int, b: int) -> int:
        base = self.base
        return self.from_coords(
            tuple(base.add(x, y) for x, y in zip(self.coords(a), self.coords(b)))
        )

    def mul(self, a: int, b: int) -> int:
        if self._tables:
            return self._mul[a][b]
        prod = _poly_rem(self.base, _poly_mul(self.base, self.coords(a), self.coords(b)), self.modulus)
        return self.from_coords(prod + (0,) * (self.t - len(prod)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        if self._tables:
            return self._inv[a]
        # a^(order-2) by square and multiply
        result, power, k = 1, a, self.order - 2
        while k:
            if k & 1:
                result = self.mul(result, power)
            power = self.mul(power, power)
            k >>= 1
        return result

    def __repr__(self):
        return f"GF({self.base.q}^{self.t})"
