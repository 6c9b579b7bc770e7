"""Arithmetic in GF(p^e) with integer-encoded elements.

Elements of GF(p^e) are encoded as integers in [0, q): the base-p digits
of the code are the coefficients of the element in the polynomial basis,
constant term first.  The modulus is always the lexicographically least
monic irreducible polynomial of degree e over GF(p) (coefficients compared
from the constant term upward), so two fields with the same (p, e) are
bit-for-bit identical.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

MAX_ORDER = 1 << 16

# full mul/inv tables are only built below this order
_TABLE_CAP = 1 << 10


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mod(num: Tuple[int, ...], den: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    """Remainder of num modulo den, coefficients mod p, constant term first."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    while len(num) - 1 >= dd:
        if num[-1] == 0:
            num.pop()
            continue
        shift = len(num) - 1 - dd
        factor = (num[-1] * inv_lead) % p
        for i in range(dd + 1):
            num[shift + i] = (num[shift + i] - factor * den[i]) % p
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return tuple(num)


def _poly_mul(a: Tuple[int, ...], b: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return tuple(out)


def _code_to_poly(code: int, p: int) -> Tuple[int, ...]:
    digits = []
    while code:
        digits.append(code % p)
        code //= p
    return tuple(digits)


def _poly_to_code(poly: Tuple[int, ...], p: int) -> int:
    code = 0
    for c in reversed(poly):
        code = code * p + c
    return code


def _is_irreducible(poly: Tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        # monic divisor: constant..(d-1) coefficients free, leading 1
        for code in range(p ** d):
            div = list(_code_to_poly(code, p))
            div += [0] * (d - len(div))
            div.append(1)
            if not _poly_mod(poly, tuple(div), p):
                return False
    return True


class FieldSpec:
    """Immutable description of GF(p^e) plus its arithmetic.

    Construct via :func:`make_field`; direct instantiation skips the
    deterministic-modulus guarantee.
    """

    __slots__ = ("p", "e", "q", "modulus", "_mul_table", "_inv_table")

    def __init__(self, p: int, e: int, modulus: Tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        self._mul_table = None
        self._inv_table = None
        if self.q <= _TABLE_CAP:
            self._build_tables()

    def _build_tables(self) -> None:
        q = self.q
        mul = [0] * (q * q)
        inv = [0] * q
        for a in range(q):
            pa = _code_to_poly(a, self.p)
            for b in range(a, q):
                c = self._mul_poly(pa, _code_to_poly(b, self.p))
                mul[a * q + b] = c
                mul[b * q + a] = c
                if c == 1:
                    inv[a] = b
                    inv[b] = a
        self._mul_table = mul
        self._inv_table = inv

    def _mul_poly(self, pa, pb) -> int:
        prod = _poly_mul(pa, pb, self.p)
        if self.e > 1:
            prod = _poly_mod(prod, self.modulus, self.p)
        return _poly_to_code(prod, self.p)

    # -- element operations (codes in [0, q)) --

    def check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"element code {a} out of range for GF({self.q})")

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            out += ((-a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        if self.e == 1:
            return (a * b) % self.p
        return self._mul_poly(_code_to_poly(a, self.p), _code_to_poly(b, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        if self._inv_table is not None:
            return self._inv_table[a]
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 1 if n == 0 else 0
        n %= self.q - 1
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def elements(self):
        return range(self.q)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """Return GF(p^e) with the canonical (lexicographically least) modulus."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** e > MAX_ORDER:
        raise ValueError(f"field order {p**e} exceeds the cap {MAX_ORDER}")
    if e == 1:
        return FieldSpec(p, 1, (0, 1))
    for low in range(p ** e):
        coeffs = list(_code_to_poly(low, p))
        coeffs += [0] * (e - len(coeffs))
        coeffs.append(1)
        if _is_irreducible(tuple(coeffs), p):
            return FieldSpec(p, e, tuple(coeffs))
    raise AssertionError("no irreducible polynomial found")  # unreachable


def field_from_order(q: int) -> FieldSpec:
    """Return GF(q) for a prime power q."""
    if q < 2:
        raise ValueError("field order must be at least 2")
    p = 2
    while p * p <= q:
        if q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return make_field(p, e)
        p += 1
    return make_field(q, 1)
