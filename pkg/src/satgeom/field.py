"""Arithmetic in GF(q) for prime powers q.

Elements are encoded as integers in 0..q-1, read as base-p digit vectors:
the base-p digit i of the code is the coefficient of x^i in the polynomial
representation over GF(p).  Multiplication uses exp/log tables built from
the smallest generator of the multiplicative group, so memory stays O(q).
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByZero, NotPrimePower


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    p = q
    for d in range(2, int(q**0.5) + 1):
        if q % d == 0:
            p = d
            break
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"q={q} has more than one prime factor")
    return p, m


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_powers(lo: int, hi: int) -> list[int]:
    """All prime powers q with lo <= q <= hi, ascending."""
    out = []
    for q in range(max(2, lo), hi + 1):
        try:
            factor_prime_power(q)
        except NotPrimePower:
            continue
        out.append(q)
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); a polynomial is a list of coefficients,
# index = degree, no trailing zeros except [0] itself


def _poly_trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _poly_trim(out)


def _poly_mod(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and any(f):
        if f[-1] == 0:
            f.pop()
            continue
        shift = len(f) - 1 - dg
        factor = (f[-1] * inv_lead) % p
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - factor * gi) % p
        f = _poly_trim(f)
        if len(f) == 1 and f[0] == 0:
            break
    return _poly_trim(f)


def _is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg(f)/2."""
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for c in range(p**d):
            g = [(c // p**i) % p for i in range(d)] + [1]
            if not any(_poly_mod(f, g, p)):
                return False
    return True


def _canonical_modulus(p: int, m: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Coefficient tuples are compared high-degree-first, which is the same as
    scanning the low-coefficient block in ascending base-p integer order.
    """
    if m == 1:
        return [0, 1]  # x
    for c in range(p**m):
        f = [(c // p**i) % p for i in range(m)] + [1]
        if _is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class FieldSpec:
    """Immutable arithmetic tables for GF(q); safe for concurrent reads."""

    def __init__(self, q: int):
        p, m = factor_prime_power(q)
        self.q = q
        self.p = p
        self.m = m
        self.modulus = _canonical_modulus(p, m)
        self._build_tables()

    # -- construction -------------------------------------------------------

    def _code_to_poly(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def _poly_to_code(self, f: list[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(f))

    def _mul_raw(self, a: int, b: int) -> int:
        """Multiplication by polynomial arithmetic; used only to bootstrap."""
        if self.m == 1:
            return (a * b) % self.p
        prod = _poly_mul(self._code_to_poly(a), self._code_to_poly(b), self.p)
        return self._poly_to_code(_poly_mod(prod, self.modulus, self.p))

    def _order(self, g: int, factors: list[int]) -> bool:
        n = self.q - 1
        for r in factors:
            e, x = n // r, 1
            base = g
            while e:
                if e & 1:
                    x = self._mul_raw(x, base)
                base = self._mul_raw(base, base)
                e >>= 1
            if x == 1:
                return False
        return True

    def _build_tables(self):
        q = self.q
        if q == 2:
            gen = 1
        else:
            factors = prime_factors(q - 1)
            gen = next(g for g in range(2, q) if self._order(g, factors))
        self.generator = gen
        exp = np.zeros(2 * (q - 1), dtype=np.int32)
        log = np.zeros(q, dtype=np.int32)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, gen)
        exp[q - 1 :] = exp[: q - 1]
        self._exp = exp
        self._log = log
        self._inv = np.zeros(q, dtype=np.int32)
        self._inv[1:] = exp[(q - 1) - log[1:]]

    # -- scalar operations ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out, mult = 0, 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out, mult = 0, 1
        for _ in range(self.m):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return int(self._inv[a])

    def power(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    # -- vectorized operations on numpy arrays of element codes --------------
    # (treat inputs as read-only; results may alias an input when the
    # operation is the identity, e.g. neg over characteristic 2)

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        a = np.asarray(a)
        b = np.asarray(b)
        out = ((a + b) % p).astype(np.int32)
        mult = 1
        for _ in range(self.m - 1):
            a = a // p
            b = b // p
            mult *= p
            out += ((a + b) % p).astype(np.int32) * mult
        return out

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.asarray(a)
        if self.m == 1:
            return (-np.asarray(a)) % self.p
        p = self.p
        a = np.asarray(a)
        out = ((-a) % p).astype(np.int32)
        mult = 1
        for _ in range(self.m - 1):
            a = a // p
            mult *= p
            out += ((-a) % p).astype(np.int32) * mult
        return out

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if self.m == 1:
            return (a * b) % self.p
        prod = self._exp[self._log[a] + self._log[b]]
        return np.where((a != 0) & (b != 0), prod, 0)

    def inv_arr(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("0 has no multiplicative inverse")
        return self._inv[a]

    def __repr__(self):
        return f"FieldSpec(q={self.q}, p={self.p}, m={self.m})"


def make_field(q: int) -> FieldSpec:
    """Build GF(q) with the canonical modulus; raises NotPrimePower."""
    return FieldSpec(q)
