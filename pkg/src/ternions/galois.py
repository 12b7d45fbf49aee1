"""Table-driven arithmetic in the prime field GF(q).

Residues are plain ints in ``0..q-1``.  All three operation tables are
built once when the context is created, so lookups in the enumeration
code are simple array indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class NonPrimeModulus(ValueError):
    """Raised for a modulus that is not a prime (prime powers included)."""


class ZeroInverse(ZeroDivisionError):
    """Raised when asking for the inverse of 0."""


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, eq=False)
class FieldCtx:
    q: int
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    # inv_table[0] is a -1 sentinel
    inv_table: np.ndarray = field(repr=False)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return int(self.inv_table[a])

    def elements(self) -> range:
        return range(self.q)


def field_new(q: int) -> FieldCtx:
    """Build the context for GF(q); ``q`` must be prime."""
    if not isinstance(q, (int, np.integer)) or not is_prime(int(q)):
        raise NonPrimeModulus(
            f"q={q} is not prime; only prime fields GF(p) are supported")
    q = int(q)
    r = np.arange(q, dtype=np.int64)
    add = (r[:, None] + r[None, :]) % q
    mul = (r[:, None] * r[None, :]) % q
    inv = np.full(q, -1, dtype=np.int64)
    for a in range(1, q):
        inv[a] = pow(a, q - 2, q)
    for t in (add, mul, inv):
        t.setflags(write=False)
    return FieldCtx(q, add, mul, inv)


def field_add(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.add(a, b)


def field_mul(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.mul(a, b)


def field_inv(ctx: FieldCtx, a: int) -> int:
    return ctx.inv(a)
