"""The ring of ternions T(q): upper-triangular 2x2 matrices over GF(q).

An element ``[[a, b], [0, c]]`` is stored as the coordinate triple
``(a, b, c)`` and encoded as ``a*q**2 + b*q + c``.  Every table in
:class:`RingCtx` is indexed by that encoding.

For q = 2 the elements also carry the customary labels 0..7::

    0 = (0,0,0)   1 = (1,0,1)   2 = (1,1,1)   3 = (1,1,0)
    4 = (0,0,1)   5 = (1,0,0)   6 = (0,1,0)   7 = (0,1,1)

These labels are presentation only; nothing in the core depends on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ternions.galois import FieldCtx, field_new


class LabelsUnavailable(ValueError):
    """The 0..7 labelling exists only for the order-eight ring (q = 2)."""


class Ternion(NamedTuple):
    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[0,{self.c}]]"


# label -> (a, b, c)
PAPER_LABELS: dict[int, Ternion] = {
    0: Ternion(0, 0, 0),
    1: Ternion(1, 0, 1),
    2: Ternion(1, 1, 1),
    3: Ternion(1, 1, 0),
    4: Ternion(0, 0, 1),
    5: Ternion(1, 0, 0),
    6: Ternion(0, 1, 0),
    7: Ternion(0, 1, 1),
}
_LABEL_OF: dict[Ternion, int] = {t: k for k, t in PAPER_LABELS.items()}


@dataclass(frozen=True, eq=False)
class RingCtx:
    field: FieldCtx
    elements: tuple[Ternion, ...] = field(repr=False)
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    unit_flags: np.ndarray = field(repr=False)
    I1_flags: np.ndarray = field(repr=False)
    I2_flags: np.ndarray = field(repr=False)
    J_flags: np.ndarray = field(repr=False)
    # per-encoding coordinates, shape (q**3, 3)
    coords: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def one(self) -> int:
        return self.enc(Ternion(1, 0, 1))

    zero = 0

    def enc(self, x: Ternion) -> int:
        q = self.q
        return (x[0] * q + x[1]) * q + x[2]

    def dec(self, e: int) -> Ternion:
        return self.elements[e]

    def check(self, x: Ternion) -> None:
        if len(x) != 3 or any(not 0 <= v < self.q for v in x):
            raise ValueError(f"{x!r} is not a ternion over GF({self.q})")

    def add(self, x: int, y: int) -> int:
        return int(self.add_table[x, y])

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def is_unit(self, x: int) -> bool:
        return bool(self.unit_flags[x])

    def transpose(self, x: int) -> int:
        a, b, c = self.elements[x]
        return self.enc(Ternion(c, b, a))

    def members(self, flags: np.ndarray) -> list[int]:
        return [int(e) for e in np.flatnonzero(flags)]


def ring_new(q: int) -> RingCtx:
    """Build T(q) with all operation tables and ideal memberships."""
    f = field_new(q)
    q = f.q
    n = q ** 3
    e = np.arange(n, dtype=np.int64)
    a, b, c = e // (q * q), (e // q) % q, e % q
    coords = np.stack([a, b, c], axis=1)

    def encode(a, b, c):
        return (a * q + b) * q + c

    add = encode((a[:, None] + a[None, :]) % q,
                 (b[:, None] + b[None, :]) % q,
                 (c[:, None] + c[None, :]) % q)
    # (a,b,c)(a',b',c') = (aa', ab' + bc', cc')
    mul = encode((a[:, None] * a[None, :]) % q,
                 (a[:, None] * b[None, :] + b[:, None] * c[None, :]) % q,
                 (c[:, None] * c[None, :]) % q)

    unit = (a != 0) & (c != 0)
    one = encode(1, 0, 1)
    has_inverse = ((mul == one) & (mul.T == one)).any(axis=1)
    if not np.array_equal(unit, has_inverse):
        raise AssertionError("diagonal unit test disagrees with the multiplication table")

    i1 = a == 0
    i2 = c == 0
    j = i1 & i2
    for t in (add, mul, unit, i1, i2, j, coords):
        t.setflags(write=False)
    elements = tuple(Ternion(int(x), int(y), int(z)) for x, y, z in coords)
    return RingCtx(f, elements, add, mul, unit, i1, i2, j, coords)


def t_add(ctx: RingCtx, x: Ternion, y: Ternion) -> Ternion:
    return ctx.dec(ctx.add(ctx.enc(x), ctx.enc(y)))


def t_mul(ctx: RingCtx, x: Ternion, y: Ternion) -> Ternion:
    return ctx.dec(ctx.mul(ctx.enc(x), ctx.enc(y)))


def t_is_unit(ctx: RingCtx, x: Ternion) -> bool:
    return x[0] != 0 and x[2] != 0


def t_transpose(ctx: RingCtx, x: Ternion) -> Ternion:
    """The anti-automorphism swapping the diagonal entries."""
    return Ternion(x[2], x[1], x[0])


def paper_label(ctx: RingCtx, x: Ternion) -> int:
    if ctx.q != 2:
        raise LabelsUnavailable(f"0..7 labels exist only for q=2, not q={ctx.q}")
    return _LABEL_OF[Ternion(*x)]


def paper_unlabel(ctx: RingCtx, label: int) -> Ternion:
    if ctx.q != 2:
        raise LabelsUnavailable(f"0..7 labels exist only for q=2, not q={ctx.q}")
    return PAPER_LABELS[label]


def enc_to_label(ctx: RingCtx, e: int) -> int:
    return paper_label(ctx, ctx.dec(e))


def label_to_enc(ctx: RingCtx, label: int) -> int:
    return ctx.enc(paper_unlabel(ctx, label))


def ring_tables(ctx: RingCtx) -> tuple[np.ndarray, np.ndarray]:
    """Addition and multiplication tables in canonical-encoding order."""
    return ctx.add_table, ctx.mul_table


def paper_label_tables(ctx: RingCtx) -> tuple[list[list[int]], list[list[int]]]:
    """Both tables with rows and columns indexed by the labels 0..7."""
    if ctx.q != 2:
        raise LabelsUnavailable(f"0..7 labels exist only for q=2, not q={ctx.q}")
    encs = [label_to_enc(ctx, k) for k in range(8)]
    add = [[enc_to_label(ctx, ctx.add(x, y)) for y in encs] for x in encs]
    mul = [[enc_to_label(ctx, ctx.mul(x, y)) for y in encs] for x in encs]
    return add, mul
