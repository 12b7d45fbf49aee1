"""Tuples over T(q) and the cyclic submodules they generate.

A tuple ``(r_1, ..., r_{n+1})`` is encoded as a base-``q**3`` integer
from its entry encodings, first entry most significant.  Left scaling
sends ``r_i`` to ``alpha * r_i``, right scaling to ``r_i * alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

import numpy as np

from ternions.ring import RingCtx, Ternion

Side = Literal["left", "right"]
LEFT: Side = "left"
RIGHT: Side = "right"
SIDES: tuple[Side, Side] = (LEFT, RIGHT)


class ModTuple(tuple):
    """An (n+1)-tuple of ternions."""

    def __new__(cls, entries: Iterable[Sequence[int]]):
        items = tuple(Ternion(*x) for x in entries)
        if len(items) < 2:
            raise ValueError("a module tuple needs at least 2 entries (n >= 1)")
        return super().__new__(cls, items)

    @property
    def n(self) -> int:
        return len(self) - 1

    def __repr__(self) -> str:
        return "ModTuple(" + ", ".join(map(str, self)) + ")"


@dataclass(frozen=True)
class UnimodWitness:
    # x_1..x_{n+1} with sum r_i x_i = 1
    witnesses: ModTuple


@dataclass(eq=False)
class Submodule:
    side: Side
    canonical_generator: ModTuple
    element_set: frozenset[int] = field(repr=False)
    generator_set: list[int] = field(default_factory=list, repr=False)

    @property
    def canonical_enc(self) -> int:
        return min(self.generator_set)


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def entry_encs(ctx: RingCtx, t: Sequence[Sequence[int]]) -> list[int]:
    for x in t:
        ctx.check(x)
    return [ctx.enc(x) for x in t]


def encode_entries(ctx: RingCtx, entries: Sequence[int]) -> int:
    base = ctx.order
    e = 0
    for x in entries:
        e = e * base + int(x)
    return e


def decode_entries(ctx: RingCtx, e: int, n: int) -> list[int]:
    base = ctx.order
    out = [0] * (n + 1)
    for i in range(n, -1, -1):
        e, out[i] = divmod(e, base)
    return out


def tuple_enc(ctx: RingCtx, t: Sequence[Sequence[int]]) -> int:
    return encode_entries(ctx, entry_encs(ctx, t))


def tuple_dec(ctx: RingCtx, e: int, n: int) -> ModTuple:
    return ModTuple(ctx.dec(x) for x in decode_entries(ctx, e, n))


def tuple_count(ctx: RingCtx, n: int) -> int:
    return ctx.order ** (n + 1)


def scale_table(ctx: RingCtx, side: Side) -> np.ndarray:
    """``T[alpha, x]`` is the product of ``x`` by ``alpha`` on ``side``."""
    _check_side(side)
    return ctx.mul_table if side == LEFT else ctx.mul_table.T


def scale(ctx: RingCtx, side: Side, alpha: Sequence[int], t: Sequence[Sequence[int]]) -> ModTuple:
    _check_side(side)
    ctx.check(alpha)
    al = ctx.enc(alpha)
    if side == LEFT:
        return ModTuple(ctx.dec(ctx.mul(al, x)) for x in entry_encs(ctx, t))
    return ModTuple(ctx.dec(ctx.mul(x, al)) for x in entry_encs(ctx, t))


def generate_encs(ctx: RingCtx, side: Side, entries: Sequence[int]) -> np.ndarray:
    """Encodings of ``alpha * t`` for every alpha, indexed by alpha."""
    table = scale_table(ctx, side)
    cols = table[:, np.asarray(entries, dtype=np.int64)]
    out = np.zeros(ctx.order, dtype=np.int64)
    for i in range(cols.shape[1]):
        out = out * ctx.order + cols[:, i]
    return out


def submodule_generate(ctx: RingCtx, side: Side, gen: Sequence[Sequence[int]]) -> frozenset[int]:
    """The cyclic submodule generated by ``gen``, as a set of tuple encodings."""
    return frozenset(int(x) for x in generate_encs(ctx, side, entry_encs(ctx, gen)))


def is_free_encs(ctx: RingCtx, side: Side, entries: Sequence[int]) -> bool:
    table = scale_table(ctx, side)
    seen = set()
    for al in range(ctx.order):
        img = tuple(int(table[al, x]) for x in entries)
        if img in seen:
            return False
        seen.add(img)
    return True


def is_free(ctx: RingCtx, side: Side, gen: Sequence[Sequence[int]]) -> bool:
    """True iff alpha -> alpha*gen (or gen*alpha) is injective."""
    _check_side(side)
    return is_free_encs(ctx, side, entry_encs(ctx, gen))


def is_unimodular_fast(ctx: RingCtx, t: Sequence[Sequence[int]]) -> bool:
    """Some entry has a != 0 and some entry has c != 0.

    Equivalently, ``t`` lies neither in I1^{n+1} nor in I2^{n+1}.
    """
    for x in t:
        ctx.check(x)
    return any(x[0] != 0 for x in t) and any(x[2] != 0 for x in t)


def unimodular_mask(ctx: RingCtx, entries: np.ndarray) -> np.ndarray:
    """Vectorized :func:`is_unimodular_fast` over rows of entry encodings."""
    return (~ctx.I1_flags[entries]).any(axis=1) & (~ctx.I2_flags[entries]).any(axis=1)


def reachable_sums(ctx: RingCtx, entries: Sequence[int]) -> np.ndarray:
    """``sum r_i x_i`` for every witness tuple x, flattened in canonical order."""
    prods = [ctx.mul_table[r, :] for r in entries]
    acc = prods[0]
    for p in prods[1:]:
        acc = ctx.add_table[acc[..., None], p]
    return acc.reshape(-1)


def is_unimodular_oracle(ctx: RingCtx, t: Sequence[Sequence[int]]) -> UnimodWitness | None:
    """Brute-force search for x with ``sum r_i x_i = 1``.

    Scans all ``q**(3(n+1))`` candidate witnesses; the first hit in
    canonical encoding order is returned.  Only sensible for small q, n.
    """
    entries = entry_encs(ctx, t)
    sums = reachable_sums(ctx, entries)
    hits = np.flatnonzero(sums == ctx.one)
    if hits.size == 0:
        return None
    return UnimodWitness(tuple_dec(ctx, int(hits[0]), len(entries) - 1))


def transpose_tuple(ctx: RingCtx, e: int, n: int) -> int:
    return encode_entries(ctx, [ctx.transpose(x) for x in decode_entries(ctx, e, n)])
