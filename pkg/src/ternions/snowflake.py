"""Exhaustive classification of tuples and the snowflake geometry.

Pipeline::

    classify_all  -> counts + the free cyclic submodules generated by
                     non-unimodular tuples (deduplicated)
    build_snowflake -> tuple -> number-of-containing-submodules map
    extract_core  -> points = scaling classes of nonzero all-radical tuples,
                     lines  = the core points each submodule carries
    verify_plane  -> projective plane axioms on the core

The scan over all ``q**(3(n+1))`` tuples is split into contiguous
encoding ranges.  Chunks may run in worker processes; results are merged
in chunk order so every output is independent of the worker count.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ternions.modules import (
    LEFT,
    RIGHT,
    ModTuple,
    Side,
    Submodule,
    _check_side,
    decode_entries,
    encode_entries,
    generate_encs,
    scale_table,
    transpose_tuple,
    tuple_dec,
    unimodular_mask,
)
from ternions.ring import RingCtx, ring_new

DEFAULT_BUDGET = 10 ** 8
MAX_CHUNK = 1 << 18
MIN_CHUNK = 1 << 10

DOMAINS = ("I1", "I2", "J")


class BudgetExceeded(RuntimeError):
    """The requested instance has more tuples than the enumeration budget."""


class DegenerateCore(RuntimeError):
    """A submodule carries no core point, or splits a scaling class."""


def default_workers() -> int:
    return os.cpu_count() or 1


# --------------------------------------------------------------------------
# Reports
# --------------------------------------------------------------------------

@dataclass
class ClassificationReport:
    q: int
    n: int
    side: Side
    domain: str | None
    total: int
    unimodular: int
    nonunimodular_free: int
    nonunimodular_nonfree: int
    submodules: list[Submodule] = field(repr=False)
    generators_in_I1: bool
    generators_in_I2: bool
    union_equals_ideal_power: bool

    @property
    def distinct_submodules(self) -> int:
        return len(self.submodules)

    @property
    def generators_per_submodule(self) -> dict[int, int]:
        """Generator count -> number of submodules having that many."""
        return dict(sorted(Counter(len(s.generator_set) for s in self.submodules).items()))

    @property
    def side_ideal(self) -> str:
        return "I1" if self.side == LEFT else "I2"

    @property
    def generators_in_side_ideal(self) -> bool:
        return self.generators_in_I1 if self.side == LEFT else self.generators_in_I2


@dataclass
class SnowflakeStructure:
    q: int
    n: int
    side: Side
    submodules: list[Submodule] = field(repr=False)
    # nonzero tuple encoding -> number of submodules containing it
    degree: dict[int, int] = field(repr=False)
    zero_tuple_degree: int = 0

    @property
    def histogram(self) -> dict[int, int]:
        """Degree -> number of nonzero tuples, highest degree first."""
        return dict(sorted(Counter(self.degree.values()).items(), reverse=True))


@dataclass
class PlaneVerdict:
    is_projective_plane: bool
    order: int | None
    failures: list[str] = field(default_factory=list)


@dataclass
class CoreGeometry:
    q: int
    n: int
    side: Side
    # normalized representative encodings, ascending
    points: list[int]
    # representative -> every tuple encoding in its scaling class
    classes: dict[int, frozenset[int]] = field(repr=False)
    # each line is an ascending tuple of representatives; lines ascending
    lines: list[tuple[int, ...]]
    multiplicity: dict[tuple[int, ...], int]
    # submodule index -> its line
    carried: list[tuple[int, ...]] = field(repr=False)
    verdict: PlaneVerdict | None = None


@dataclass
class TwinReport:
    q: int
    n: int
    left: ClassificationReport
    right: ClassificationReport
    left_snowflake: SnowflakeStructure = field(repr=False)
    right_snowflake: SnowflakeStructure = field(repr=False)
    left_core: CoreGeometry = field(repr=False)
    right_core: CoreGeometry = field(repr=False)
    histogram_equal: bool
    core_points_equal: bool
    core_lines_equal: bool
    transpose_duality: bool

    @property
    def all_equal(self) -> bool:
        return (self.histogram_equal and self.core_points_equal
                and self.core_lines_equal and self.transpose_duality)


# --------------------------------------------------------------------------
# Exhaustive scan
# --------------------------------------------------------------------------

def _alphabet(ctx: RingCtx, domain: str | None) -> np.ndarray:
    if domain is None:
        return np.arange(ctx.order, dtype=np.int64)
    flags = {"I1": ctx.I1_flags, "I2": ctx.I2_flags, "J": ctx.J_flags}.get(domain)
    if flags is None:
        raise ValueError(f"domain must be one of {DOMAINS} or None, got {domain!r}")
    return np.flatnonzero(flags).astype(np.int64)


def _free_mask(ctx: RingCtx, side: Side, entries: np.ndarray) -> np.ndarray:
    # alpha*r = beta*r iff (alpha-beta)*r = 0, so injective <=> no nonzero
    # alpha annihilates every entry
    table = scale_table(ctx, side)
    killed = np.zeros(len(entries), dtype=bool)
    for al in range(1, ctx.order):
        killed |= (table[al][entries] == 0).all(axis=1)
    return ~killed


@lru_cache(maxsize=None)
def _cached_ring(q: int) -> RingCtx:
    return ring_new(q)


def _scan_chunk(task):
    q, n, side, alphabet, start, stop = task
    ctx = _cached_ring(q)
    alphabet = np.asarray(alphabet, dtype=np.int64)
    k = len(alphabet)
    idx = np.arange(start, stop, dtype=np.int64)
    entries = np.empty((len(idx), n + 1), dtype=np.int64)
    for i in range(n, -1, -1):
        idx, digit = np.divmod(idx, k)
        entries[:, i] = alphabet[digit]
    uni = unimodular_mask(ctx, entries)
    cand = entries[~uni]
    free = _free_mask(ctx, side, cand)
    gens = np.zeros(int(free.sum()), dtype=np.int64)
    for col in cand[free].T:
        gens = gens * ctx.order + col
    return int(uni.sum()), gens, int((~free).sum())


def _scan(ctx: RingCtx, n: int, side: Side, domain: str | None, budget: int, workers: int):
    if n < 1:
        raise ValueError(f"module rank n must be >= 1, got {n}")
    _check_side(side)
    alphabet = _alphabet(ctx, domain)
    total = len(alphabet) ** (n + 1)
    if total > budget:
        raise BudgetExceeded(
            f"{total} tuples exceed the enumeration budget of {budget} (q={ctx.q}, n={n})")
    alpha_t = tuple(int(x) for x in alphabet)
    # a few chunks per worker; the merge below does not depend on the split
    chunk = max(MIN_CHUNK, min(MAX_CHUNK, -(-total // (4 * workers))))
    tasks = [(ctx.q, n, side, alpha_t, s, min(s + chunk, total))
             for s in range(0, total, chunk)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            parts = list(pool.map(_scan_chunk, tasks))
    else:
        parts = [_scan_chunk(t) for t in tasks]
    uni = sum(p[0] for p in parts)
    nonfree = sum(p[2] for p in parts)
    gens = np.concatenate([p[1] for p in parts]) if parts else np.zeros(0, np.int64)
    return total, uni, nonfree, gens


def _dedup(ctx: RingCtx, n: int, side: Side, gens: np.ndarray) -> list[Submodule]:
    subs: list[Submodule] = []
    owner: dict[int, int] = {}
    for g in (int(x) for x in gens):
        # a free generator g inside submodule S spans all q^3 elements of S,
        # so R g = S and g belongs to exactly one collected submodule
        k = owner.get(g)
        if k is None:
            entries = decode_entries(ctx, g, n)
            elems = frozenset(int(x) for x in generate_encs(ctx, side, entries))
            k = len(subs)
            subs.append(Submodule(side, tuple_dec(ctx, g, n), elems, []))
            for e in elems:
                owner[e] = k
        subs[k].generator_set.append(g)
    # generators arrive in ascending order, so first generator is canonical
    subs.sort(key=lambda s: s.generator_set[0])
    return subs


def _all_in(ctx: RingCtx, n: int, encs, flags: np.ndarray) -> bool:
    return all(flags[x] for e in encs for x in decode_entries(ctx, e, n))


def classify_all(ctx: RingCtx, n: int, side: Side, *, domain: str | None = None,
                 budget: int = DEFAULT_BUDGET, workers: int = 1) -> ClassificationReport:
    """Classify every tuple of R^{n+1} (or of D^{n+1} for an ideal ``domain``).

    Each tuple is unimodular, non-unimodular and free (a generator), or
    non-unimodular and not free.  Generators are grouped into the distinct
    submodules they generate.
    """
    total, uni, nonfree, gens = _scan(ctx, n, side, domain, budget, workers)
    subs = _dedup(ctx, n, side, gens)
    ideal = ctx.I1_flags if side == LEFT else ctx.I2_flags
    ideal_size = int(ideal.sum())
    union: set[int] = set()
    for s in subs:
        union |= s.element_set
    covered = (bool(subs) and len(union) == ideal_size ** (n + 1)
               and _all_in(ctx, n, union, ideal))
    return ClassificationReport(
        q=ctx.q, n=n, side=side, domain=domain, total=total,
        unimodular=uni, nonunimodular_free=len(gens), nonunimodular_nonfree=nonfree,
        submodules=subs,
        generators_in_I1=_all_in(ctx, n, gens, ctx.I1_flags),
        generators_in_I2=_all_in(ctx, n, gens, ctx.I2_flags),
        union_equals_ideal_power=covered,
    )


def collect_submodules(ctx: RingCtx, n: int, side: Side, *, budget: int = DEFAULT_BUDGET,
                       workers: int = 1) -> list[Submodule]:
    return classify_all(ctx, n, side, budget=budget, workers=workers).submodules


# --------------------------------------------------------------------------
# Snowflake and core
# --------------------------------------------------------------------------

def snowflake_from_submodules(ctx: RingCtx, n: int, side: Side,
                              subs: list[Submodule]) -> SnowflakeStructure:
    counts: Counter[int] = Counter()
    for s in subs:
        counts.update(s.element_set)
    zero = counts.pop(0, 0)
    degree = dict(sorted(counts.items()))
    return SnowflakeStructure(ctx.q, n, side, subs, degree, zero)


def build_snowflake(ctx: RingCtx, n: int, side: Side, *, budget: int = DEFAULT_BUDGET,
                    workers: int = 1) -> SnowflakeStructure:
    subs = collect_submodules(ctx, n, side, budget=budget, workers=workers)
    return snowflake_from_submodules(ctx, n, side, subs)


def core_classes(ctx: RingCtx, n: int) -> dict[int, frozenset[int]]:
    """Scaling classes of nonzero all-radical tuples, keyed by representative.

    A radical element is ``(0, b, 0)``; a class is ``{lambda * v}`` for
    lambda in GF(q)*, and the representative has first nonzero b equal to 1.
    """
    q = ctx.q

    def tup(bs):
        return encode_entries(ctx, [ctx.enc((0, b, 0)) for b in bs])

    classes = {}
    for bs in itertools.product(range(q), repeat=n + 1):
        if not any(bs) or next(b for b in bs if b) != 1:
            continue
        classes[tup(bs)] = frozenset(tup([lam * b % q for b in bs]) for lam in range(1, q))
    return dict(sorted(classes.items()))


def extract_core(ctx: RingCtx, sf: SnowflakeStructure) -> CoreGeometry:
    classes = core_classes(ctx, sf.n)
    carried: list[tuple[int, ...]] = []
    for k, s in enumerate(sf.submodules):
        line = []
        for rep, members in classes.items():
            inside = members & s.element_set
            if inside and inside != members:
                raise DegenerateCore(f"submodule S{k} splits the scaling class of {rep}")
            if inside:
                line.append(rep)
        if not line:
            raise DegenerateCore(f"submodule S{k} contains no core point")
        carried.append(tuple(line))
    multiplicity = dict(sorted(Counter(carried).items()))
    return CoreGeometry(ctx.q, sf.n, sf.side, list(classes), classes,
                        list(multiplicity), multiplicity, carried)


def verify_plane(core: CoreGeometry, q: int) -> PlaneVerdict:
    """Check the projective plane axioms of order ``q`` on the core."""
    points = list(core.points)
    lines = [frozenset(l) for l in core.lines]
    pset = set(points)
    failures: list[str] = []
    want = q * q + q + 1
    if len(points) != want:
        failures.append(f"point count {len(points)} != {want}")
    if len(lines) != want:
        failures.append(f"line count {len(lines)} != {want}")
    if len(set(lines)) != len(lines):
        failures.append("repeated line")
    for l in lines:
        if not l <= pset:
            failures.append(f"line {sorted(l)} has points outside the point set")
        if len(l) != q + 1:
            failures.append(f"line {sorted(l)} has {len(l)} points, expected {q + 1}")
    on = {p: [i for i, l in enumerate(lines) if p in l] for p in points}
    for p in points:
        if len(on[p]) != q + 1:
            failures.append(f"point {p} is on {len(on[p])} lines, expected {q + 1}")
    for p, r in itertools.combinations(points, 2):
        k = len(set(on[p]) & set(on[r]))
        if k != 1:
            failures.append(f"points {p},{r} lie on {k} common lines, expected 1")
    for l, m in itertools.combinations(lines, 2):
        k = len(l & m)
        if k != 1:
            failures.append(f"lines {sorted(l)},{sorted(m)} meet in {k} points, expected 1")
    if not _has_quadrangle(points, lines):
        failures.append("no quadrangle (four points, no three collinear)")
    ok = not failures
    return PlaneVerdict(ok, q if ok else None, failures)


def _has_quadrangle(points, lines) -> bool:
    def collinear(*ps):
        return any(all(p in l for p in ps) for l in lines)

    for quad in itertools.combinations(points, 4):
        if not any(collinear(*t) for t in itertools.combinations(quad, 3)):
            return True
    return False


def core_with_verdict(ctx: RingCtx, sf: SnowflakeStructure) -> CoreGeometry:
    core = extract_core(ctx, sf)
    if sf.n == 2:
        core.verdict = verify_plane(core, ctx.q)
    return core


# --------------------------------------------------------------------------
# Twins
# --------------------------------------------------------------------------

def transpose_duality(ctx: RingCtx, n: int, left: list[Submodule],
                      right: list[Submodule]) -> bool:
    """Entrywise transpose maps the left submodules onto the right ones."""
    right_sets = {s.element_set for s in right}
    images = {frozenset(transpose_tuple(ctx, e, n) for e in s.element_set) for s in left}
    return len(left) == len(right) and images == right_sets


def twin_compare(ctx: RingCtx, n: int, *, budget: int = DEFAULT_BUDGET,
                 workers: int = 1) -> TwinReport:
    reports, flakes, cores = {}, {}, {}
    for side in (LEFT, RIGHT):
        reports[side] = classify_all(ctx, n, side, budget=budget, workers=workers)
        flakes[side] = snowflake_from_submodules(ctx, n, side, reports[side].submodules)
        cores[side] = core_with_verdict(ctx, flakes[side])
    return TwinReport(
        q=ctx.q, n=n, left=reports[LEFT], right=reports[RIGHT],
        left_snowflake=flakes[LEFT], right_snowflake=flakes[RIGHT],
        left_core=cores[LEFT], right_core=cores[RIGHT],
        histogram_equal=flakes[LEFT].histogram == flakes[RIGHT].histogram,
        core_points_equal=cores[LEFT].points == cores[RIGHT].points,
        core_lines_equal=cores[LEFT].lines == cores[RIGHT].lines,
        transpose_duality=transpose_duality(ctx, n, reports[LEFT].submodules,
                                            reports[RIGHT].submodules),
    )


__all__ = [
    "BudgetExceeded", "ClassificationReport", "CoreGeometry", "DegenerateCore",
    "ModTuple", "PlaneVerdict", "SnowflakeStructure", "TwinReport",
    "build_snowflake", "classify_all", "collect_submodules", "core_classes",
    "core_with_verdict", "extract_core", "snowflake_from_submodules",
    "transpose_duality", "twin_compare", "verify_plane", "DEFAULT_BUDGET",
]
