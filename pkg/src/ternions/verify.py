"""Replay the published facts about the order-eight ternion ring.

Every expected value comes from :mod:`ternions.golden`; the library is
only ever on the "actual" side of a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from ternions import golden
from ternions.modules import decode_entries
from ternions.ring import RingCtx, enc_to_label, label_to_enc, paper_label_tables, ring_new
from ternions.snowflake import (
    classify_all,
    core_with_verdict,
    snowflake_from_submodules,
    twin_compare,
)


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str


def _labels(ctx: RingCtx, e: int) -> tuple[int, ...]:
    return tuple(enc_to_label(ctx, x) for x in decode_entries(ctx, e, 2))


def _first_diff(expected, actual) -> str:
    missing = sorted(expected - actual, key=repr)
    extra = sorted(actual - expected, key=repr)
    if missing:
        return f"expected {missing[0]} not produced"
    if extra:
        return f"unexpected {extra[0]}"
    return "sets equal"


def check_tables(ctx):
    add, mul = paper_label_tables(ctx)
    for name, want, got in (("+", golden.ADDITION, add), ("x", golden.MULTIPLICATION, mul)):
        for i in range(8):
            for j in range(8):
                if want[i][j] != got[i][j]:
                    return False, f"{i} {name} {j}: expected {want[i][j]}, got {got[i][j]}"
    return True, "addition and multiplication tables agree on all 128 cells"


def check_ideals(ctx):
    for name, want, flags in (("I1", golden.I1, ctx.I1_flags), ("I2", golden.I2, ctx.I2_flags),
                              ("J", golden.J, ctx.J_flags)):
        got = {enc_to_label(ctx, e) for e in ctx.members(flags)}
        if got != want:
            return False, f"{name}: expected {sorted(want)}, got {sorted(got)}"
    return True, f"I1={sorted(golden.I1)} I2={sorted(golden.I2)} J={sorted(golden.J)}"


def check_element_kinds(ctx):
    units, nil, idem = set(), set(), set()
    for e in range(ctx.order):
        lab = enc_to_label(ctx, e)
        if ctx.is_unit(e):
            units.add(lab)
        if ctx.mul(e, e) == e and e not in (0, ctx.one):
            idem.add(lab)
        p = e
        for _ in range(ctx.order):
            if p == 0:
                nil.add(lab)
                break
            p = ctx.mul(p, e)
    for name, want, got in (("units", golden.UNITS, units), ("nilpotents", golden.NILPOTENTS, nil),
                            ("idempotents", golden.IDEMPOTENTS, idem)):
        if got != want:
            return False, f"{name}: expected {sorted(want)}, got {sorted(got)}"
    return True, (f"units {sorted(golden.UNITS)}, nilpotents {sorted(golden.NILPOTENTS)}, "
                  f"idempotents {sorted(golden.IDEMPOTENTS)}")


def check_listing(ctx, left):
    if left.nonunimodular_free != golden.GENERATOR_COUNT:
        return False, (f"expected {golden.GENERATOR_COUNT} generators, "
                       f"got {left.nonunimodular_free}")
    want_sets = {frozenset(s) for _, s in golden.SUBMODULES}
    got_sets = {frozenset(_labels(ctx, e) for e in s.element_set) for s in left.submodules}
    if len(left.submodules) != golden.SUBMODULE_COUNT or got_sets != want_sets:
        return False, (f"expected {golden.SUBMODULE_COUNT} sets, got {len(left.submodules)} "
                       f"({len(got_sets)} distinct); {_first_diff(want_sets, got_sets)}")
    want_gens = {frozenset(s): set(g) for g, s in golden.SUBMODULES}
    for s in left.submodules:
        key = frozenset(_labels(ctx, e) for e in s.element_set)
        got = {_labels(ctx, g) for g in s.generator_set}
        if got != want_gens[key]:
            return False, f"generators of {sorted(key)}: expected {want_gens[key]}, got {got}"
    if not left.union_equals_ideal_power:
        return False, f"union of the submodules is not all {golden.I1_TRIPLE_COUNT} I1-triples"
    return True, (f"{golden.SUBMODULE_COUNT} element sets, {golden.GENERATOR_COUNT} generators, "
                  f"union = all {golden.I1_TRIPLE_COUNT} I1-triples")


def check_degrees(ctx, sf):
    by_degree: dict[int, set] = {}
    for e, d in sf.degree.items():
        by_degree.setdefault(d, set()).add(_labels(ctx, e))
    want = {9: golden.DEGREE_NINE, 3: golden.DEGREE_THREE}
    for d, triples in want.items():
        got = by_degree.get(d, set())
        if got != triples:
            return False, f"degree {d}: {_first_diff(triples, got)}"
    ones = len(by_degree.get(1, ()))
    if ones != golden.DEGREE_ONE_COUNT or set(by_degree) != {9, 3, 1}:
        return False, (f"expected {golden.DEGREE_ONE_COUNT} degree-1 triples and degrees "
                       f"{{9, 3, 1}}, got {ones} and {sorted(by_degree)}")
    if sf.zero_tuple_degree != golden.SUBMODULE_COUNT:
        return False, f"zero triple on {sf.zero_tuple_degree} submodules"
    return True, (f"{len(golden.DEGREE_NINE)} triples of degree 9, {len(golden.DEGREE_THREE)} "
                  f"of degree 3, {golden.DEGREE_ONE_COUNT} of degree 1")


def check_fano(ctx, core):
    v = core.verdict
    mult = set(core.multiplicity.values())
    points = {_labels(ctx, p) for p in core.points}
    if len(core.points) != golden.FANO_POINTS or len(core.lines) != golden.FANO_LINES:
        return False, f"{len(core.points)} points and {len(core.lines)} lines"
    if mult != {golden.FANO_LINE_MULTIPLICITY}:
        return False, f"line multiplicities {sorted(mult)}"
    if points != golden.DEGREE_NINE:
        return False, f"core points: {_first_diff(golden.DEGREE_NINE, points)}"
    if v is None or not v.is_projective_plane or v.order != golden.FANO_ORDER:
        return False, f"plane axioms failed: {v.failures[0] if v and v.failures else v}"
    return True, (f"{golden.FANO_POINTS} points, {golden.FANO_LINES} lines, each carried by "
                  f"{golden.FANO_LINE_MULTIPLICITY} submodules, projective plane of order "
                  f"{golden.FANO_ORDER}")


def check_i2_left(ctx):
    rep = classify_all(ctx, 2, "left", domain="I2")
    if rep.nonunimodular_free != 0:
        first = _labels(ctx, rep.submodules[0].canonical_enc)
        return False, f"{rep.nonunimodular_free} left generators over I2^3, e.g. {first}"
    return True, "no non-unimodular I2-triple generates a free left submodule"


def check_twin(ctx, twin):
    right = twin.right
    if right.distinct_submodules != golden.SUBMODULE_COUNT:
        return False, f"right side has {right.distinct_submodules} submodules"
    i2 = [label_to_enc(ctx, k) for k in sorted(golden.I2)]
    for s in right.submodules:
        for g in s.generator_set:
            if any(x not in i2 for x in decode_entries(ctx, g, 2)):
                return False, f"right generator {_labels(ctx, g)} not in I2^3"
    for flag in ("histogram_equal", "core_points_equal", "core_lines_equal"):
        if not getattr(twin, flag):
            return False, f"twin flag {flag} is false"
    return True, (f"right side: {golden.SUBMODULE_COUNT} submodules over I2^3, same degree "
                  f"histogram, same Fano core")


def verify_paper() -> list[CheckResult]:
    ctx = ring_new(2)
    twin = twin_compare(ctx, 2)
    left = twin.left
    sf = snowflake_from_submodules(ctx, 2, "left", left.submodules)
    core = core_with_verdict(ctx, sf)
    checks = [
        ("addition and multiplication tables", lambda: check_tables(ctx)),
        ("maximal ideals and Jacobson radical", lambda: check_ideals(ctx)),
        ("units, nilpotents, idempotents", lambda: check_element_kinds(ctx)),
        ("free left cyclic submodules", lambda: check_listing(ctx, left)),
        ("degree profile", lambda: check_degrees(ctx, sf)),
        ("Fano core", lambda: check_fano(ctx, core)),
        ("no left generators over I2", lambda: check_i2_left(ctx)),
        ("right-side twin", lambda: check_twin(ctx, twin)),
    ]
    results = []
    for i, (name, fn) in enumerate(checks, 1):
        ok, detail = fn()
        results.append(CheckResult(i, name, ok, detail))
    return results

