"""The verifier must catch broken implementations, not just pass a correct one."""

import numpy as np

import ternions.modules as modules
import ternions.snowflake as snowflake
from ternions import golden
from ternions.modules import Submodule, decode_entries, generate_encs, tuple_dec
from ternions.verify import verify_paper


def by_number(results):
    return {r.number: r for r in results}


def test_all_checks_pass():
    results = verify_paper()
    assert [r.number for r in results] == list(range(1, 9))
    assert all(r.ok for r in results), [r.detail for r in results if not r.ok]


def test_golden_is_self_consistent():
    assert len(golden.SUBMODULES) == golden.SUBMODULE_COUNT
    gens = [g for pair, _ in golden.SUBMODULES for g in pair]
    assert len(set(gens)) == golden.GENERATOR_COUNT
    assert all(len(s) == 8 for _, s in golden.SUBMODULES)


def test_swapped_sides_fail_check_7(monkeypatch):
    def swapped(ctx, side):
        return ctx.mul_table.T if side == "left" else ctx.mul_table

    monkeypatch.setattr(modules, "scale_table", swapped)
    monkeypatch.setattr(snowflake, "scale_table", swapped)
    results = by_number(verify_paper())
    assert not results[7].ok
    assert "left generators over I2" in results[7].detail


def test_missing_dedup_fails_check_4(monkeypatch):
    def no_dedup(ctx, n, side, gens):
        out = []
        for g in (int(x) for x in gens):
            elems = frozenset(int(x) for x in generate_encs(ctx, side, decode_entries(ctx, g, n)))
            out.append(Submodule(side, tuple_dec(ctx, g, n), elems, [g]))
        return out

    monkeypatch.setattr(snowflake, "_dedup", no_dedup)
    results = by_number(verify_paper())
    assert not results[4].ok
    assert "got 42" in results[4].detail


def test_corrupted_table_fails_check_1(monkeypatch):
    from ternions import ring

    real = ring.ring_new

    def broken(q):
        ctx = real(q)
        mul = np.array(ctx.mul_table)
        a, b = ring.label_to_enc(ctx, 2), ring.label_to_enc(ctx, 4)
        mul[a, b], mul[b, a] = mul[b, a], mul[a, b]
        object.__setattr__(ctx, "mul_table", mul)
        return ctx

    import ternions.verify as verify
    monkeypatch.setattr(verify, "ring_new", broken)
    results = by_number(verify_paper())
    assert not results[1].ok
    assert "2 x 4: expected 7, got 4" == results[1].detail
