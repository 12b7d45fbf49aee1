"""Canonical JSON reports and DOT export.

JSON key order is fixed by construction (dicts are built in the order
below) and every list is sorted by canonical encoding, so the bytes only
depend on (q, n, side).  Top-level keys, in order::

    schema_version, q, n, side, domain, counts, degree_histogram,
    zero_tuple_degree, submodules, core, containment, coverage

``degree_histogram``/``zero_tuple_degree`` appear when a snowflake is
given and ``core`` when a core is given.
"""

from __future__ import annotations

import json

from ternions.modules import decode_entries
from ternions.ring import RingCtx, enc_to_label
from ternions.snowflake import (
    ClassificationReport,
    CoreGeometry,
    SnowflakeStructure,
    TwinReport,
)

SCHEMA_VERSION = "1"


def render_tuple(ctx: RingCtx, e: int, n: int) -> dict:
    entries = decode_entries(ctx, e, n)
    out = {"enc": e, "coords": [list(ctx.dec(x)) for x in entries]}
    if ctx.q == 2:
        out["labels"] = [enc_to_label(ctx, x) for x in entries]
    return out


def _counts(rep: ClassificationReport) -> dict:
    return {
        "total": rep.total,
        "unimodular": rep.unimodular,
        "nonunimodular_free_generators": rep.nonunimodular_free,
        "nonunimodular_nonfree": rep.nonunimodular_nonfree,
        "distinct_submodules": rep.distinct_submodules,
        "generators_per_submodule": {str(k): v for k, v in rep.generators_per_submodule.items()},
    }


def _core(ctx: RingCtx, core: CoreGeometry) -> dict:
    verdict = core.verdict
    return {
        "points": [dict(render_tuple(ctx, p, core.n), scaling_class=sorted(core.classes[p]))
                   for p in core.points],
        "lines": [list(l) for l in core.lines],
        "line_multiplicities": [core.multiplicity[l] for l in core.lines],
        "verdict": None if verdict is None else {
            "is_projective_plane": verdict.is_projective_plane,
            "order": verdict.order,
            "failures": list(verdict.failures),
        },
    }


def report_dict(ctx: RingCtx, rep: ClassificationReport,
                sf: SnowflakeStructure | None = None,
                core: CoreGeometry | None = None) -> dict:
    n = rep.n
    out: dict = {
        "schema_version": SCHEMA_VERSION,
        "q": rep.q,
        "n": n,
        "side": rep.side,
        "domain": rep.domain,
        "counts": _counts(rep),
    }
    if sf is not None:
        out["degree_histogram"] = {str(d): c for d, c in sf.histogram.items()}
        out["zero_tuple_degree"] = sf.zero_tuple_degree
    out["submodules"] = [
        {
            "canonical_generator": render_tuple(ctx, s.canonical_enc, n),
            "generators": [render_tuple(ctx, g, n) for g in s.generator_set],
            "elements": [render_tuple(ctx, e, n) for e in sorted(s.element_set)],
        }
        for s in rep.submodules
    ]
    if core is not None:
        out["core"] = _core(ctx, core)
    key = "generators_in_" + rep.side_ideal
    out["containment"] = {key: rep.generators_in_side_ideal}
    out["coverage"] = {"union_equals_ideal_power": rep.union_equals_ideal_power}
    return out


def twin_dict(ctx: RingCtx, twin: TwinReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "q": twin.q,
        "n": twin.n,
        "flags": {
            "histogram_equal": twin.histogram_equal,
            "core_points_equal": twin.core_points_equal,
            "core_lines_equal": twin.core_lines_equal,
            "transpose_duality": twin.transpose_duality,
        },
        "left": report_dict(ctx, twin.left, twin.left_snowflake, twin.left_core),
        "right": report_dict(ctx, twin.right, twin.right_snowflake, twin.right_core),
    }


def dumps(obj: dict) -> bytes:
    return (json.dumps(obj, ensure_ascii=True) + "\n").encode()


def report_json(ctx: RingCtx, report, sf=None, core=None) -> bytes:
    """Serialize a classification (optionally with snowflake/core) or twin report."""
    if isinstance(report, TwinReport):
        return dumps(twin_dict(ctx, report))
    return dumps(report_dict(ctx, report, sf, core))


def _tuple_label(ctx: RingCtx, e: int, n: int) -> str:
    entries = decode_entries(ctx, e, n)
    if ctx.q == 2:
        return "(" + ",".join(str(enc_to_label(ctx, x)) for x in entries) + ")"
    return " ".join("".join(map(str, ctx.dec(x))) for x in entries)


def export_dot(ctx: RingCtx, sf: SnowflakeStructure, core: CoreGeometry) -> bytes:
    """Bipartite submodule/tuple incidence graph in DOT syntax.

    Nodes ``S<k>`` are submodules in canonical order, nodes ``t<enc>`` the
    nonzero tuples they contain.  Layout is left to the renderer.
    """
    n = sf.n
    core_tuples = set().union(*core.classes.values()) if core.classes else set()
    lines = [
        "graph snowflake {",
        f'  graph [q={sf.q}, n={n}, side="{sf.side}"];',
    ]
    for k, s in enumerate(sf.submodules):
        lines.append(f'  S{k} [shape=box, label="S{k} {_tuple_label(ctx, s.canonical_enc, n)}"];')
    for e, d in sf.degree.items():
        kind = "core" if e in core_tuples else "peripheral"
        lines.append(f'  t{e} [label="{_tuple_label(ctx, e, n)}", degree={d}, kind={kind}];')
    for k, s in enumerate(sf.submodules):
        for e in sorted(s.element_set):
            if e:
                lines.append(f"  S{k} -- t{e};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()
