"""Ternion rings over GF(q), their free cyclic submodules, and snowflake geometries."""

from ternions.galois import FieldCtx, NonPrimeModulus, ZeroInverse, field_new
from ternions.ring import LabelsUnavailable, RingCtx, Ternion, ring_new
from ternions.modules import LEFT, RIGHT, ModTuple, Submodule
from ternions.snowflake import (
    BudgetExceeded,
    ClassificationReport,
    CoreGeometry,
    DegenerateCore,
    PlaneVerdict,
    SnowflakeStructure,
    TwinReport,
    build_snowflake,
    classify_all,
    collect_submodules,
    extract_core,
    twin_compare,
    verify_plane,
)

__all__ = [
    "FieldCtx", "NonPrimeModulus", "ZeroInverse", "field_new",
    "LabelsUnavailable", "RingCtx", "Ternion", "ring_new",
    "LEFT", "RIGHT", "ModTuple", "Submodule",
    "BudgetExceeded", "ClassificationReport", "CoreGeometry", "DegenerateCore",
    "PlaneVerdict", "SnowflakeStructure", "TwinReport",
    "build_snowflake", "classify_all", "collect_submodules", "extract_core",
    "twin_compare", "verify_plane",
]
