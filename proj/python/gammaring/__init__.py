"""Finite Γ-ring workbench: instances, structure checks, maps and theorem verification."""

from ._core import (
    CapExceeded,
    GammaError,
    GammaRing,
    ParseError,
    analyze,
    builtin_instances,
    center,
    classify_map,
    enumerate_maps,
    frobenius_example,
    instance,
    parse_instance,
    random_instance,
    run_cli,
    search,
    theorem_ids,
    verify_theorem,
)

__all__ = [
    "CapExceeded",
    "GammaError",
    "GammaRing",
    "ParseError",
    "analyze",
    "builtin_instances",
    "center",
    "classify_map",
    "enumerate_maps",
    "frobenius_example",
    "instance",
    "parse_instance",
    "random_instance",
    "run_cli",
    "search",
    "theorem_ids",
    "verify_theorem",
]
