"""Rauzy induction on permutations and generalized permutations.

Enumeration of Rauzy classes and diagrams, suspension data over linear
involutions, stratum and component invariants of the suspended flat
surfaces, and exhaustive verification of the class-count structure.
"""
from .combinat import (
    GenPerm,
    PermKind,
    format_perm,
    is_irreducible,
    parse,
    reduce,
    reduce_with_map,
    row_swap,
)
from .classes import (
    RauzyDiagram,
    TheoremReport,
    enumerate_irreducible,
    export_dot,
    extended_class,
    rauzy_class,
    same_class_bfs,
    same_class_fast,
    verify_main_theorem,
)
from .induction import (
    MoveLabel,
    OrbitTrace,
    classify_step,
    orbit,
    r0,
    r1,
    rv_step,
    trace_jsonl,
)
from .invariants import (
    ComponentLabel,
    Profile,
    Stratum,
    StratumKind,
    component_label,
    is_hyperelliptic_component,
    marked_order,
    parse_stratum,
    singularity_profile,
    spin_parity,
    stratum,
)
from .suspension import (
    SuspensionDatum,
    SuspensionPolygon,
    build_polygon,
    check_suspension,
    find_suspension,
    geometric_profile,
    polygon_json,
    polygon_svg,
    random_suspension,
)

__all__ = [
    "GenPerm",
    "PermKind",
    "format_perm",
    "is_irreducible",
    "parse",
    "reduce",
    "reduce_with_map",
    "row_swap",
    "RauzyDiagram",
    "TheoremReport",
    "enumerate_irreducible",
    "export_dot",
    "extended_class",
    "rauzy_class",
    "same_class_bfs",
    "same_class_fast",
    "verify_main_theorem",
    "MoveLabel",
    "OrbitTrace",
    "classify_step",
    "orbit",
    "r0",
    "r1",
    "rv_step",
    "trace_jsonl",
    "ComponentLabel",
    "Profile",
    "Stratum",
    "StratumKind",
    "component_label",
    "is_hyperelliptic_component",
    "marked_order",
    "parse_stratum",
    "singularity_profile",
    "spin_parity",
    "stratum",
    "SuspensionDatum",
    "SuspensionPolygon",
    "build_polygon",
    "check_suspension",
    "find_suspension",
    "geometric_profile",
    "polygon_json",
    "polygon_svg",
    "random_suspension",
]

__version__ = "0.1.0"
