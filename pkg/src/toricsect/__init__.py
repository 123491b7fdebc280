"""Toric multisections of 4-manifolds: Farey-graph loops, invariants and classification."""
from .boundary import Boundary3Manifold, Plumbing, boundary, cf_lens_oracle, plumbing
from .classify import ConnSumType, blow_up, central_cover, classify, insert_backtrack, sum_s2s2
from .curves import (
    CurveParams,
    ShadowDiagram,
    branched_cover_params,
    curve_params,
    cyclic_cover_genus,
    shadow_diagram,
)
from .diagram import (
    ToricLoop,
    ToricPath,
    are_conjugate,
    canonical_form,
    conjugate,
    lift,
    mirror,
    normalize_start,
    reverse,
    rotate,
    validate_loop,
    validate_path,
)
from .enumeration import count_definite, enumerate_definite, triangulation_count
from .errors import ToricError
from .invariants import InvariantReport, intersection_form, report, signature
from .lattice import Slope, UnimodularMatrix, pairing, parse_slope

__version__ = "0.1.0"

__all__ = [
    "Boundary3Manifold", "ConnSumType", "CurveParams", "InvariantReport", "Plumbing",
    "ShadowDiagram", "Slope", "ToricError", "ToricLoop", "ToricPath", "UnimodularMatrix",
    "are_conjugate", "blow_up", "boundary", "branched_cover_params", "canonical_form",
    "central_cover", "cf_lens_oracle", "classify", "conjugate", "count_definite",
    "curve_params", "cyclic_cover_genus", "enumerate_definite", "insert_backtrack",
    "intersection_form", "lift", "mirror", "normalize_start", "pairing", "parse_slope",
    "plumbing", "report", "reverse", "rotate", "shadow_diagram", "signature", "sum_s2s2",
    "triangulation_count", "validate_loop", "validate_path",
]
