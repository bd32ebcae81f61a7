"""Exact skein calculus for the Kauffman bracket and the SU(3) spider."""

from __future__ import annotations

from .basis import BasisElement, catalan, enumerate_matchings, enumerate_webs, sl3_invariant_dimension
from .diagram import Diagram, HasCrossings, ValidationError, make_diagram
from .kauffman import KauffmanParams, bracket_oracle, bracket_rewrite, kauffman_uniqueness_residuals, smooth
from .kernels import BACKEND
from .moves import MoveSite, apply_move, find_move_sites, invariance_report, random_tangle
from .ring import LaurentPoly, parse_poly
from .spider import (
    RuleSet,
    TwistSpec,
    normalized_invariant,
    reidemeister_expand_check,
    su3_identity_suite,
    su3_params,
    su3_rewrite,
    twist_conjugate,
)
from .statevector import StateVector
from .tangles import TangleBuilder, braid_closure, kink, strand
from .textformat import parse_tangle, serialize

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BasisElement", "Diagram", "HasCrossings", "KauffmanParams", "LaurentPoly", "MoveSite",
    "RuleSet", "StateVector", "TangleBuilder", "TwistSpec", "ValidationError", "apply_move",
    "braid_closure", "bracket_oracle", "bracket_rewrite", "catalan", "enumerate_matchings",
    "enumerate_webs", "find_move_sites", "invariance_report", "kauffman_uniqueness_residuals", "kink",
    "make_diagram", "normalized_invariant", "parse_poly", "parse_tangle", "random_tangle",
    "reidemeister_expand_check", "serialize", "sl3_invariant_dimension", "smooth", "strand",
    "su3_identity_suite", "su3_params", "su3_rewrite", "twist_conjugate",
]
