"""Exact-arithmetic toolkit for rank-24 even unimodular lattices.

Assembles the 23 such lattices with roots from bundled glue data, builds
the rootless one from each glue codeword via closed-form linear forms,
certifies the result, and cross-checks everything against an independent
rank-26 hyperbolic oracle.  All accept/reject decisions use exact integer
and rational arithmetic.
"""

from .exact import LatticeDesc, lll_reduce
from .enumerate import short_vectors, vectors_within
from .rootsys import ADEType, ade, build_component
from .niemeier import (
    NiemeierLattice,
    assemble_niemeier,
    canonical_representative,
    load_all,
    load_glue_data,
)
from .hyperbolic import (
    DeepHoleInput,
    DeepHoleReport,
    deep_hole_checks,
    derive_deep_hole_input,
    enumerate_section_classes,
    oracle_agreement,
    weyl_vector_LN,
)
from .leech import (
    ConstructedLattice,
    certify_leech,
    construct_leech,
    corollary_zero,
    positive_form,
)

__version__ = "1.0.0"

__all__ = [
    "ADEType",
    "ConstructedLattice",
    "DeepHoleInput",
    "DeepHoleReport",
    "LatticeDesc",
    "NiemeierLattice",
    "ade",
    "assemble_niemeier",
    "build_component",
    "canonical_representative",
    "certify_leech",
    "construct_leech",
    "corollary_zero",
    "deep_hole_checks",
    "derive_deep_hole_input",
    "enumerate_section_classes",
    "lll_reduce",
    "load_all",
    "load_glue_data",
    "oracle_agreement",
    "positive_form",
    "short_vectors",
    "vectors_within",
    "weyl_vector_LN",
]
