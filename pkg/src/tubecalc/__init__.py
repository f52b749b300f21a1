"""tubecalc: arc combinatorics of tube categories.

Indecomposables as oriented arcs on an annulus, Hom/Ext dimensions from
crossing counts, torsion pairs and maximal rigid objects with the
bijection between them, a matrix oracle for cross-validation, and a CLI
with SVG diagrams.
"""

from .arcs import IndObj, Tube, Wing, format_obj, parse_obj, sort_key
from .homs import (
    ALEPH0,
    Aleph0,
    ExtDim,
    InfinitePairError,
    ext_dim,
    hom_dim,
    is_rigid,
    neg_crossings,
    pos_crossings,
)
from .torsion import (
    ADIC,
    CORAY,
    PRUFER,
    RAY,
    MaxRigid,
    SubcatDesc,
    TorsionPair,
    ValidationError,
    enumerate_max_rigid,
    make_desc,
    max_rigid_of,
    torsion_pair_of,
)

__all__ = [
    "IndObj",
    "Tube",
    "Wing",
    "format_obj",
    "parse_obj",
    "sort_key",
    "ALEPH0",
    "Aleph0",
    "ExtDim",
    "InfinitePairError",
    "ext_dim",
    "hom_dim",
    "is_rigid",
    "neg_crossings",
    "pos_crossings",
    "ADIC",
    "CORAY",
    "PRUFER",
    "RAY",
    "MaxRigid",
    "SubcatDesc",
    "TorsionPair",
    "ValidationError",
    "enumerate_max_rigid",
    "make_desc",
    "max_rigid_of",
    "torsion_pair_of",
]
