"""Exact neighbor complexes of finite and lattice-periodic point sets.

The package is organized in layers: exact geometry primitives, poset
staging, finite-set enumeration, integer linear solving, coset arithmetic,
truncation-free periodic enumeration, and monomial resolutions.  A thin CLI
(`scarf`) exposes the same operations on JSON documents.
"""

from .complexes import Face, LabeledComplex, build_complex
from .diophantine import (
    CosetSystem,
    Lattice,
    coset_constraints,
    minimal_orthant_points,
    points_below,
    points_in_box,
    positivity_check,
)
from .errors import (
    GenericityError,
    InputError,
    InternalError,
    PositivityError,
    RadiusError,
    ScarfError,
)
from .finite import (
    FinitePointSet,
    GenericityReport,
    enumerate_complex,
    face_witness,
    is_face,
    is_generic,
    neighbors,
    strict_dominator,
)
from .geometry import Box, Orthant, Point, Relation, all_orthants, compare, cuboid, join, meet
from .intsolve import minimal_natural_solutions, smith_normal_form
from .periodic import (
    CompletenessReport,
    FaceOrbit,
    PeriodicSet,
    QuotientResult,
    StarResult,
    certified_quotient,
    certified_star,
    exists_strictly_below,
    neighbors_of_zero,
    quotient_complex,
    star_at,
    star_faces,
    validate_periodic_set,
)
from .posets import FinitePoset, Layering, dickson_layers, filter_by_downset, minimal_elements
from .resolution import ChainCheck, Resolution, build_resolution, differentials, verify_chain

__version__ = "0.1.0"

__all__ = [
    "Box",
    "ChainCheck",
    "CompletenessReport",
    "CosetSystem",
    "Face",
    "FaceOrbit",
    "FinitePointSet",
    "FinitePoset",
    "GenericityError",
    "GenericityReport",
    "InputError",
    "InternalError",
    "LabeledComplex",
    "Lattice",
    "Layering",
    "Orthant",
    "PeriodicSet",
    "Point",
    "PositivityError",
    "QuotientResult",
    "RadiusError",
    "Relation",
    "Resolution",
    "ScarfError",
    "StarResult",
    "all_orthants",
    "build_complex",
    "build_resolution",
    "certified_quotient",
    "certified_star",
    "compare",
    "coset_constraints",
    "cuboid",
    "dickson_layers",
    "differentials",
    "enumerate_complex",
    "exists_strictly_below",
    "face_witness",
    "filter_by_downset",
    "is_face",
    "is_generic",
    "join",
    "meet",
    "minimal_elements",
    "minimal_natural_solutions",
    "minimal_orthant_points",
    "neighbors",
    "neighbors_of_zero",
    "points_below",
    "points_in_box",
    "positivity_check",
    "quotient_complex",
    "smith_normal_form",
    "star_at",
    "star_faces",
    "strict_dominator",
    "validate_periodic_set",
    "verify_chain",
]
