"""kfour: the complex K-theory ring of a 4-dimensional CW complex.

On a 4-complex, a stable vector bundle class is determined by its virtual
rank and its two Chern classes, and every pair of even cohomology classes
occurs.  This package takes the even cohomology ring (H^2, H^4 and the cup
pairing between them) as exact input data and computes the K-group's ring
structure in those coordinates: canonical class representation, arithmetic,
the isomorphism type of the reduced and full K-groups, and brute-force
verification of the defining relations.

All arithmetic is exact (arbitrary-precision integers); every value is
immutable and safe to share across threads.
"""

from .abelian import (
    Element,
    FgGroup,
    GroupStructureReport,
    InfiniteGroupError,
    IntMatrix,
    group_from_relations,
    smith_normal_form,
)
from .cohomology import (
    CohomologyRing,
    CupForm,
    InvalidRingError,
    ValidationIssue,
    ValidationReport,
    validate_ring,
)
from .dsl import ParseError, eval_expr, parse_ring, serialize_ring
from .kclasses import (
    KClass,
    MixedRingError,
    choose2,
    decompose,
    integer_class,
    k_add,
    k_mul,
    k_neg,
    k_pow,
    k_scale,
    line_class,
    rank2_class,
    reduced_part,
)
from .oracle import (
    Counterexample,
    OracleComparison,
    RelationCheck,
    VerificationReport,
    oracle_compare,
    oracle_reduced_group,
    verify_relations,
    verify_ring_axioms,
)
from .structure import full_k_structure, reduced_k_structure

__version__ = "0.1.0"

__all__ = [
    "CohomologyRing",
    "Counterexample",
    "CupForm",
    "Element",
    "FgGroup",
    "GroupStructureReport",
    "InfiniteGroupError",
    "IntMatrix",
    "InvalidRingError",
    "KClass",
    "MixedRingError",
    "OracleComparison",
    "ParseError",
    "RelationCheck",
    "ValidationIssue",
    "ValidationReport",
    "VerificationReport",
    "choose2",
    "decompose",
    "eval_expr",
    "full_k_structure",
    "group_from_relations",
    "integer_class",
    "k_add",
    "k_mul",
    "k_neg",
    "k_pow",
    "k_scale",
    "line_class",
    "oracle_compare",
    "oracle_reduced_group",
    "parse_ring",
    "rank2_class",
    "reduced_k_structure",
    "reduced_part",
    "serialize_ring",
    "smith_normal_form",
    "validate_ring",
    "verify_relations",
    "verify_ring_axioms",
]
