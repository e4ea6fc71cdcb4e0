"""Neutrosophic multi sets and relations, with a seeded law checker."""

from .core import (
    FILL,
    DimensionError,
    DomainError,
    MultiValue,
    NeutroTriple,
    NmError,
    NmSet,
    RangeError,
    addition,
    align_dimension,
    cardinality,
    complement,
    intersection,
    multiplication,
    nm_equal,
    nm_subset,
    union,
)
from .io import SchemaError, parse, serialize
from .relation import (
    ClosureError,
    ContainmentError,
    NmRelation,
    RelationContext,
    align_relation,
    cartesian_product,
    cartesian_square,
    check_containment,
    closure_with_steps,
    compose,
    inverse,
    is_equivalence,
    is_reflexive,
    is_symmetric,
    is_transitive,
    power,
    rel_addition,
    rel_equal,
    rel_intersection,
    rel_multiplication,
    rel_subset,
    rel_union,
    transitive_closure,
)

__version__ = "0.1.0"
