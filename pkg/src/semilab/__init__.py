"""Finite semigroups: T_n, IS_n, local subsemigroups aSa, variants S^a,
Green's relations, egg-box diagrams and isomorphism search."""

from .elements import (
    PartialPermutation,
    Transformation,
    compose,
    invert,
    kernel_partition,
    parse_one_line,
    power,
    stabiliser_index,
    stable_image,
)
from .green import eggbox, eggbox_profile, green_classes, idempotents, is_regular
from .iso import find_isomorphism, fingerprint, verify_morphism
from .semigroup import (
    FiniteSemigroup,
    closure_from_generators,
    full_transformation_monoid,
    local_subsemigroup,
    predicted_local_order,
    restrict_to_subset,
    symmetric_inverse_monoid,
    variant,
)

__version__ = "0.1.0"

__all__ = [
    "PartialPermutation",
    "Transformation",
    "compose",
    "invert",
    "kernel_partition",
    "parse_one_line",
    "power",
    "stabiliser_index",
    "stable_image",
    "eggbox",
    "eggbox_profile",
    "green_classes",
    "idempotents",
    "is_regular",
    "find_isomorphism",
    "fingerprint",
    "verify_morphism",
    "FiniteSemigroup",
    "closure_from_generators",
    "full_transformation_monoid",
    "local_subsemigroup",
    "predicted_local_order",
    "restrict_to_subset",
    "symmetric_inverse_monoid",
    "variant",
]
