from ._ehig import (
    canonical_model,
    exactly_hittable,
    harary_model,
    min_membership,
    recognize,
)

__all__ = [
    "canonical_model",
    "exactly_hittable",
    "harary_model",
    "min_membership",
    "recognize",
]
