from .builder import (
    base_case,
    build_representation,
    check_clifford_relations,
    transform_increase,
    transform_shift4,
    transform_swap,
)
from .cache import RepresentationCache, get_representation, get_representation_cache
from .representation import (
    AdditionalSignature,
    RepClass,
    Representation,
    additional_signature,
    represent,
    unrepresent,
)

__all__ = [
    "AdditionalSignature",
    "RepClass",
    "Representation",
    "RepresentationCache",
    "additional_signature",
    "base_case",
    "build_representation",
    "check_clifford_relations",
    "get_representation",
    "get_representation_cache",
    "represent",
    "transform_increase",
    "transform_shift4",
    "transform_swap",
    "unrepresent",
]
