from .identities import dagger_identity_report, verify_dagger_identities
from .multivector import Multivector, lie_bracket, object_array
from .sampling import random_dense, random_rational, random_sparse
from .signature import (
    Signature,
    as_signature,
    blade_indices,
    blade_label,
    blade_mask,
    blade_order,
    blade_product,
    block_mask,
    grade,
    inverse_sign,
    quaternion_type,
    reversion_sign,
    square_sign,
)

__all__ = [
    "Multivector",
    "Signature",
    "as_signature",
    "blade_indices",
    "blade_label",
    "blade_mask",
    "blade_order",
    "blade_product",
    "block_mask",
    "dagger_identity_report",
    "grade",
    "inverse_sign",
    "lie_bracket",
    "object_array",
    "quaternion_type",
    "random_dense",
    "random_rational",
    "random_sparse",
    "reversion_sign",
    "square_sign",
    "verify_dagger_identities",
]
