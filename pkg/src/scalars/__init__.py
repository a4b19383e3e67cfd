from .complex_rational import ComplexRational
from .quaternion import Quaternion, hamilton_product
from .rings import (
    Ring,
    check_finite,
    coerce_scalar,
    conjugate,
    decode_scalar,
    encode_scalar,
    format_scalar,
    imag_part,
    inverse,
    is_zero,
    join_rings,
    magnitude,
    one,
    real_part,
    ring_of,
    zero,
)

__all__ = [
    "ComplexRational",
    "Quaternion",
    "hamilton_product",
    "Ring",
    "check_finite",
    "coerce_scalar",
    "conjugate",
    "decode_scalar",
    "encode_scalar",
    "format_scalar",
    "imag_part",
    "inverse",
    "is_zero",
    "join_rings",
    "magnitude",
    "one",
    "real_part",
    "ring_of",
    "zero",
]
