"""Exact characters and tensor product coefficients for A_n and E7."""

from e7tensor._core import (  # noqa: F401
    E7TensorError,
    cartan_matrix,
    char_poly1,
    char_value,
    dim,
    e7_to_a7,
    orbit_decompose,
    orbit_size,
    simple_reflect,
    subdominants,
    tensor_brute,
    tensor_decompose,
    validate,
    weyl_vector,
)

__all__ = [
    "E7TensorError",
    "cartan_matrix",
    "char_poly1",
    "char_value",
    "dim",
    "e7_to_a7",
    "orbit_decompose",
    "orbit_size",
    "simple_reflect",
    "subdominants",
    "tensor_brute",
    "tensor_decompose",
    "validate",
    "weyl_vector",
]
