"""Sparse linear algebra over Q(y) on tensor powers of V = K^m."""
from ybhomology.tensor.elimination import current_rank_mode, rank, rank_eval, rank_exact, use_rank_mode
from ybhomology.tensor.linmap import LinMap, TensorIndex, compose, index_of, letters_of, place
from ybhomology.tensor.subspace import Subspace, image_basis, kernel_basis

__all__ = [
    "LinMap",
    "Subspace",
    "TensorIndex",
    "compose",
    "current_rank_mode",
    "image_basis",
    "index_of",
    "kernel_basis",
    "letters_of",
    "place",
    "rank",
    "rank_eval",
    "rank_exact",
    "use_rank_mode",
]
