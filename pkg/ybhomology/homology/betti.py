# --- ybhomology/homology/betti.py ---
"""Closed Betti numbers of a finite module from the ranks r_k = dim M[V]_k."""
from __future__ import annotations

import logging
from math import comb
from typing import List, Optional, Sequence

from ybhomology.errors import InvariantViolation, ModuleError
from ybhomology.homology.koszul import _subset_index, subsets
from ybhomology.homology.modules import VModuleSpec, action_map
from ybhomology.kernel import kernel_dims_recurrence
from ybhomology.tensor.elimination import rank
from ybhomology.tensor.linmap import LinMap, compose, hstack, vstack
from ybhomology.ybop import YBData, bracket_space

LOGGER = logging.getLogger(__name__)


def bracket_action(spec: VModuleSpec, yb: YBData, k: int) -> LinMap:
    """(R_M ⊗ id^{k-1}) on M ⊗ [V]_k, one column per e_r ⊗ bracket."""
    brackets = bracket_space(yb, k).space.basis
    left = action_map(spec).kron(yb.identity(k - 1))
    return compose(left, LinMap.identity(spec.l).kron(brackets))


def r_ranks(spec: VModuleSpec, yb: YBData) -> List[int]:
    if spec.is_free:
        raise ModuleError("r-ranks are defined for finite modules only", "kind")
    ranks = [rank(bracket_action(spec, yb, k)) for k in range(1, spec.m + 1)]
    for k, r in enumerate(ranks, start=1):
        if not 0 <= r <= spec.l * comb(spec.m, k):
            raise InvariantViolation("r_rank_bounds", f"r_{k} = {r}")
    return ranks


def stacked_presentation(spec: VModuleSpec, k: int) -> LinMap:
    """Block matrix acting on row vectors: block (I, I - i_s) = (-1)^{s+1} A_{i_s}."""
    l, m = spec.l, spec.m
    rows_of, cols_of = subsets(m, k), _subset_index(m, k - 1)
    block_rows = []
    for I in rows_of:
        blocks = [LinMap.zero(l, l)] * len(cols_of)
        for s in range(k):
            sign = 1 if s % 2 == 0 else -1
            blocks[cols_of[I[:s] + I[s + 1:]]] = spec.A[I[s] - 1].scale(sign)
        block_rows.append(hstack(blocks))
    return vstack(block_rows)


def r_ranks_stacked(spec: VModuleSpec) -> List[int]:
    return [rank(stacked_presentation(spec, k)) for k in range(1, spec.m + 1)]


def betti_from_ranks(l: int, m: int, r: Sequence[int], n: int) -> int:
    """l·m^n - r_1 M(n) - Σ_{k=1}^{m-1} (r_k + r_{k+1}) M(n-k) - r_m M(n-m)."""
    M = kernel_dims_recurrence(m, max(n, 0))

    def at(j: int) -> int:
        return M[j] if 0 <= j <= n else 0

    value = l * m ** n - r[0] * at(n)
    for k in range(1, m):
        value -= (r[k - 1] + r[k]) * at(n - k)
    value -= r[m - 1] * at(n - m)
    return value


def betti_formula(spec: VModuleSpec, yb: YBData, n: int, r: Optional[Sequence[int]] = None) -> int:
    r = list(r) if r is not None else r_ranks(spec, yb)
    return betti_from_ranks(spec.l, spec.m, r, n)
