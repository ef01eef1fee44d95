# --- ybhomology/homology/koszul.py ---
"""Koszul complex M ⊗ Λ^k K^m and its comparison maps f_k into the one-term complex."""
from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Tuple

from ybhomology.homology.complex import ChainComplex, delta_rank
from ybhomology.homology.modules import VModuleSpec
from ybhomology.scalar import quantum_factorial
from ybhomology.tensor.linmap import LinMap, compose
from ybhomology.ybop import YBData, bracket

LOGGER = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def subsets(m: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """Increasing k-subsets of 1..m in lexicographic order."""
    return tuple(combinations(range(1, m + 1), k))


@lru_cache(maxsize=None)
def _subset_index(m: int, k: int) -> Dict[Tuple[int, ...], int]:
    return {s: i for i, s in enumerate(subsets(m, k))}


def koszul_differential(spec: VModuleSpec, k: int, d: int = 0) -> LinMap:
    """e ⊗ e_{i1}∧...∧e_{ik} -> Σ_s (-1)^{s+1} e·v_{is} ⊗ (... omit i_s ...)."""
    m = spec.m
    src_sets, tgt_index = subsets(m, k), _subset_index(m, k - 1)
    n_src, n_tgt = len(src_sets), len(tgt_index)
    entries = []
    for s_pos in range(k):
        for idx, I in enumerate(src_sets):
            J = tgt_index[I[:s_pos] + I[s_pos + 1:]]
            act = spec.action(I[s_pos], d)
            sign = 1 if s_pos % 2 == 0 else -1
            for r, col in act.columns():
                for r2, v in col.items():
                    entries.append((r2 * n_tgt + J, r * n_src + idx, v * sign))
    return LinMap.from_entries(spec.dim(d + spec.shift) * n_tgt, spec.dim(d) * n_src, entries)


def f_map(spec: VModuleSpec, yb: YBData, k: int, d: int = 0) -> LinMap:
    """e ⊗ e_I -> (1/[k]!) e ⊗ [v_I] for increasing I."""
    m = spec.m
    scale = quantum_factorial(k).inverse()
    cols = []
    for I in subsets(m, k):
        cols.append({i: v * scale for i, v in bracket(yb, I).items()})
    wedge_to_tensor = LinMap.from_columns(yb.dim(k), cols)
    return LinMap.identity(spec.dim(d)).kron(wedge_to_tensor)


def koszul_squares(spec: VModuleSpec, yb: YBData, cx: ChainComplex = None) -> Dict[str, bool]:
    """∂_k ∘ f_k = f_{k-1} ∘ d_k, for every k and every module degree in range."""
    cx = cx or ChainComplex(spec, yb)
    s = spec.shift
    degrees = range(0, spec.max_total_degree + 1) if spec.is_free else [0]
    results = {}
    for k in range(1, spec.m + 1):
        ok = True
        for d in degrees:
            if spec.is_free and d + k > spec.max_total_degree:
                continue
            lhs = compose(cx.boundary(k, d), f_map(spec, yb, k, d))
            rhs = compose(f_map(spec, yb, k - 1, d + s), koszul_differential(spec, k, d))
            if lhs != rhs:
                LOGGER.warning("Koszul square fails at k=%d, module degree %d", k, d)
                ok = False
                break
        results[f"square_{k}"] = ok
    chain = True
    for k in range(2, spec.m + 1):
        for d in degrees:
            if spec.is_free and d + k > spec.max_total_degree:
                continue
            if not compose(koszul_differential(spec, k - 1, d + s), koszul_differential(spec, k, d)).is_zero():
                chain = False
    results["koszul_d_squared_zero"] = chain
    return results


def delta_exactness(spec: VModuleSpec, yb: YBData, cx: ChainComplex = None) -> Dict[str, bool]:
    """(F ⊗ [V]_k, δ) has no homology for k >= 1 and H_0 = K in total degree 0."""
    cx = cx or ChainComplex(spec, yb)
    m = spec.m
    results = {}
    for total in range(0, spec.max_total_degree + 1):
        ok = True
        for k in range(0, min(m, total) + 1):
            d = total - k
            dim = spec.dim(d) * comb(m, k)
            h = dim - delta_rank(cx, k, d) - delta_rank(cx, k + 1, d - 1)
            expected = 1 if (k == 0 and total == 0) else 0
            if h != expected:
                LOGGER.warning("delta complex has homology %d at k=%d, total degree %d", h, k, total)
                ok = False
        results[f"total_degree_{total}"] = ok
    return results


def koszul_check(spec: VModuleSpec, yb: YBData, cx: ChainComplex = None) -> bool:
    cx = cx or ChainComplex(spec, yb)
    ok = all(koszul_squares(spec, yb, cx).values())
    if spec.is_free:
        ok = ok and all(delta_exactness(spec, yb, cx).values())
    return ok
