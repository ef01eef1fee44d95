# --- ybhomology/homology/modules.py ---
"""Coefficient modules: finite (l; A_1..A_m) with right action e_r·A_i, or the free
polynomial module graded by degree."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ybhomology.errors import InvariantViolation, ModuleError, WallConditionError
from ybhomology.scalar import RatFunc
from ybhomology.tensor.linmap import LinMap, compose
from ybhomology.ybop import YBData

LOGGER = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def monomials(m: int, d: int) -> Tuple[Tuple[int, ...], ...]:
    """Degree-d monomials of K[v_1..v_m] as sorted letter tuples."""
    return tuple(combinations_with_replacement(range(1, m + 1), d))


@lru_cache(maxsize=None)
def _monomial_index(m: int, d: int) -> Dict[Tuple[int, ...], int]:
    return {mono: i for i, mono in enumerate(monomials(m, d))}


@dataclass(frozen=True)
class VModuleSpec:
    kind: str
    m: int
    l: int = 0
    A: Tuple[LinMap, ...] = ()
    max_total_degree: int = 6
    name: str = ""

    @property
    def is_free(self) -> bool:
        return self.kind == "free"

    @property
    def shift(self) -> int:
        """Module degree gained by one application of the action."""
        return 1 if self.is_free else 0

    def dim(self, d: int = 0) -> int:
        if self.is_free:
            return comb(d + self.m - 1, self.m - 1) if d >= 0 else 0
        return self.l

    def action(self, i: int, d: int = 0) -> LinMap:
        """v_i acting on M_d as a column-convention map M_d -> M_{d+shift}."""
        if self.is_free:
            return _free_action(self.m, i, d)
        return self.A[i - 1].transpose()


@lru_cache(maxsize=None)
def _free_action(m: int, i: int, d: int) -> LinMap:
    target = _monomial_index(m, d + 1)
    entries = [(target[tuple(sorted(mono + (i,)))], j, 1) for j, mono in enumerate(monomials(m, d))]
    return LinMap.from_entries(len(target), len(monomials(m, d)), entries)


def finite_module(A: Sequence[Sequence[Sequence[object]]], name: str = "") -> VModuleSpec:
    """Build and shape-check a finite module from m nested l x l entry lists."""
    if not A:
        raise ModuleError("at least one action matrix is required", "A")
    l = len(A[0])
    mats = []
    for idx, rows in enumerate(A, start=1):
        if len(rows) != l or any(len(r) != l for r in rows):
            raise ModuleError(f"A_{idx} must be {l}x{l}", f"A[{idx - 1}]")
        mats.append(LinMap.from_dense([[RatFunc.coerce(x) for x in r] for r in rows]))
    return VModuleSpec(kind="finite", m=len(mats), l=l, A=tuple(mats), name=name)


def free_module(m: int, max_total_degree: int = 6) -> VModuleSpec:
    return VModuleSpec(kind="free", m=m, max_total_degree=max_total_degree, name="free")


def action_map(spec: VModuleSpec, d: int = 0) -> LinMap:
    """R_M : M_d ⊗ V -> M_{d+shift}; column r*m + (i-1) is e_r·v_i."""
    m = spec.m
    src = spec.dim(d)
    tgt = spec.dim(d + spec.shift)
    columns = {}
    for i in range(1, m + 1):
        act = spec.action(i, d)
        for r, col in act.columns():
            columns[r * m + (i - 1)] = col
    return LinMap(tgt, src * m, columns)


def noncommuting_pairs(spec: VModuleSpec) -> List[Tuple[int, int]]:
    if spec.is_free:
        return []
    return [(i, j) for i in range(1, spec.m + 1) for j in range(i + 1, spec.m + 1)
            if compose(spec.A[i - 1], spec.A[j - 1]) != compose(spec.A[j - 1], spec.A[i - 1])]


def wall_condition_holds(spec: VModuleSpec, yb: YBData, d: int = 0) -> bool:
    """R_M∘(R_M⊗id) = R_M∘(R_M⊗id)∘(id_M⊗R) on M_d ⊗ V ⊗ V."""
    m = spec.m
    inner = action_map(spec, d).kron(LinMap.identity(m))
    outer = action_map(spec, d + spec.shift)
    lhs = compose(outer, inner)
    rhs = compose(lhs, LinMap.identity(spec.dim(d)).kron(yb.R))
    return lhs == rhs


def validate_module(spec: VModuleSpec, yb: YBData) -> bool:
    """Wall condition at operator level and pairwise commutativity; the two must agree."""
    if spec.m != yb.m:
        raise ModuleError(f"module has m={spec.m} but the operator has m={yb.m}", "m")
    if spec.is_free:
        # M_d ⊗ V ⊗ V reaches degree d + 2
        degrees = range(0, max(spec.max_total_degree - 2, 0) + 1)
        return all(wall_condition_holds(spec, yb, d) for d in degrees)
    for idx, a in enumerate(spec.A, start=1):
        if a.shape != (spec.l, spec.l):
            raise ModuleError(f"A_{idx} has shape {a.shape}, expected {spec.l}x{spec.l}", f"A[{idx - 1}]")
    wall = wall_condition_holds(spec, yb)
    commuting = not noncommuting_pairs(spec)
    if wall != commuting:
        raise InvariantViolation("wall_commutativity", f"wall={wall} commuting={commuting}")
    return wall


def require_valid_module(spec: VModuleSpec, yb: YBData) -> None:
    if not validate_module(spec, yb):
        pairs = noncommuting_pairs(spec) or [(0, 0)]
        raise WallConditionError(pairs[0])


# -- randomized trials ------------------------------------------------------------

def _random_rationals(rng: np.random.Generator, shape, bound: int = 3, max_den: int = 4) -> np.ndarray:
    """Object array of Fractions with numerators in [-bound, bound] and denominators in [1, max_den]."""
    nums = rng.integers(-bound, bound + 1, size=shape)
    dens = rng.integers(1, max_den + 1, size=shape)
    return np.vectorize(lambda a, b: Fraction(int(a), int(b)), otypes=[object])(nums, dens)


def random_finite_module(m: int, l: int, commuting: bool, rng: np.random.Generator) -> VModuleSpec:
    """Random rational l x l actions; commuting ones are polynomials in a single random matrix."""
    if commuting:
        base = _random_rationals(rng, (l, l))
        powers = [np.eye(l, dtype=object), base, base @ base]
        mats = [sum(c * p for c, p in zip(_random_rationals(rng, 3, bound=2), powers)) for _ in range(m)]
    else:
        if m < 2:
            raise ValueError("a single action matrix always commutes")
        while True:
            mats = [_random_rationals(rng, (l, l)) for _ in range(m)]
            if any((mats[i] @ mats[j] != mats[j] @ mats[i]).any()
                   for i in range(m) for j in range(i + 1, m)):
                break
    return finite_module([[list(row) for row in mat] for mat in mats], name="random")


def wall_condition_trials(yb: YBData, trials: int = 20, seed: int = 0, l: int = 3) -> List[Dict[str, bool]]:
    """Half commuting, half generic (all commuting when m = 1); each record holds both verdicts."""
    rng = np.random.default_rng(seed)
    records = []
    for t in range(trials):
        commuting = t < trials // 2 or yb.m < 2
        spec = random_finite_module(yb.m, l, commuting, rng)
        wall = wall_condition_holds(spec, yb)
        commute = not noncommuting_pairs(spec)
        records.append({"constructed_commuting": commuting, "wall": wall, "commuting": commute})
    return records


def module_label(spec: VModuleSpec) -> str:
    if spec.is_free:
        return f"free(m={spec.m}, truncation={spec.max_total_degree})"
    return spec.name or f"finite(l={spec.l}, m={spec.m})"


def source_degree(spec: VModuleSpec, n: int, total_degree: Optional[int]) -> int:
    """Module degree of the source of ∂_n (0 for finite modules)."""
    if not spec.is_free:
        return 0
    return total_degree - n
