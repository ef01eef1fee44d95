# --- ybhomology/ybop.py ---
"""The sl_m operators R_m and everything built from them on V^{⊗n}.

Conventions: operators act on column vectors, compositions read right to
left, and V^{⊗0} is the one-dimensional space.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import isqrt
from typing import Dict, Sequence, Tuple

from ybhomology.errors import DimensionError
from ybhomology.scalar import ONE, Y2, IntPoly, RatFunc, quantum_int, y_power
from ybhomology.tensor.elimination import rank_exact
from ybhomology.tensor.linmap import (
    LinMap,
    Vector,
    compose,
    index_of,
    letters_of,
    place,
    unit,
    vec_add,
    vec_scale,
    vec_tensor,
)
from ybhomology.tensor.subspace import Subspace, image_basis

LOGGER = logging.getLogger(__name__)

ONE_MINUS_Y2 = RatFunc(IntPoly((1, 0, -1)))


@dataclass
class YBData:
    m: int
    R: LinMap
    cache: Dict[Tuple, object] = field(default_factory=dict, repr=False)

    def dim(self, n: int) -> int:
        return self.m ** n

    def place(self, op: LinMap, left: int, right: int) -> LinMap:
        return place(op, left, right, self.m)

    def identity(self, n: int) -> LinMap:
        return LinMap.identity(self.m ** n)

    def _cached(self, key: Tuple, build):
        value = self.cache.get(key)
        if value is None:
            value = build()
            self.cache[key] = value
        return value

    def d(self, k: int, n: int) -> LinMap:
        return d_k_n(self, k, n)

    def sigma(self, n: int) -> LinMap:
        return sigma_n(self, n)


def build_R(m: int) -> YBData:
    """R(v_i⊗v_j) = (1-y^2) v_i⊗v_j + y^2 v_j⊗v_i and R(v_j⊗v_i) = v_i⊗v_j for i < j."""
    if m < 1:
        raise DimensionError("m must be at least 1")
    entries = []
    for i in range(1, m + 1):
        entries.append((index_of((i, i), m), index_of((i, i), m), ONE))
        for j in range(i + 1, m + 1):
            ij, ji = index_of((i, j), m), index_of((j, i), m)
            entries.append((ij, ij, ONE_MINUS_Y2))
            entries.append((ji, ij, Y2))
            entries.append((ij, ji, ONE))
    R = LinMap.from_entries(m * m, m * m, entries)
    LOGGER.debug("built R_%d with %d nonzeros", m, R.nnz)
    return YBData(m=m, R=R)


def _alphabet(R: LinMap) -> int:
    m = isqrt(R.rows)
    if m * m != R.rows or R.rows != R.cols:
        raise DimensionError(f"R must be square on V⊗V, got {R.shape}")
    return m


def check_ybe(R: LinMap) -> bool:
    """(R⊗id)(id⊗R)(R⊗id) = (id⊗R)(R⊗id)(id⊗R)."""
    m = _alphabet(R)
    r1 = place(R, 0, 1, m)
    r2 = place(R, 1, 0, m)
    return compose(r1, compose(r2, r1)) == compose(r2, compose(r1, r2))


def check_invertible(R: LinMap) -> bool:
    return rank_exact(R) == R.rows


def d_k_n(yb: YBData, k: int, n: int) -> LinMap:
    """(R⊗id^{n-2}) ∘ (id⊗R⊗id^{n-3}) ∘ ... ∘ (id^{k-2}⊗R⊗id^{n-k}); d_1^n = id."""
    if not 1 <= k <= n:
        raise DimensionError(f"d_k^n needs 1 <= k <= n, got k={k}, n={n}")

    def build():
        if k == 1:
            return yb.identity(n)
        return compose(d_k_n(yb, k - 1, n), yb.place(yb.R, k - 2, n - k))

    return yb._cached(("d", k, n), build)


def sigma_n(yb: YBData, n: int) -> LinMap:
    """Σ_{i=1}^{n} (-1)^{i-1} d_i^n; σ_0 is the zero map on V^{⊗0}."""
    if n < 0:
        raise DimensionError("degree must be nonnegative")

    def build():
        if n == 0:
            return LinMap.zero(1, 1)
        total = d_k_n(yb, 1, n)
        for i in range(2, n + 1):
            term = d_k_n(yb, i, n)
            total = total + term if i % 2 == 1 else total - term
        return total

    return yb._cached(("sigma", n), build)


def psi_n(yb: YBData, n: int) -> LinMap:
    """Σ_{1<=i<=j<=n-1} (-1)^{i+j} (id⊗d_j^{n-1}) ∘ d_i^n."""
    if n < 2:
        raise DimensionError("psi_n needs n >= 2")

    def build():
        total = LinMap.zero(yb.dim(n), yb.dim(n))
        for j in range(1, n):
            outer = yb.place(d_k_n(yb, j, n - 1), 1, 0)
            for i in range(1, j + 1):
                term = compose(outer, d_k_n(yb, i, n))
                total = total + term if (i + j) % 2 == 0 else total - term
        return total

    return yb._cached(("psi", n), build)


def sigma_identity_results(yb: YBData, n: int) -> Dict[str, bool]:
    """The three exact sigma identities at degree n, keyed by name."""
    if n < 2:
        raise DimensionError("sigma identities need n >= 2")
    sig = sigma_n(yb, n)
    split_ok = True
    for k in range(1, n):
        rhs_tail = compose(yb.place(d_k_n(yb, k + 1, k + 1), 0, n - k - 1),
                           yb.place(sigma_n(yb, n - k), k, 0))
        rhs = yb.place(sigma_n(yb, k), 0, n - k)
        rhs = rhs + rhs_tail if k % 2 == 0 else rhs - rhs_tail
        if rhs != sig:
            LOGGER.info("sigma splitting identity fails at n=%d k=%d", n, k)
            split_ok = False
            break

    sigma2_left = yb.place(sigma_n(yb, 2), 0, n - 2)
    face_ok = True
    for j in range(1, n):
        inner = yb.place(d_k_n(yb, j, n - 1), 1, 0)
        for i in range(1, j + 1):
            a = compose(inner, d_k_n(yb, i, n))
            b = compose(yb.place(d_k_n(yb, i, n - 1), 1, 0), d_k_n(yb, j + 1, n))
            if a - b != compose(sigma2_left, a):
                LOGGER.info("face commutation identity fails at n=%d i=%d j=%d", n, i, j)
                face_ok = False
                break
        if not face_ok:
            break

    psi_ok = compose(yb.place(sigma_n(yb, n - 1), 1, 0), sig) == compose(sigma2_left, psi_n(yb, n))
    return {"sigma_split": split_ok, "face_commutation": face_ok, "psi_factorization": psi_ok}


def check_sigma_identities(yb: YBData, n: int) -> bool:
    return all(sigma_identity_results(yb, n).values())


# -- brackets ---------------------------------------------------------------

def _perm_sign(perm: Sequence[int]) -> int:
    return -1 if inv_count(perm) % 2 else 1


def bracket(yb: YBData, indices: Sequence[int]) -> Vector:
    """Σ_τ sgn(τ) v_{i_τ(1)} ⊗ ... ⊗ v_{i_τ(n)}."""
    m = yb.m
    out: Vector = {}
    for perm in permutations(range(len(indices))):
        pos = index_of([indices[p] for p in perm], m)
        out = vec_add(out, unit(pos), ONE if _perm_sign(perm) > 0 else -ONE)
    return out


@dataclass(frozen=True)
class BracketSpace:
    n: int
    space: Subspace
    bracket_of: Dict[Tuple[int, ...], Vector] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.space.dim


def decreasing_tuples(m: int, n: int):
    """Strictly decreasing index tuples, in lexicographic order."""
    return sorted(tuple(sorted(c, reverse=True)) for c in combinations(range(1, m + 1), n))


def bracket_space(yb: YBData, n: int) -> BracketSpace:
    def build():
        brackets = {t: bracket(yb, t) for t in decreasing_tuples(yb.m, n)}
        space = Subspace.span(yb.dim(n), brackets.values())
        return BracketSpace(n=n, space=space, bracket_of=brackets)

    return yb._cached(("bracket", n), build)


def check_bracket_recursions(yb: YBData, n: int) -> bool:
    """Single-letter and pair pull-out expansions of the bracket, plus antisymmetry."""
    m = yb.m
    for t in decreasing_tuples(m, n):
        full = bracket(yb, t)
        single: Vector = {}
        for s in range(n):
            rest = t[:s] + t[s + 1:]
            term = vec_tensor(unit(t[s] - 1), bracket(yb, rest), m ** (n - 1))
            single = vec_add(single, term, ONE if s % 2 == 0 else -ONE)
        if single != full:
            return False
        if n >= 2:
            pairs: Vector = {}
            for s, u in combinations(range(n), 2):
                rest = tuple(x for p, x in enumerate(t) if p not in (s, u))
                term = vec_tensor(bracket(yb, (t[s], t[u])), bracket(yb, rest), m ** (n - 2))
                # positions are 1-based in the sign (-1)^{s+t+1}
                pairs = vec_add(pairs, term, ONE if (s + u + 3) % 2 == 0 else -ONE)
            if pairs != full:
                return False
        for p in range(n - 1):
            swapped = t[:p] + (t[p + 1], t[p]) + t[p + 2:]
            if bracket(yb, swapped) != vec_scale(full, -ONE):
                return False
    return True


def check_bracket_eigen(yb: YBData, n: int) -> bool:
    """R b = -y^2 b on [V]_2; d_k^n b = (-1)^{k-1} y^{2k-2} b and σ_n b = [n] b on [V]_n."""
    minus_y2 = -Y2
    for b in bracket_space(yb, 2).bracket_of.values():
        if yb.R.apply(b) != vec_scale(b, minus_y2):
            return False
    if n < 1:
        return True
    brackets = bracket_space(yb, n).bracket_of.values()
    for b in brackets:
        for k in range(1, n + 1):
            factor = y_power(2 * k - 2)
            if k % 2 == 0:
                factor = -factor
            if d_k_n(yb, k, n).apply(b) != vec_scale(b, factor):
                return False
        if sigma_n(yb, n).apply(b) != vec_scale(b, quantum_int(n)):
            return False
    return True


def check_bracket_intersection(yb: YBData, n: int) -> bool:
    """[V]_n = ∩_j V^{⊗j}⊗[V]_2⊗V^{⊗n-2-j} = V⊗[V]_{n-1} ∩ [V]_2⊗V^{⊗n-2}."""
    if n < 2:
        return True
    target = bracket_space(yb, n).space
    v2 = bracket_space(yb, 2).space
    meet = None
    for j in range(n - 1):
        piece = Subspace.full(yb.dim(j)).tensor(v2).tensor(Subspace.full(yb.dim(n - 2 - j)))
        meet = piece if meet is None else meet.intersect(piece)
    if meet != target:
        return False
    if n >= 3:
        left = Subspace.full(yb.m).tensor(bracket_space(yb, n - 1).space)
        right = v2.tensor(Subspace.full(yb.dim(n - 2)))
        if left.intersect(right) != target:
            return False
    return True


# -- phi operators ------------------------------------------------------------

def phi_n_i(yb: YBData, n: int, i: int) -> LinMap:
    """(id^{n-i}⊗σ_i) ∘ (id^{n-i-1}⊗σ_{i+1}) ∘ ... ∘ σ_n."""
    if not 1 <= i <= n:
        raise DimensionError(f"phi_n^i needs 1 <= i <= n, got n={n}, i={i}")

    def build():
        if i == n:
            return sigma_n(yb, n)
        return compose(yb.place(sigma_n(yb, i), n - i, 0), phi_n_i(yb, n, i + 1))

    return yb._cached(("phi", n, i), build)


def inv_count(seq: Sequence[int]) -> int:
    return sum(1 for p in range(len(seq)) for q in range(p + 1, len(seq)) if seq[p] > seq[q])


def phi_formula_results(yb: YBData, n: int) -> Dict[str, bool]:
    m = yb.m
    phi1 = phi_n_i(yb, n, 1)
    closed = True
    for pos in range(yb.dim(n)):
        letters = letters_of(pos, n, m)
        expected = vec_scale(bracket(yb, letters), y_power(2 * inv_count(letters[::-1])))
        if phi1.apply(unit(pos)) != expected:
            LOGGER.info("phi closed formula fails on %s", letters)
            closed = False
            break
    images = True
    for i in range(1, n + 1):
        target = bracket_space(yb, n - i + 1).space.tensor(Subspace.full(yb.dim(i - 1)))
        if not target.contains_subspace(image_basis(phi_n_i(yb, n, i))):
            LOGGER.info("image of phi_%d^%d escapes the bracket space", n, i)
            images = False
            break
    # [V]_k = 0 for k > m, so phi_n^i vanishes once n - i + 1 > m
    vanishing = all(phi_n_i(yb, n, i).is_zero() for i in range(1, n - m + 1))
    return {"phi_closed_formula": closed, "phi_images": images, "phi_vanishing": vanishing}


def check_phi_formula(yb: YBData, n: int) -> bool:
    return all(phi_formula_results(yb, n).values())

