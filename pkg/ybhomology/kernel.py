# --- ybhomology/kernel.py ---
"""ker σ_n: dimensions M(n), the quantum-integer eigenspace decomposition of
V^{⊗n}, the graded algebra ⊕ ker σ_n and its free generators."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence

from ybhomology.errors import InvariantViolation, PreconditionError, RecurrenceError
from ybhomology.scalar import ONE, IntPoly, RatFunc, quantum_int
from ybhomology.tensor.elimination import rank
from ybhomology.tensor.linmap import Vector, letters_of, unit, vec_add, vec_from_letters, vec_scale, vec_tensor
from ybhomology.tensor.subspace import EchelonBuilder, Subspace, direct_sum, kernel_basis
from ybhomology.ybop import YBData, bracket, bracket_space, sigma_n

LOGGER = logging.getLogger(__name__)


def kernel_space(yb: YBData, n: int) -> Subspace:
    """ker σ_n; ker σ_0 is the whole one-dimensional V^{⊗0}."""
    def build():
        if n == 0:
            return Subspace.full(1)
        return kernel_basis(sigma_n(yb, n))

    return yb._cached(("ker", n), build)


def kernel_dim_direct(yb: YBData, n: int) -> int:
    if n == 0:
        return 1
    return yb.dim(n) - rank(sigma_n(yb, n))


def kernel_dims_recurrence(m: int, n_max: int) -> List[int]:
    """M(0..n_max) from m^n = Σ_i C(m,i) M(n-i), validated against the weighted identity."""
    values: List[int] = []
    for n in range(n_max + 1):
        values.append(m ** n - sum(comb(m, i) * values[n - i] for i in range(1, m + 1) if n - i >= 0))
    for n in range(1, n_max + 1):
        weighted = sum((i - 1) * comb(m + 1, i) * values[n - i] for i in range(0, m + 2) if n - i >= 0)
        if weighted != 0:
            raise RecurrenceError(f"weighted recurrence gives {weighted} at m={m}, n={n}")
    if values and values[0] != 1:
        raise RecurrenceError("M(0) must be 1")
    return values


def kernel_dim_recurrence(m: int, n: int) -> int:
    if n < 0:
        return 0
    return kernel_dims_recurrence(m, n)[n]


def check_m2_recurrences(values: Sequence[int]) -> Dict[str, bool]:
    """Three closed recurrences for m = 2 against a list of M(n)."""
    M = list(values)
    rec_a = all(M[n] == 3 * M[n - 2] + 2 * M[n - 3] for n in range(3, len(M)))
    rec_b = all(M[n] == 4 * M[n - 2] + (-1) ** (n + 1) * (n - 1) for n in range(2, len(M)))
    rec_c = all(M[n] == 2 * M[n - 1] + (-1) ** n * (n + 1) for n in range(1, len(M)))
    return {"three_two": rec_a, "four_alternating": rec_b, "doubling": rec_c}


def check_dimension_count(yb: YBData, n: int, kernel_dims: Sequence[int]) -> bool:
    """m^n = Σ_k dim [V]_k · M(n-k) with dim [V]_k taken from the bracket spaces."""
    total = 0
    for k in range(0, n + 1):
        vk = bracket_space(yb, k).dim
        if vk != comb(yb.m, k):
            return False
        total += vk * kernel_dims[n - k]
    return total == yb.dim(n)


def b_counts(m: int) -> Dict[int, int]:
    """Number of free generators in each degree 2..m+1."""
    return {i: (i - 1) * comb(m + 1, i) for i in range(2, m + 2)}


def expected_tilde_dim(m: int, n: int) -> int:
    return (n - 1) * comb(m + 1, n) if 2 <= n <= m + 1 else 0


# -- eigenspace decomposition -------------------------------------------------

@dataclass
class DecompositionPart:
    k: int
    space: Subspace
    eigenvalue: RatFunc

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass
class DecompositionReport:
    n: int
    parts: List[DecompositionPart]
    direct_sum_ok: bool
    dims_sum: int
    eigen_ok: bool
    separation_ok: bool
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.direct_sum_ok and self.eigen_ok and self.separation_ok


def verify_decomposition(yb: YBData, n: int) -> DecompositionReport:
    """V^{⊗n} = ⊕_k [V]_k ⊗ ker σ_{n-k}, with σ_n acting on part k as [k]_{y^2}."""
    if n < 1:
        raise PreconditionError("decomposition needs n >= 1")
    sig = sigma_n(yb, n)
    parts = []
    eigen_ok = True
    for k in range(0, n + 1):
        space = bracket_space(yb, k).space.tensor(kernel_space(yb, n - k))
        value = quantum_int(k)
        for w in space.vectors():
            if sig.apply(w) != vec_scale(w, value):
                LOGGER.warning("sigma_%d is not [%d] on part %d", n, k, k)
                eigen_ok = False
                break
        parts.append(DecompositionPart(k=k, space=space, eigenvalue=value))
    _, direct = direct_sum([p.space for p in parts], yb.dim(n))
    dims_sum = sum(p.dim for p in parts)
    separation = all(quantum_int(j) != quantum_int(k) for j in range(n + 1) for k in range(j))
    nonzero = [p.space for p in parts if p.dim]
    pairwise = all(nonzero[a].intersect(nonzero[b]).dim == 0
                   for a in range(len(nonzero)) for b in range(a))
    report = DecompositionReport(
        n=n,
        parts=parts,
        direct_sum_ok=direct and dims_sum == yb.dim(n),
        dims_sum=dims_sum,
        eigen_ok=eigen_ok,
        separation_ok=separation and pairwise,
    )
    report.checks = {
        "direct_sum": report.direct_sum_ok,
        "eigenvalues": eigen_ok,
        "eigenvalue_separation": report.separation_ok,
    }
    return report


def check_sigma_restriction(yb: YBData, n: int, k: int) -> bool:
    """σ_n agrees with σ_k ⊗ id on V^{⊗k} ⊗ ker σ_{n-k}."""
    target = yb.place(sigma_n(yb, k), 0, n - k) if k >= 1 else sigma_n(yb, n)
    sig = sigma_n(yb, n)
    space = Subspace.full(yb.dim(k)).tensor(kernel_space(yb, n - k))
    return all(sig.apply(w) == target.apply(w) for w in space.vectors())


# -- graded algebra and its generators -------------------------------------------

class KernelTower:
    """ker σ_n degree by degree together with the chosen complements tilde(n)."""

    def __init__(self, yb: YBData):
        self.yb = yb
        self.m = yb.m
        self._tilde: Dict[int, Subspace] = {}
        self._products: Dict[int, Subspace] = {}

    def kernel(self, n: int) -> Subspace:
        return kernel_space(self.yb, n)

    def M(self, n: int) -> int:
        return self.kernel(n).dim if n >= 0 else 0

    def decomposables(self, n: int) -> Subspace:
        """Σ_{k=2}^{n-1} ker σ_{n-k} ⊗ tilde(k) (generator factor on the right)."""
        if n not in self._products:
            builder = EchelonBuilder(self.yb.dim(n))
            for k in range(2, n):
                for v in self.kernel(n - k).tensor(self.tilde(k)).vectors():
                    builder.add(v)
            self._products[n] = builder.freeze()
        return self._products[n]

    def tilde(self, n: int) -> Subspace:
        if n not in self._tilde:
            self._tilde[n] = tilde_complement(self, n)
        return self._tilde[n]


def tilde_complement(tower: KernelTower, n: int) -> Subspace:
    """Greedy complement of the decomposable part inside ker σ_n, in kernel-basis order."""
    yb = tower.yb
    if n <= 1:
        return Subspace.zero(yb.dim(n))
    for k in range(2, n):
        tower.tilde(k)
    products = tower.decomposables(n)
    _, admitted = products.extend(tower.kernel(n).vectors())
    tilde = Subspace.span(yb.dim(n), admitted)
    LOGGER.debug("tilde(%d) for m=%d has dim %d", n, yb.m, tilde.dim)
    return tilde


def check_direct_sum(tower: KernelTower, n: int) -> bool:
    """tilde(n) ⊕ Σ_k ker σ_{n-k} ⊗ tilde(k) is direct and fills ker σ_n."""
    if n <= 1:
        return tower.tilde(n).dim == 0
    parts = [tower.tilde(n)] + [tower.kernel(n - k).tensor(tower.tilde(k)) for k in range(2, n)]
    space, direct = direct_sum(parts, tower.yb.dim(n))
    return direct and space == tower.kernel(n)


def check_kernel_vanishing(tower: KernelTower, n: int) -> bool:
    """For n > m+1: ker σ_n = ⊕_{k=2}^{m+1} ker σ_{n-k} ⊗ tilde(k) exactly."""
    m = tower.m
    if n <= m + 1:
        raise PreconditionError(f"vanishing of tilde needs n > m+1, got n={n}, m={m}")
    parts = [tower.kernel(n - k).tensor(tower.tilde(k)) for k in range(2, m + 2)]
    space, direct = direct_sum(parts, tower.yb.dim(n))
    return direct and space == tower.kernel(n) and tower.tilde(n).dim == 0


def check_graded_algebra(tower: KernelTower, s: int, t: int) -> bool:
    """ker σ_s ⊗ ker σ_t ⊆ ker σ_{s+t}."""
    sig = sigma_n(tower.yb, s + t)
    product = tower.kernel(s).tensor(tower.kernel(t))
    return all(not sig.apply(v) for v in product.vectors())


def omega_k(yb: YBData, x: Vector, k: int, n: int) -> Vector:
    """v_k ⊗ x + (-1)^n x ⊗ v_k for x ∈ ker σ_{n-1} with k at most every letter of x."""
    m = yb.m
    if n < 2:
        raise PreconditionError("omega_k needs n >= 2")
    if not 1 <= k <= m:
        raise PreconditionError(f"letter {k} outside 1..{m}")
    letters = [min(letters_of(pos, n - 1, m)) for pos in x]
    if letters and k > min(letters):
        raise PreconditionError(f"omega_{k} needs k <= {min(letters)}, the smallest letter of x")
    if sigma_n(yb, n - 1).apply(x):
        raise PreconditionError(f"argument of omega_{k} is not in ker sigma_{n - 1}")
    vk = unit(k - 1)
    result = vec_add(vec_tensor(vk, x, yb.dim(n - 1)), vec_tensor(x, vk, m), ONE if n % 2 == 0 else -ONE)
    if sigma_n(yb, n).apply(result):
        raise InvariantViolation("omega_kernel", f"omega_{k} left ker sigma_{n}")
    return result


def check_omega_images(tower: KernelTower, n: int) -> bool:
    """Every admissible ω_k applied to a basis vector of ker σ_{n-1} lands in ker σ_n."""
    yb = tower.yb
    for x in tower.kernel(n - 1).vectors() if n >= 2 else []:
        smallest = min(min(letters_of(pos, n - 1, yb.m)) for pos in x)
        for k in range(1, smallest + 1):
            try:
                omega_k(yb, x, k, n)
            except InvariantViolation:
                return False
    return True


def _quadratic_generators(yb: YBData) -> List[Vector]:
    m = yb.m
    gens = [vec_from_letters([(1, (i, i))], m) for i in range(1, m + 1)]
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            gens.append(vec_from_letters([(1, (i, j)), ("y^2", (j, i))], m))
    return gens


def generator_sets(yb: YBData) -> Dict[int, List[Vector]]:
    """Explicit spanning sets of the tilde kernels for m = 2 and m = 3."""
    m = yb.m
    if m not in (2, 3):
        raise PreconditionError("explicit generators are only known for m = 2, 3")
    gens = {2: _quadratic_generators(yb)}
    mixed = lambda i, j: vec_from_letters([(1, (i, j)), ("y^2", (j, i))], m)  # noqa: E731
    square = lambda i: vec_from_letters([(1, (i, i))], m)  # noqa: E731
    if m == 2:
        gens[3] = [omega_k(yb, square(2), 1, 3), omega_k(yb, mixed(1, 2), 1, 3)]
        return gens
    deg3 = [omega_k(yb, square(j), i, 3) for i in range(1, 4) for j in range(i + 1, 4)]
    for i in range(1, 4):
        for j in range(i + 1, 4):
            for s in range(1, i + 1):
                deg3.append(omega_k(yb, mixed(i, j), s, 3))
    extra = vec_add(
        {p: x * RatFunc(IntPoly((0, 0, 1))) for p, x in bracket(yb, (1, 2, 3)).items()},
        vec_from_letters([(1, (1, 3, 2)), (-1, (2, 3, 1))], m),
        RatFunc(IntPoly((1, 0, 1, 0, 1))),
    )
    deg3.append(extra)
    gens[3] = deg3
    gens[4] = [
        omega_k(yb, omega_k(yb, square(3), 2, 3), 1, 4),
        omega_k(yb, omega_k(yb, mixed(2, 3), 2, 3), 1, 4),
        omega_k(yb, extra, 1, 4),
    ]
    return gens


def generated_subalgebra(yb: YBData, gens: Dict[int, List[Vector]], n_max: int) -> List[Subspace]:
    """Degree pieces of the subalgebra generated by gens, built as A(n) = Σ_k A(n-k) ⊗ G(k)."""
    spans = {k: Subspace.span(yb.dim(k), vs) for k, vs in gens.items()}
    pieces = [Subspace.full(1)]
    for n in range(1, n_max + 1):
        builder = EchelonBuilder(yb.dim(n))
        for k, g in spans.items():
            if k <= n:
                for v in pieces[n - k].tensor(g).vectors():
                    builder.add(v)
        pieces.append(builder.freeze())
    return pieces


def verify_generator_examples(yb: YBData, n_max: Optional[int] = None,
                              generator_degrees: Optional[Iterable[int]] = None) -> bool:
    """The listed generators lie in their kernels, have the predicted counts and generate ker σ_n."""
    gens = generator_sets(yb)
    if generator_degrees is not None:
        keep = set(generator_degrees)
        gens = {k: v for k, v in gens.items() if k in keep}
    if n_max is None:
        n_max = 5 if yb.m == 2 else 4
    counts = b_counts(yb.m)
    for k, vs in gens.items():
        sig = sigma_n(yb, k)
        if any(sig.apply(v) for v in vs):
            LOGGER.info("a degree-%d generator is not in ker sigma_%d", k, k)
            return False
        if Subspace.span(yb.dim(k), vs).dim != counts[k]:
            LOGGER.info("degree-%d generators span the wrong dimension", k)
            return False
    pieces = generated_subalgebra(yb, gens, n_max)
    for n in range(2, n_max + 1):
        if pieces[n] != kernel_space(yb, n):
            LOGGER.info("generators miss part of ker sigma_%d for m=%d", n, yb.m)
            return False
    return True


# -- Hilbert series -----------------------------------------------------------------

def hilbert_polynomial(m: int) -> IntPoly:
    """(1 - mq)(1 + q)^m, written in the variable y of IntPoly."""
    return IntPoly((1, -m)) * IntPoly((1, 1)) ** m


def hilbert_results(m: int, degree_bound: int) -> Dict[str, bool]:
    """1 - Σ b_i q^i = (1 - mq)(1 + q)^m, and 1/((1 - mq)(1 + q)^m) = Σ M(n) q^n."""
    left = [1] + [0] * (m + 1)
    for i, b in b_counts(m).items():
        left[i] -= b
    right = hilbert_polynomial(m)
    identity = IntPoly(left) == right
    r = list(right.coeffs)
    series: List[Fraction] = []
    for n in range(degree_bound + 1):
        acc = Fraction(1 if n == 0 else 0)
        for i in range(1, min(n, len(r) - 1) + 1):
            acc -= r[i] * series[n - i]
        series.append(acc / r[0])
    inverse = series == [Fraction(x) for x in kernel_dims_recurrence(m, degree_bound)]
    return {"hilbert_identity": identity, "series_inverse": inverse}


def hilbert_check(m: int, degree_bound: int) -> bool:
    return all(hilbert_results(m, degree_bound).values())
