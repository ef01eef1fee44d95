"""Tests for ker sigma_n, the eigenspace decomposition and the kernel algebra."""

import pytest

from ybhomology.errors import InvariantViolation, PreconditionError
from ybhomology.kernel import (
    KernelTower,
    b_counts,
    check_direct_sum,
    check_dimension_count,
    check_graded_algebra,
    check_kernel_vanishing,
    check_m2_recurrences,
    check_omega_images,
    check_sigma_restriction,
    expected_tilde_dim,
    generator_sets,
    hilbert_check,
    hilbert_polynomial,
    kernel_dim_direct,
    kernel_dim_recurrence,
    kernel_dims_recurrence,
    omega_k,
    verify_decomposition,
    verify_generator_examples,
)
from ybhomology.scalar import ZERO, IntPoly, quantum_int
from ybhomology.tensor.linmap import vec_from_letters
from ybhomology.ybop import phi_formula_results, sigma_identity_results, sigma_n


def test_recurrence_values():
    assert kernel_dims_recurrence(2, 8) == [1, 0, 3, 2, 9, 12, 31, 54, 117]
    assert kernel_dims_recurrence(3, 5) == [1, 0, 6, 8, 39, 96]
    assert kernel_dims_recurrence(1, 4) == [1, 0, 1, 0, 1]
    assert kernel_dim_recurrence(2, -1) == 0


@pytest.mark.parametrize("n", range(0, 7))
def test_direct_dims_m2(yb2, n):
    assert kernel_dim_direct(yb2, n) == kernel_dim_recurrence(2, n)


@pytest.mark.parametrize("n, expected", [(2, 6), (3, 8), (4, 39)])
def test_direct_dims_m3(yb3, n, expected):
    assert kernel_dim_direct(yb3, n) == expected


def test_m2_closed_recurrences():
    values = kernel_dims_recurrence(2, 8)
    assert check_m2_recurrences(values) == {"three_two": True, "four_alternating": True, "doubling": True}
    assert not check_m2_recurrences([1, 0, 3, 2, 10])["three_two"]


def test_dimension_count(yb2):
    dims = [kernel_dim_direct(yb2, n) for n in range(5)]
    assert all(check_dimension_count(yb2, n, dims) for n in range(5))


def test_b_counts_and_tilde_dims():
    assert b_counts(2) == {2: 3, 3: 2}
    assert b_counts(3) == {2: 6, 3: 8, 4: 3}
    assert [expected_tilde_dim(3, n) for n in range(6)] == [0, 0, 6, 8, 3, 0]


@pytest.mark.parametrize("n", range(1, 7))
def test_decomposition_m2(yb2, n):
    report = verify_decomposition(yb2, n)
    assert report.ok
    assert report.dims_sum == 2 ** n
    assert [p.eigenvalue for p in report.parts] == [quantum_int(k) for k in range(n + 1)]


def test_decomposition_m3_degree3(yb3):
    report = verify_decomposition(yb3, 3)
    assert report.ok
    assert [p.dim for p in report.parts] == [8, 18, 0, 1]


def test_decomposition_m3_degree4(yb3):
    report = verify_decomposition(yb3, 4)
    assert report.ok
    assert [p.dim for p in report.parts] == [39, 24, 18, 0, 0]
    assert all(phi_formula_results(yb3, 4).values())
    assert all(sigma_identity_results(yb3, 4).values())


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3)])
def test_kernel_part_has_eigenvalue_zero(request, m, n):
    """Part k=0 is ker sigma_n itself: sigma_n sends it to the zero vector."""
    yb = request.getfixturevalue(f"yb{m}")
    report = verify_decomposition(yb, n)
    assert report.checks["eigenvalues"]
    part = report.parts[0]
    assert part.k == 0 and part.eigenvalue == ZERO and part.eigenvalue == quantum_int(0)
    assert part.dim == kernel_dim_recurrence(m, n)
    sig = sigma_n(yb, n)
    assert all(sig.apply(w) == {} for w in part.space.vectors())


def test_decomposition_needs_positive_degree(yb2):
    with pytest.raises(PreconditionError):
        verify_decomposition(yb2, 0)


def test_sigma_restriction(yb2):
    assert all(check_sigma_restriction(yb2, 4, k) for k in range(1, 5))


def test_tilde_dims_m2(yb2):
    tower = KernelTower(yb2)
    assert [tower.tilde(n).dim for n in range(6)] == [0, 0, 3, 2, 0, 0]
    assert all(check_direct_sum(tower, n) for n in range(1, 6))
    assert check_kernel_vanishing(tower, 4)
    assert check_kernel_vanishing(tower, 5)


def test_tilde_dims_m3(yb3):
    tower = KernelTower(yb3)
    assert [tower.tilde(n).dim for n in range(6)] == [0, 0, 6, 8, 3, 0]


def test_vanishing_needs_large_degree(yb2):
    with pytest.raises(PreconditionError):
        check_kernel_vanishing(KernelTower(yb2), 3)


def test_graded_algebra(yb2):
    tower = KernelTower(yb2)
    assert check_graded_algebra(tower, 2, 2)
    assert check_graded_algebra(tower, 2, 3)


def test_omega(yb2):
    x = vec_from_letters([(1, (2, 2))], 2)
    w = omega_k(yb2, x, 1, 3)
    assert w == vec_from_letters([(1, (1, 2, 2)), (-1, (2, 2, 1))], 2)
    assert not sigma_n(yb2, 3).apply(w)
    assert check_omega_images(KernelTower(yb2), 3)


def test_omega_preconditions(yb2):
    x = vec_from_letters([(1, (1, 1))], 2)
    with pytest.raises(PreconditionError):
        omega_k(yb2, x, 2, 3)
    with pytest.raises(PreconditionError):
        omega_k(yb2, vec_from_letters([(1, (1, 2))], 2), 1, 3)
    with pytest.raises(PreconditionError):
        omega_k(yb2, x, 1, 1)


def test_generators_m2(yb2):
    gens = generator_sets(yb2)
    assert sorted(gens) == [2, 3]
    assert verify_generator_examples(yb2, n_max=5)


def test_generators_m3(yb3):
    assert sorted(generator_sets(yb3)) == [2, 3, 4]
    assert verify_generator_examples(yb3, n_max=4)


def test_m3_extra_generator_is_needed(yb3):
    """Without degree 4 the listed generators miss part of ker sigma_4."""
    assert not verify_generator_examples(yb3, n_max=4, generator_degrees=[2, 3])


def test_generators_only_for_small_alphabets(yb1):
    with pytest.raises(PreconditionError):
        generator_sets(yb1)


@pytest.mark.parametrize("m", range(1, 7))
def test_hilbert_identity(m):
    assert hilbert_check(m, 8)


def test_hilbert_polynomial_m2():
    assert hilbert_polynomial(2) == IntPoly((1, 0, -3, -2))


def test_invariant_violation_is_an_error():
    err = InvariantViolation("omega_kernel", "detail")
    assert err.name == "omega_kernel"
    assert "detail" in str(err)
