"""Tests for R_m, the partial cascades d_k^n, sigma_n, brackets and phi."""

import pytest

from ybhomology.errors import DimensionError
from ybhomology.scalar import ONE, Y2, quantum_int
from ybhomology.tensor import LinMap, rank_exact
from ybhomology.tensor.linmap import index_of, vec_from_letters
from ybhomology.ybop import (
    bracket,
    bracket_space,
    build_R,
    check_bracket_eigen,
    check_bracket_intersection,
    check_bracket_recursions,
    check_invertible,
    check_phi_formula,
    check_sigma_identities,
    check_ybe,
    d_k_n,
    inv_count,
    phi_formula_results,
    phi_n_i,
    psi_n,
    sigma_identity_results,
    sigma_n,
)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_ybe_and_invertibility(m):
    yb = build_R(m)
    assert check_ybe(yb.R)
    assert check_invertible(yb.R)


def test_R2_entries(yb2):
    """v1v2 -> (1 - y^2) v1v2 + y^2 v2v1 and v2v1 -> v1v2."""
    R = yb2.R
    v12, v21 = index_of((1, 2), 2), index_of((2, 1), 2)
    assert R[v12, v12] == ONE - Y2
    assert R[v21, v12] == Y2
    assert R[v12, v21] == ONE
    assert R[v21, v21].is_zero()
    assert R[0, 0] == ONE


def test_m1_is_trivial(yb1):
    assert yb1.R == LinMap.identity(1)
    assert sigma_n(yb1, 3) == LinMap.identity(1)
    assert sigma_n(yb1, 2).is_zero()


def test_cascade_base_cases(yb2):
    assert d_k_n(yb2, 1, 3) == LinMap.identity(8)
    assert d_k_n(yb2, 2, 2) == yb2.R
    assert sigma_n(yb2, 2) == LinMap.identity(4) - yb2.R
    assert sigma_n(yb2, 0) == LinMap.zero(1, 1)
    with pytest.raises(DimensionError):
        d_k_n(yb2, 0, 3)
    with pytest.raises(DimensionError):
        psi_n(yb2, 1)


def test_sigma_ranks(yb2):
    """ker sigma_2 has dimension 3 and ker sigma_3 dimension 2 for m = 2."""
    assert 4 - rank_exact(sigma_n(yb2, 2)) == 3
    assert 8 - rank_exact(sigma_n(yb2, 3)) == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sigma_identities_m2(yb2, n):
    assert sigma_identity_results(yb2, n) == {
        "sigma_split": True, "face_commutation": True, "psi_factorization": True,
    }


@pytest.mark.parametrize("n", [2, 3])
def test_sigma_identities_m3(yb3, n):
    assert check_sigma_identities(yb3, n)


def test_bracket_two_letters(yb2):
    expected = vec_from_letters([(1, (2, 1)), (-1, (1, 2))], 2)
    assert bracket(yb2, (2, 1)) == expected
    assert bracket(yb2, (1, 1)) == {}


def test_bracket_space_dimensions(yb3):
    assert [bracket_space(yb3, k).dim for k in range(5)] == [1, 3, 3, 1, 0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bracket_properties_m3(yb3, n):
    assert check_bracket_recursions(yb3, n)
    assert check_bracket_eigen(yb3, n)
    assert check_bracket_intersection(yb3, n)


def test_sigma_eigenvalue_on_top_bracket(yb3):
    b = bracket(yb3, (3, 2, 1))
    assert sigma_n(yb3, 3).apply(b) == {i: x * quantum_int(3) for i, x in b.items()}


def test_inversion_count():
    assert inv_count((3, 1, 2)) == 2
    assert inv_count((1, 2, 3)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_formula_m2(yb2, n):
    assert check_phi_formula(yb2, n)


def test_phi_formula_m3(yb3):
    assert check_phi_formula(yb3, 3)


def test_phi_vanishes_past_the_alphabet(yb2):
    """phi_3^1 maps into [V]_3 = 0 when m = 2."""
    assert phi_n_i(yb2, 3, 1).is_zero()
    assert phi_formula_results(yb2, 3)["phi_vanishing"]
