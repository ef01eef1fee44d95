"""Tests for sparse maps, rank back-ends and subspace operations."""

import pytest

from ybhomology.errors import DimensionError, RankMismatchError, ResampleRequired
from ybhomology.scalar import ONE, Y, Y2, parse_ratfunc
from ybhomology.tensor import (
    LinMap,
    Subspace,
    TensorIndex,
    compose,
    image_basis,
    index_of,
    kernel_basis,
    letters_of,
    place,
    rank,
    rank_eval,
    rank_exact,
    use_rank_mode,
)
from ybhomology.tensor.elimination import cleared_rows, components, current_rank_mode, to_domain_matrix
from ybhomology.tensor.linmap import hstack, vec_from_letters, vstack
from ybhomology.tensor.subspace import direct_sum, independent, subspace_ops


def test_tensor_index_positions():
    """Leftmost letter is most significant."""
    assert index_of((1, 2), 2) == 1
    assert index_of((2, 1), 2) == 2
    assert letters_of(5, 3, 2) == (2, 1, 2)
    assert str(TensorIndex.from_position(5, 3, 2)) == "v2v1v2"
    with pytest.raises(DimensionError):
        TensorIndex((3,), 2)


def test_compose_shape_mismatch():
    with pytest.raises(DimensionError):
        compose(LinMap.identity(2), LinMap.identity(3))


def test_kron_and_place():
    swap = LinMap.from_dense([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    left = place(swap, 0, 1, 2)
    assert left == swap.kron(LinMap.identity(2))
    right = place(swap, 1, 0, 2)
    assert right == LinMap.identity(2).kron(swap)
    assert compose(left, left) == LinMap.identity(8)


def test_stack_and_transpose():
    a = LinMap.from_dense([[1, "y"], [0, 2]])
    assert hstack([a, a]).shape == (2, 4)
    assert vstack([a, a]).transpose() == hstack([a.transpose(), a.transpose()])
    assert a.transpose()[1, 0] == Y


def test_rank_over_function_field():
    """[[1, y], [y, y^2]] is singular over Q(y); [[1, y], [y, 1]] is not."""
    f = LinMap.from_dense([[1, "y"], ["y", "y^2"]])
    g = LinMap.from_dense([[1, "y"], ["y", 1]])
    assert rank_exact(f) == 1
    assert rank_exact(g) == 2
    assert rank_eval(f) == 1
    assert rank_eval(g) == 2


def test_rank_eval_skips_poles():
    """Entries with a pole at y=2 are sampled elsewhere."""
    f = LinMap.from_dense([[ONE / parse_ratfunc("y - 2"), 1], [0, "y"]])
    assert rank_eval(f) == 2


def test_rank_eval_needs_enough_points():
    f = LinMap.from_dense([["(y - 2)(y - 3)"]])
    with pytest.raises(ResampleRequired):
        rank_eval(f, points=[2, 3])


def test_rank_modes_agree():
    f = LinMap.from_dense([[1, "y", 0], ["1 - y^2", 0, "y^2"], [0, 1, 1]])
    with use_rank_mode("both"):
        assert current_rank_mode() == "both"
        assert rank(f) == rank_exact(f)
    with pytest.raises(ValueError):
        with use_rank_mode("fast"):
            pass


def test_rank_mismatch_raised(monkeypatch):
    """rank_mode=both fails loudly when the evaluated rank disagrees."""
    from ybhomology.tensor import elimination

    f = LinMap.from_dense([["y^2 - 1"]])
    monkeypatch.setattr(elimination, "_rank_eval_detail", lambda g, points=None: (0, False))
    with pytest.raises(RankMismatchError):
        rank(f, mode="both")


def test_components_split():
    rows = {0: {0: 1}, 1: {1: 1, 2: 1}, 2: {2: 1}, 3: {5: 1}}
    groups = sorted(components(rows))
    assert groups == [[0], [1, 2], [3]]


def test_kernel_and_image():
    f = LinMap.from_dense([[1, "y", 0], [0, 0, 1]])
    ker = kernel_basis(f)
    assert ker.dim == 1
    (v,) = ker.vectors()
    assert not f.apply(v)
    assert image_basis(f) == Subspace.full(2)


def test_subspace_canonical_equality():
    a = Subspace.span(3, [{0: ONE, 1: Y}, {1: ONE, 2: ONE}])
    b = Subspace.span(3, [{0: ONE, 1: Y}, {0: ONE, 1: Y + ONE, 2: ONE}])
    assert a == b
    assert subspace_ops(a, b, "equal")
    assert subspace_ops(Subspace.full(3), a, "contains")


def test_intersection_and_sum():
    a = Subspace.span(3, [{0: ONE}, {1: ONE}])
    b = Subspace.span(3, [{1: ONE}, {2: ONE}])
    assert (a & b) == Subspace.span(3, [{1: ONE}])
    assert (a + b) == Subspace.full(3)
    space, direct = direct_sum([a, b])
    assert space.dim == 3 and not direct


def test_tensor_of_subspaces():
    line = Subspace.span(2, [{0: ONE, 1: Y2}])
    square = line.tensor(line)
    assert square.dim == 1
    assert square.contains({0: ONE, 1: Y2, 2: Y2, 3: Y2 * Y2})


def test_independence_with_coefficients():
    u = vec_from_letters([(1, (1, 2)), ("y^2", (2, 1))], 2)
    w = vec_from_letters([("1 + y^2", (1, 2)), ("y^2 + y^4", (2, 1))], 2)
    assert not independent([u, w], 4)
    assert independent([u, vec_from_letters([(1, (1, 1))], 2)], 4)


def test_eval_tripwire_confirms_exactly(caplog):
    """y - 2 vanishes at the first prime, so the sampled ranks differ."""
    f = LinMap.from_dense([["y - 2"]])
    with caplog.at_level("WARNING", logger="ybhomology.tensor.elimination"):
        assert rank(f, mode="eval") == 1
    assert "varied" in caplog.text


def test_rank_eval_explicit_points():
    """y - 2 vanishes at the first point; a second point recovers the rank."""
    f = LinMap.from_dense([["y - 2"]])
    assert rank_eval(f, points=[2, 5]) == 1
    with pytest.raises(ResampleRequired):
        rank_eval(f, points=[2])


def test_domain_matrix_from_cleared_rows():
    """Rows are cleared to Z[y] and columns renumbered densely."""
    f = LinMap.from_entries(2, 5, [(0, 1, "1/2"), (0, 4, "y"), (1, 4, "y^2 / 3")])
    rows, poles = cleared_rows(f)
    assert poles == []
    dm = to_domain_matrix(rows)
    assert dm.shape == (2, 2)
    assert dm.to_field().rank() == 2
    assert rank_exact(f) == 2


@pytest.mark.parametrize("dense", [
    [["y", "y^2", 1], ["1", "y", "1 / y"], [0, 0, "y - 1"]],
    [["1 / (y + 1)", 1], ["y - 1", "y^2 - 1"]],
    [["y^2 - 4", 0, "y"], [0, "y^2 - 4", 2], ["y", 2, 1]],
])
def test_exact_and_sampled_rank_agree(dense):
    f = LinMap.from_dense(dense)
    with use_rank_mode("both"):
        assert rank(f) == rank_exact(f) == rank_eval(f)


def test_matrix_payload_round_trip():
    f = LinMap.from_dense([["1/2", 0], ["y", "(y^2 - 1) / (y + 3)"]])
    payload = f.to_payload()
    assert payload.rows == 2 and payload.cols == 2
    assert len(payload.entries) == 3
    assert LinMap.from_payload(payload) == f


def test_subspace_payload_round_trip():
    space = Subspace.span(3, [{1: ONE}, {0: Y, 2: ONE / Y2}])
    payload = space.to_payload()
    assert payload.ambient_dim == 3
    assert Subspace.from_payload(payload) == space
    payload.ambient_dim = 4
    with pytest.raises(DimensionError):
        Subspace.from_payload(payload)
