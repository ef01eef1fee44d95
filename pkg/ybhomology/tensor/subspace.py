# --- ybhomology/tensor/subspace.py ---
"""Subspaces of Q(y)^N in canonical reduced echelon form.

Each basis vector has a pivot (its smallest nonzero coordinate) equal to 1
and zeros at every other pivot, so two subspaces are equal exactly when their
stored bases are.
"""
from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ybhomology.errors import DimensionError
from ybhomology.scalar import ONE, ZERO
from ybhomology.schemas import SubspacePayload
from ybhomology.tensor.linmap import LinMap, Vector, unit, vec_tensor

LOGGER = logging.getLogger(__name__)


class EchelonBuilder:
    """Incremental reduced echelon basis; the only mutable piece of this module."""

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.rows: Dict[int, Vector] = {}
        self._users: Dict[int, Set[int]] = {}

    def reduce(self, v: Vector) -> Vector:
        out = dict(v)
        for p in sorted(c for c in v if c in self.rows):
            x = out.get(p)
            if not x:
                continue
            for c, b in self.rows[p].items():
                s = out.get(c, ZERO) - x * b
                if s:
                    out[c] = s
                else:
                    out.pop(c, None)
        return out

    def add(self, v: Vector) -> bool:
        """Insert v; returns False when v already lies in the span."""
        for c in v:
            if not 0 <= c < self.ambient_dim:
                raise DimensionError(f"coordinate {c} outside ambient dimension {self.ambient_dim}")
        w = self.reduce(v)
        if not w:
            return False
        q = min(w)
        inv = w[q].inverse()
        if not inv.is_one():
            w = {c: x * inv for c, x in w.items()}
        for p in list(self._users.get(q, ())):
            row = self.rows[p]
            x = row[q]
            for c, b in w.items():
                s = row.get(c, ZERO) - x * b
                if s:
                    if c not in row:
                        self._users.setdefault(c, set()).add(p)
                    row[c] = s
                else:
                    if c in row:
                        del row[c]
                        self._users[c].discard(p)
        self.rows[q] = w
        for c in w:
            self._users.setdefault(c, set()).add(q)
        return True

    def freeze(self) -> "Subspace":
        return Subspace(self.ambient_dim, {p: dict(r) for p, r in self.rows.items()})


class Subspace:
    """Immutable subspace; ``basis`` columns are in reduced echelon form."""

    __slots__ = ("ambient_dim", "_rows")

    def __init__(self, ambient_dim: int, rows: Dict[int, Vector] = None):
        self.ambient_dim = ambient_dim
        self._rows = dict(sorted((rows or {}).items()))

    # -- constructors
    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Vector]) -> "Subspace":
        builder = EchelonBuilder(ambient_dim)
        for v in vectors:
            builder.add(v)
        return builder.freeze()

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, {i: unit(i) for i in range(ambient_dim)})

    @classmethod
    def from_payload(cls, payload: SubspacePayload) -> "Subspace":
        basis = LinMap.from_payload(payload.basis)
        if basis.rows != payload.ambient_dim:
            raise DimensionError(f"basis has {basis.rows} rows, ambient dimension is {payload.ambient_dim}")
        return cls.span(payload.ambient_dim, [basis.column(j) for j in range(basis.cols)])

    def to_payload(self) -> SubspacePayload:
        return SubspacePayload(ambient_dim=self.ambient_dim, basis=self.basis.to_payload())

    # -- queries
    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(self._rows)

    def vectors(self) -> List[Vector]:
        return [dict(v) for v in self._rows.values()]

    @property
    def basis(self) -> LinMap:
        return LinMap.from_columns(self.ambient_dim, list(self._rows.values()))

    def __len__(self) -> int:
        return self.dim

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self._rows)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(f"ambient mismatch {self.ambient_dim} vs {other.ambient_dim}")

    def _builder(self) -> EchelonBuilder:
        builder = EchelonBuilder(self.ambient_dim)
        for p, row in self._rows.items():
            builder.rows[p] = dict(row)
            for c in row:
                builder._users.setdefault(c, set()).add(p)
        return builder

    def reduce(self, v: Vector) -> Vector:
        out = dict(v)
        for p in sorted(c for c in v if c in self._rows):
            x = out.get(p)
            if not x:
                continue
            for c, b in self._rows[p].items():
                s = out.get(c, ZERO) - x * b
                if s:
                    out[c] = s
                else:
                    out.pop(c, None)
        return out

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def __contains__(self, v: Vector) -> bool:
        return self.contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains(v) for v in other._rows.values())

    # -- operations
    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        builder = self._builder()
        for v in other._rows.values():
            builder.add(v)
        return builder.freeze()

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.sum(other)

    def extend(self, vectors: Iterable[Vector]) -> Tuple["Subspace", List[Vector]]:
        """Add vectors greedily; returns the enlarged space and the vectors that were new."""
        builder = self._builder()
        admitted = [v for v in vectors if builder.add(v)]
        return builder.freeze(), admitted

    def annihilator(self) -> "Subspace":
        """{x : <b, x> = 0 for every basis vector b} under the standard pairing."""
        vectors = []
        by_col: Dict[int, List[Tuple[int, object]]] = {}
        for p, row in self._rows.items():
            for c, x in row.items():
                if c != p:
                    by_col.setdefault(c, []).append((p, x))
        for j in range(self.ambient_dim):
            if j in self._rows:
                continue
            v = {j: ONE}
            for p, x in by_col.get(j, ()):
                v[p] = -x
            vectors.append(v)
        return Subspace.span(self.ambient_dim, vectors)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        if self.contains_subspace(other):
            return other
        if other.contains_subspace(self):
            return self
        constraints = self.annihilator().sum(other.annihilator())
        return constraints.annihilator()

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersect(other)

    def tensor(self, other: "Subspace") -> "Subspace":
        """self ⊗ other inside the Kronecker ambient space; stays in echelon form."""
        dim_o = other.ambient_dim
        rows = {}
        for p, u in self._rows.items():
            for q, w in other._rows.items():
                rows[p * dim_o + q] = vec_tensor(u, w, dim_o)
        return Subspace(self.ambient_dim * dim_o, rows)

    def image(self, f: LinMap) -> "Subspace":
        if f.cols != self.ambient_dim:
            raise DimensionError(f"map with {f.cols} columns on ambient {self.ambient_dim}")
        return Subspace.span(f.rows, (f.apply(v) for v in self._rows.values()))


def subspace_ops(a: Subspace, b: Subspace, op: str):
    """op in {sum, intersect, contains, equal}; contains asks whether b ⊆ a."""
    a._check_ambient(b)
    if op == "sum":
        return a.sum(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "contains":
        return a.contains_subspace(b)
    if op == "equal":
        return a == b
    raise ValueError(f"unknown subspace operation {op!r}")


def kernel_basis(f: LinMap) -> Subspace:
    """Right kernel {x : f x = 0}."""
    rowspace = Subspace.span(f.cols, f.row_vectors().values())
    kernel = rowspace.annihilator()
    LOGGER.debug("kernel of %dx%d: dim %d", f.rows, f.cols, kernel.dim)
    return kernel


def image_basis(f: LinMap) -> Subspace:
    return Subspace.span(f.rows, (col for _, col in f.columns()))


def independent(vectors: Sequence[Vector], ambient_dim: int) -> bool:
    builder = EchelonBuilder(ambient_dim)
    return all(builder.add(v) for v in vectors)


def direct_sum(parts: Sequence[Subspace], ambient_dim: Optional[int] = None) -> Tuple[Subspace, bool]:
    """Internal sum of parts and whether it is direct (dimensions add up)."""
    ambient = ambient_dim if ambient_dim is not None else parts[0].ambient_dim
    builder = EchelonBuilder(ambient)
    total = 0
    for part in parts:
        total += part.dim
        for v in part.vectors():
            builder.add(v)
    space = builder.freeze()
    return space, space.dim == total
