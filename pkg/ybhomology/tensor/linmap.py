# --- ybhomology/tensor/linmap.py ---
"""Sparse matrices over Q(y) acting on column vectors, plus V^{⊗n} index bookkeeping."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Sequence, Tuple

from ybhomology.errors import DimensionError
from ybhomology.scalar import ONE, ZERO, RatFunc, format_ratfunc
from ybhomology.schemas import MatrixPayload

Vector = Dict[int, RatFunc]


@dataclass(frozen=True)
class TensorIndex:
    """A basis tensor v_{i1} ⊗ ... ⊗ v_{in}; letters are 1-based."""

    letters: Tuple[int, ...]
    m: int

    def __post_init__(self):
        for letter in self.letters:
            if not 1 <= letter <= self.m:
                raise DimensionError(f"letter {letter} outside 1..{self.m}")

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def position(self) -> int:
        pos = 0
        for letter in self.letters:
            pos = pos * self.m + (letter - 1)
        return pos

    @classmethod
    def from_position(cls, pos: int, n: int, m: int) -> "TensorIndex":
        return cls(letters_of(pos, n, m), m)

    def __str__(self) -> str:
        return "".join(f"v{i}" for i in self.letters) or "1"


def index_of(letters: Sequence[int], m: int) -> int:
    pos = 0
    for letter in letters:
        pos = pos * m + (letter - 1)
    return pos


def letters_of(pos: int, n: int, m: int) -> Tuple[int, ...]:
    out = []
    for _ in range(n):
        pos, r = divmod(pos, m)
        out.append(r + 1)
    return tuple(reversed(out))


class LinMap:
    """Sparse rows x cols matrix stored column-wise; zeros are never stored."""

    __slots__ = ("rows", "cols", "_cols")

    def __init__(self, rows: int, cols: int, columns: Dict[int, Vector] = None):
        self.rows = rows
        self.cols = cols
        self._cols: Dict[int, Vector] = {}
        for j, col in (columns or {}).items():
            col = {i: v for i, v in col.items() if v}
            if col:
                self._cols[j] = col

    @classmethod
    def _raw(cls, rows: int, cols: int, columns: Dict[int, Vector]) -> "LinMap":
        f = object.__new__(cls)
        f.rows, f.cols, f._cols = rows, cols, columns
        return f

    # -- constructors
    @classmethod
    def identity(cls, n: int) -> "LinMap":
        return cls._raw(n, n, {j: {j: ONE} for j in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "LinMap":
        return cls._raw(rows, cols, {})

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[Tuple[int, int, object]]) -> "LinMap":
        columns: Dict[int, Vector] = {}
        for i, j, v in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"entry ({i}, {j}) outside {rows}x{cols}")
            v = RatFunc.coerce(v)
            col = columns.setdefault(j, {})
            col[i] = col.get(i, ZERO) + v
        return cls(rows, cols, columns)

    @classmethod
    def from_dense(cls, matrix: Sequence[Sequence[object]]) -> "LinMap":
        rows = len(matrix)
        cols = len(matrix[0]) if rows else 0
        if any(len(row) != cols for row in matrix):
            raise DimensionError("ragged matrix")
        return cls.from_entries(rows, cols, ((i, j, v) for i, row in enumerate(matrix)
                                             for j, v in enumerate(row)))

    @classmethod
    def from_columns(cls, rows: int, vectors: Sequence[Vector]) -> "LinMap":
        return cls(rows, len(vectors), {j: dict(v) for j, v in enumerate(vectors)})

    @classmethod
    def from_rows(cls, cols: int, vectors: Sequence[Vector]) -> "LinMap":
        return cls.from_entries(len(vectors), cols, ((i, j, v) for i, row in enumerate(vectors)
                                                     for j, v in row.items()))

    @classmethod
    def from_payload(cls, payload: MatrixPayload) -> "LinMap":
        """Matrix JSON: entries are [row, col, value] with value an int or an expression."""
        return cls.from_entries(payload.rows, payload.cols,
                                ((int(i), int(j), v) for i, j, v in payload.entries))

    def to_payload(self) -> MatrixPayload:
        return MatrixPayload(rows=self.rows, cols=self.cols,
                             entries=[[i, j, format_ratfunc(v)] for i, j, v in self.entries()])

    # -- access
    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    def column(self, j: int) -> Vector:
        return self._cols.get(j, {})

    def columns(self) -> Iterator[Tuple[int, Vector]]:
        for j in sorted(self._cols):
            yield j, self._cols[j]

    def __getitem__(self, key: Tuple[int, int]) -> RatFunc:
        i, j = key
        return self._cols.get(j, {}).get(i, ZERO)

    def entries(self) -> Iterator[Tuple[int, int, RatFunc]]:
        """Nonzero entries sorted by (col, row)."""
        for j in sorted(self._cols):
            col = self._cols[j]
            for i in sorted(col):
                yield i, j, col[i]

    def row_vectors(self) -> Dict[int, Vector]:
        rows: Dict[int, Vector] = {}
        for j, col in self._cols.items():
            for i, v in col.items():
                rows.setdefault(i, {})[j] = v
        return rows

    def to_dense(self) -> list:
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def is_zero(self) -> bool:
        return not self._cols

    def __eq__(self, other) -> bool:
        return isinstance(other, LinMap) and self.shape == other.shape and self._cols == other._cols

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries())))

    def __repr__(self) -> str:
        return f"LinMap({self.rows}x{self.cols}, nnz={self.nnz})"

    # -- algebra
    def _check_same_shape(self, other: "LinMap") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "LinMap") -> "LinMap":
        self._check_same_shape(other)
        columns = {j: dict(c) for j, c in self._cols.items()}
        for j, col in other._cols.items():
            target = columns.setdefault(j, {})
            for i, v in col.items():
                s = target.get(i, ZERO) + v
                if s:
                    target[i] = s
                else:
                    target.pop(i, None)
            if not target:
                del columns[j]
        return LinMap._raw(self.rows, self.cols, columns)

    def __neg__(self) -> "LinMap":
        return self.scale(-ONE)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def scale(self, c) -> "LinMap":
        c = RatFunc.coerce(c)
        if c.is_zero():
            return LinMap.zero(self.rows, self.cols)
        return LinMap._raw(self.rows, self.cols,
                           {j: {i: v * c for i, v in col.items()} for j, col in self._cols.items()})

    def apply(self, vec: Vector) -> Vector:
        out: Vector = {}
        for j, x in vec.items():
            if j >= self.cols or j < 0:
                raise DimensionError(f"vector index {j} outside {self.cols} columns")
            for i, v in self._cols.get(j, {}).items():
                out[i] = out.get(i, ZERO) + v * x
        return {i: v for i, v in out.items() if v}

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def transpose(self) -> "LinMap":
        return LinMap._raw(self.cols, self.rows, self.row_vectors())

    def kron(self, other: "LinMap") -> "LinMap":
        """Kronecker product self ⊗ other (left factor most significant)."""
        columns: Dict[int, Vector] = {}
        for j1, c1 in self._cols.items():
            for j2, c2 in other._cols.items():
                columns[j1 * other.cols + j2] = {
                    i1 * other.rows + i2: v1 * v2 for i1, v1 in c1.items() for i2, v2 in c2.items()
                }
        return LinMap._raw(self.rows * other.rows, self.cols * other.cols, columns)



def compose(f: LinMap, g: LinMap) -> LinMap:
    """f ∘ g, i.e. the matrix product f·g on column vectors."""
    if f.cols != g.rows:
        raise DimensionError(f"cannot compose {f.shape} with {g.shape}")
    columns: Dict[int, Vector] = {}
    fcols = f._cols
    for j, gcol in g._cols.items():
        acc: Vector = {}
        for k, gv in gcol.items():
            fcol = fcols.get(k)
            if not fcol:
                continue
            for i, fv in fcol.items():
                prod = fv * gv
                acc[i] = acc[i] + prod if i in acc else prod
        acc = {i: v for i, v in acc.items() if v}
        if acc:
            columns[j] = acc
    return LinMap._raw(f.rows, g.cols, columns)


def place(op: LinMap, left: int, right: int, m: int) -> LinMap:
    """id^{⊗left} ⊗ op ⊗ id^{⊗right} on V^{⊗(left+k+right)}, dim V = m."""
    if op.rows != op.cols:
        raise DimensionError("place needs a square operator")
    inner = op.rows
    outer = m ** right
    columns: Dict[int, Vector] = {}
    for a in range(m ** left):
        base = a * inner * outer
        for b, col in op._cols.items():
            for c in range(outer):
                columns[base + b * outer + c] = {base + r * outer + c: v for r, v in col.items()}
    size = (m ** left) * inner * outer
    return LinMap._raw(size, size, columns)


def hstack(maps: Sequence[LinMap]) -> LinMap:
    rows = maps[0].rows
    columns: Dict[int, Vector] = {}
    offset = 0
    for f in maps:
        if f.rows != rows:
            raise DimensionError("hstack row mismatch")
        for j, col in f._cols.items():
            columns[offset + j] = col
        offset += f.cols
    return LinMap._raw(rows, offset, columns)


def vstack(maps: Sequence[LinMap]) -> LinMap:
    cols = maps[0].cols
    columns: Dict[int, Vector] = {}
    offset = 0
    for f in maps:
        if f.cols != cols:
            raise DimensionError("vstack column mismatch")
        for j, col in f._cols.items():
            target = columns.setdefault(j, {})
            for i, v in col.items():
                target[offset + i] = v
        offset += f.rows
    return LinMap._raw(offset, cols, columns)


# -- vectors --------------------------------------------------------------

def unit(i: int) -> Vector:
    return {i: ONE}


def vec_add(u: Vector, v: Vector, c=ONE) -> Vector:
    """u + c·v."""
    out = dict(u)
    for i, x in v.items():
        s = out.get(i, ZERO) + x * c
        if s:
            out[i] = s
        else:
            out.pop(i, None)
    return out


def vec_sub(u: Vector, v: Vector) -> Vector:
    return vec_add(u, v, -ONE)


def vec_scale(v: Vector, c) -> Vector:
    c = RatFunc.coerce(c)
    if c.is_zero():
        return {}
    return {i: x * c for i, x in v.items()}


def vec_tensor(u: Vector, v: Vector, dim_v: int) -> Vector:
    """u ⊗ v with u the most significant factor."""
    return {i * dim_v + j: a * b for i, a in u.items() for j, b in v.items()}


def vec_from_letters(terms: Iterable[Tuple[object, Sequence[int]]], m: int) -> Vector:
    """Σ coeff · v_{letters}; coefficients may be strings, ints or RatFunc."""
    out: Vector = {}
    for coeff, letters in terms:
        out = vec_add(out, unit(index_of(letters, m)), RatFunc.coerce(coeff))
    return out
