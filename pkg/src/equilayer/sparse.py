"""Coordinate-form sparse matrices with exact rational entries.

Coordinates are 0-based offsets.  A multi-index ``(i_1, ..., i_m)`` over
``[n]`` sits at offset ``sum((i_j - 1) * n**(m - j))`` (row-major).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

__all__ = ["SparseMatrix", "linearize", "delinearize"]


def linearize(index: Iterable[int], n: int) -> int:
    pos = 0
    for i in index:
        pos = pos * n + (i - 1)
    return pos


def delinearize(pos: int, n: int, order: int) -> tuple[int, ...]:
    out = [0] * order
    for j in range(order - 1, -1, -1):
        pos, r = divmod(pos, n)
        out[j] = r + 1
    return tuple(out)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


class SparseMatrix:
    """Immutable ``rows x cols`` matrix stored as ``{(row, col): Fraction}``.

    Zeros are never stored.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, data: Mapping[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        self.rows = rows
        self.cols = cols
        clean: dict[tuple[int, int], Fraction] = {}
        for (r, c), v in (data or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"coordinate ({r}, {c}) outside {rows}x{cols}")
            v = _frac(v)
            if v:
                clean[(r, c)] = v
        self._data = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, rows: int, cols: int, data: dict[tuple[int, int], Fraction]) -> "SparseMatrix":
        # caller guarantees bounds, Fraction values, no zeros
        obj = cls.__new__(cls)
        obj.rows, obj.cols, obj._data, obj._hash = rows, cols, data, None
        return obj

    @classmethod
    def ones_at(cls, rows: int, cols: int, coords: Iterable[tuple[int, int]]) -> "SparseMatrix":
        one = Fraction(1)
        data = {}
        for r, c in coords:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"coordinate ({r}, {c}) outside {rows}x{cols}")
            data[(r, c)] = one
        return cls._trusted(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls._trusted(rows, cols, {})

    @classmethod
    def identity(cls, size: int) -> "SparseMatrix":
        return cls.ones_at(size, size, ((i, i) for i in range(size)))

    @classmethod
    def from_dense(cls, rows: Iterable[Iterable[object]]) -> "SparseMatrix":
        grid = [list(r) for r in rows]
        ncols = len(grid[0]) if grid else 0
        data = {}
        for i, row in enumerate(grid):
            if len(row) != ncols:
                raise ValueError("ragged dense matrix")
            for j, v in enumerate(row):
                data[(i, j)] = v
        return cls(len(grid), ncols, data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self._data)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._data.get(key, Fraction(0))

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Nonzero entries sorted by (row, col)."""
        for key in sorted(self._data):
            yield key, self._data[key]

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._data)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._data.items():
            out[r][c] = v
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, frozenset(self._data.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def _check_same_shape(self, other: "SparseMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same_shape(other)
        data = dict(self._data)
        for key, v in other._data.items():
            s = data.get(key, 0) + v
            if s:
                data[key] = s
            else:
                data.pop(key, None)
        return SparseMatrix._trusted(self.rows, self.cols, data)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix._trusted(self.rows, self.cols, {k: -v for k, v in self._data.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, factor) -> "SparseMatrix":
        factor = _frac(factor)
        if not factor:
            return SparseMatrix.zeros(self.rows, self.cols)
        return SparseMatrix._trusted(self.rows, self.cols, {k: v * factor for k, v in self._data.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), v in other._data.items():
            by_row.setdefault(r, []).append((c, v))
        data: dict[tuple[int, int], Fraction] = {}
        for (r, a), v in self._data.items():
            for c, w in by_row.get(a, ()):
                key = (r, c)
                data[key] = data.get(key, 0) + v * w
        data = {k: v for k, v in data.items() if v}
        return SparseMatrix._trusted(self.rows, other.cols, data)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix._trusted(self.cols, self.rows, {(c, r): v for (r, c), v in self._data.items()})

    @property
    def T(self) -> "SparseMatrix":
        return self.transpose()

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        """Kronecker product; ``self``'s index varies slowest."""
        data = {}
        orow, ocol = other.rows, other.cols
        for (r1, c1), v1 in self._data.items():
            for (r2, c2), v2 in other._data.items():
                data[(r1 * orow + r2, c1 * ocol + c2)] = v1 * v2
        return SparseMatrix._trusted(self.rows * orow, self.cols * ocol, data)
