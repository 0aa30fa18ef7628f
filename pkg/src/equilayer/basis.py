"""Bases of equivariant linear maps ``(R^n)^{(x)k} -> (R^n)^{(x)l}``.

Each basis element is a 0/1 matrix summing the matrix units over one S_n
orbit (or one half of a split orbit, for A_n).  Elements are ordered by
partition rgs, then sign class (unsplit < plus < minus), then feature
channel; that order is the parameter order used by ``weight_matrix``.

For the worked case n=2, k=2, l=1 the canonical order reproduces the usual
parameter layout: with the symmetric group the weight matrix is
``[[p0, p1, p2, p3], [p3, p2, p1, p0]]`` and with the alternating group it is
``[[p0, p2, p4, p6], [p7, p5, p3, p1]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator, Sequence

from ._backend import kernels
from .combinatorics import SetPartition, bell_restricted, iter_partitions, stirling2
from .group import GroupName, normalize_group
from .limits import check_size
from .orbits import Orbit, SignClass, splits
from .sparse import SparseMatrix, linearize

__all__ = [
    "BasisElement",
    "LayerBasis",
    "LocalElement",
    "LocalBasis",
    "matrix_from_orbit",
    "iter_layer_basis",
    "layer_basis",
    "an_dim",
    "layer_dim",
    "weight_matrix",
    "with_features",
    "bias_basis",
    "local_basis",
]


@dataclass(frozen=True)
class BasisElement:
    partition: SetPartition
    sign_class: SignClass
    matrix: SparseMatrix
    feature_row: int | None = None
    feature_col: int | None = None

    @property
    def label(self) -> str:
        tag = {"unsplit": "", "plus": "+", "minus": "-"}[self.sign_class]
        out = f"{self.partition}{tag}"
        if self.feature_row is not None:
            out += f"[{self.feature_row},{self.feature_col}]"
        return out


@dataclass(frozen=True)
class LayerBasis:
    n: int
    k: int
    l: int
    group: GroupName
    elements: tuple[BasisElement, ...]
    d_k: int = 1
    d_l: int = 1

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[BasisElement]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> BasisElement:
        return self.elements[i]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n**self.l * self.d_l, self.n**self.k * self.d_k)


def matrix_from_orbit(orbit: Orbit, n: int, l: int, k: int) -> SparseMatrix:
    rows, cols = n**l, n**k
    check_size(rows * cols, f"a {rows}x{cols} basis matrix")
    coords = []
    for x in orbit.members:
        if len(x) != l + k:
            raise ValueError(f"orbit member {x} has length {len(x)}, expected {l + k}")
        coords.append((linearize(x[:l], n), linearize(x[l:], n)))
    return SparseMatrix.ones_at(rows, cols, coords)


def _ones(rows: int, cols: int, rr: Sequence[int], cc: Sequence[int]) -> SparseMatrix:
    return SparseMatrix.ones_at(rows, cols, zip(rr, cc))


def iter_layer_basis(n: int, k: int, l: int, group: str) -> Iterator[BasisElement]:
    """Yield basis elements in canonical order without holding them all."""
    group = normalize_group(group)
    if n < 1 or k < 0 or l < 0:
        raise ValueError("need n >= 1 and k, l >= 0")
    rows, cols = n**l, n**k
    check_size(rows * cols, f"a {rows}x{cols} layer")
    for pi in iter_partitions(l + k, n):
        if group == "alternating" and splits(pi, n):
            rr, cc, ss = kernels.orbit_coo(pi.rgs, n, l, True)
            for cls, want in (("plus", 1), ("minus", -1)):
                keep = [i for i, s in enumerate(ss) if s == want]
                yield BasisElement(pi, cls, _ones(rows, cols, [rr[i] for i in keep], [cc[i] for i in keep]))
        else:
            rr, cc, _ = kernels.orbit_coo(pi.rgs, n, l, False)
            yield BasisElement(pi, "unsplit", _ones(rows, cols, rr, cc))


def layer_basis(n: int, k: int, l: int, group: str) -> LayerBasis:
    group = normalize_group(group)
    return LayerBasis(n, k, l, group, tuple(iter_layer_basis(n, k, l, group)))


def an_dim(n: int, k: int, l: int) -> int:
    m = l + k
    if n == 1:
        return bell_restricted(m, 1)
    if m == 0:
        return 1
    return (
        sum(stirling2(m, t) for t in range(1, n - 1))
        + 2 * stirling2(m, n - 1)
        + 2 * stirling2(m, n)
    )


def layer_dim(n: int, k: int, l: int, group: str) -> int:
    if normalize_group(group) == "symmetric":
        return bell_restricted(l + k, n)
    return an_dim(n, k, l)


def weight_matrix(basis: LayerBasis, params: Sequence[object]) -> SparseMatrix:
    """Sum of ``params[i] * basis[i]``, exactly."""
    if len(params) != len(basis.elements):
        raise ValueError(f"{len(params)} parameters for a basis of size {len(basis.elements)}")
    rows, cols = basis.shape
    data: dict[tuple[int, int], Fraction] = {}
    for p, el in zip(params, basis.elements):
        p = Fraction(p) if not isinstance(p, Fraction) else p
        if not p:
            continue
        for key, v in el.matrix.items():
            data[key] = data.get(key, 0) + p * v
    return SparseMatrix(rows, cols, data)


def with_features(basis: LayerBasis, d_k: int, d_l: int) -> LayerBasis:
    """Attach ``d_l`` output and ``d_k`` input channels.  Channel indices vary
    fastest: ``(I, i)`` sits at ``offset(I) * d_l + (i - 1)``."""
    if d_k < 1 or d_l < 1:
        raise ValueError("feature dimensions must be positive")
    if basis.d_k != 1 or basis.d_l != 1:
        raise ValueError("basis already carries feature channels")
    rows, cols = basis.shape
    check_size(rows * d_l * cols * d_k, f"a {rows * d_l}x{cols * d_k} featured layer")
    out = []
    for el in basis.elements:
        for i in range(1, d_l + 1):
            for j in range(1, d_k + 1):
                unit = SparseMatrix.ones_at(d_l, d_k, [(i - 1, j - 1)])
                out.append(replace(el, matrix=el.matrix.kron(unit), feature_row=i, feature_col=j))
    return replace(basis, elements=tuple(out), d_k=d_k, d_l=d_l)


def bias_basis(n: int, l: int, group: str) -> LayerBasis:
    """Basis of vectors in ``(R^n)^{(x)l}`` fixed by the group, as columns."""
    return layer_basis(n, 0, l, group)


@dataclass(frozen=True)
class LocalElement:
    components: tuple[BasisElement, ...]
    indices: tuple[int, ...]
    matrix: SparseMatrix

    @property
    def label(self) -> str:
        return " (x) ".join(c.label for c in self.components)


@dataclass(frozen=True)
class LocalBasis:
    factors: tuple[tuple[int, int, int, GroupName], ...]
    elements: tuple[LocalElement, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[LocalElement]:
        return iter(self.elements)

    @property
    def shape(self) -> tuple[int, int]:
        rows = cols = 1
        for n, k, l, _ in self.factors:
            rows *= n**l
            cols *= n**k
        return rows, cols


def local_basis(factors: Sequence[tuple[int, int, int, str]]) -> LocalBasis:
    """Kronecker products of one basis element per factor ``(n, k, l, group)``.

    The first factor's index varies slowest, in both the matrices and the
    element order.
    """
    if not factors:
        raise ValueError("need at least one factor")
    norm = tuple((n, k, l, normalize_group(g)) for n, k, l, g in factors)
    rows = cols = 1
    count = 1
    for n, k, l, g in norm:
        rows *= n**l
        cols *= n**k
        count *= layer_dim(n, k, l, g)
    check_size(rows * cols, f"a {rows}x{cols} local layer")
    check_size(count * rows, f"{count} local basis elements")
    bases = [layer_basis(n, k, l, g) for n, k, l, g in norm]

    elements: list[LocalElement] = []

    def build(depth: int, comps: tuple, idx: tuple, mat: SparseMatrix | None) -> None:
        if depth == len(bases):
            elements.append(LocalElement(comps, idx, mat))
            return
        for i, el in enumerate(bases[depth].elements):
            nxt = el.matrix if mat is None else mat.kron(el.matrix)
            build(depth + 1, comps + (el,), idx + (i,), nxt)

    build(0, (), (), None)
    return LocalBasis(norm, tuple(elements))
