"""Brute-force verification of constructed bases.

Nothing here reuses the orbit enumeration or the sign-of-transporter
shortcut from the production path.  The equivariant subspace is found as the
exact null space of the commutation constraints ``A X - X B = 0`` over all
group elements, and the determinant functional of a partition is evaluated
by materialising its projection matrix and taking real determinants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .basis import LayerBasis, LocalBasis, layer_basis
from .combinatorics import SetPartition
from .group import Permutation, enumerate_group, generators, normalize_group, rho
from .limits import check_size
from .sparse import SparseMatrix, delinearize

__all__ = [
    "SubspaceReport",
    "Failure",
    "RationalEliminator",
    "nullspace",
    "rank",
    "group_action",
    "local_action",
    "constraint_rows",
    "equivariant_dimension_bruteforce",
    "commutant_basis",
    "verify_equivariance",
    "find_violation",
    "determinant",
    "projection_entries",
    "full_fpi_table",
    "check_basis",
    "check_local_basis",
]

Row = dict[int, Fraction]


class RationalEliminator:
    """Incremental reduced row echelon form over the rationals, sparse rows.

    Rows are kept fully reduced against each other, so the pivot set and the
    null space can be read off at any time.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, Row] = {}
        # column -> pivot columns whose row has a nonzero there
        self._users: dict[int, set[int]] = {}

    def _reduce(self, row: Row) -> Row:
        row = {c: v for c, v in row.items() if v}
        hits = [c for c in row if c in self.pivots]
        while hits:
            c = hits.pop()
            v = row.get(c)
            if not v:
                continue
            for cc, w in self.pivots[c].items():
                new = row.get(cc, 0) - v * w
                if new:
                    if cc not in row and cc in self.pivots and cc != c:
                        hits.append(cc)
                    row[cc] = new
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: dict[int, object]) -> bool:
        """Insert a row; return whether it raised the rank."""
        red = self._reduce({c: Fraction(v) for c, v in row.items()})
        if not red:
            return False
        p = min(red)
        inv = 1 / red[p]
        red = {c: v * inv for c, v in red.items()}
        # clear column p from existing pivot rows
        for q in list(self._users.get(p, ())):
            prow = self.pivots[q]
            f = prow.get(p)
            if not f:
                continue
            for c, v in red.items():
                new = prow.get(c, 0) - f * v
                if new:
                    if c not in prow:
                        self._users.setdefault(c, set()).add(q)
                    prow[c] = new
                else:
                    prow.pop(c, None)
                    self._users.get(c, set()).discard(q)
        self.pivots[p] = red
        for c in red:
            self._users.setdefault(c, set()).add(p)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self) -> list[Row]:
        free = [c for c in range(self.ncols) if c not in self.pivots]
        out = []
        for f in free:
            vec: Row = {f: Fraction(1)}
            for p in self._users.get(f, ()):
                if p == f:
                    continue
                v = self.pivots[p].get(f)
                if v:
                    vec[p] = -v
            out.append(vec)
        return out


def nullspace(rows: Iterable[dict[int, object]], ncols: int) -> list[Row]:
    elim = RationalEliminator(ncols)
    for r in rows:
        elim.add(r)
    return elim.nullspace()


def rank(rows: Iterable[dict[int, object]], ncols: int) -> int:
    elim = RationalEliminator(ncols)
    for r in rows:
        elim.add(r)
    return elim.rank


def _kron_identity(m: SparseMatrix, d: int) -> SparseMatrix:
    return m if d == 1 else m.kron(SparseMatrix.identity(d))


def group_action(n: int, k: int, l: int, group: str, d_k: int = 1, d_l: int = 1,
                 use_generators: bool = False) -> list[tuple[Permutation, SparseMatrix, SparseMatrix]]:
    """``(sigma, rho_l(sigma) (x) I_dl, rho_k(sigma) (x) I_dk)`` per group element."""
    elems = generators(n, group) if use_generators else enumerate_group(n, group)
    return [(s, _kron_identity(rho(s, l), d_l), _kron_identity(rho(s, k), d_k)) for s in elems]


def local_action(factors: Sequence[tuple[int, int, int, str]], use_generators: bool = False):
    """Action of the direct product on the external tensor product."""
    per = []
    for n, k, l, g in factors:
        per.append(group_action(n, k, l, g, use_generators=use_generators))
    out = []
    if use_generators:
        # generators of each factor, identity elsewhere
        for r, acts in enumerate(per):
            for s, a, b in acts:
                parts = []
                for q, (n, k, l, g) in enumerate(factors):
                    if q == r:
                        parts.append((s, a, b))
                    else:
                        e = Permutation.identity(n)
                        parts.append((e, rho(e, l), rho(e, k)))
                out.append(_combine(parts))
        return out
    for combo in product(*per):
        out.append(_combine(combo))
    return out


def _combine(parts):
    sigmas = tuple(p[0] for p in parts)
    a, b = parts[0][1], parts[0][2]
    for _, a2, b2 in parts[1:]:
        a, b = a.kron(a2), b.kron(b2)
    return sigmas, a, b


def constraint_rows(rows: int, cols: int, action) -> Iterable[dict[int, Fraction]]:
    """Rows of ``A X - X B = 0`` in the unknowns ``X[r, c]`` at ``r * cols + c``."""
    for _, a, b in action:
        a_by_row: dict[int, list] = {}
        for (r, s), v in a.items():
            a_by_row.setdefault(r, []).append((s, v))
        b_by_col: dict[int, list] = {}
        for (s, c), v in b.items():
            b_by_col.setdefault(c, []).append((s, v))
        for r in range(rows):
            for c in range(cols):
                eq: dict[int, Fraction] = {}
                for s, v in a_by_row.get(r, ()):
                    key = s * cols + c
                    eq[key] = eq.get(key, 0) + v
                for s, v in b_by_col.get(c, ()):
                    key = r * cols + s
                    eq[key] = eq.get(key, 0) - v
                eq = {key: v for key, v in eq.items() if v}
                if eq:
                    yield eq


def commutant_basis(rows: int, cols: int, action) -> list[SparseMatrix]:
    check_size(rows * cols * max(1, len(action)), "the commutation system")
    vecs = nullspace(constraint_rows(rows, cols, action), rows * cols)
    return [SparseMatrix(rows, cols, {divmod(i, cols): v for i, v in vec.items()}) for vec in vecs]


def equivariant_dimension_bruteforce(n: int, k: int, l: int, group: str,
                                     use_generators: bool = False) -> int:
    rows, cols = n**l, n**k
    action = group_action(n, k, l, group, use_generators=use_generators)
    check_size(rows * cols * len(action), "the commutation system")
    return rows * cols - rank(constraint_rows(rows, cols, action), rows * cols)


@dataclass
class Failure:
    element: int | None
    sigma: object
    detail: str


def find_violation(m: SparseMatrix, action) -> tuple[object, str] | None:
    for sigma, a, b in action:
        lhs = a @ m
        rhs = m @ b
        if lhs != rhs:
            diff = lhs - rhs
            (r, c), v = next(diff.items())
            return sigma, f"entry ({r}, {c}) of rho_l(g) M - M rho_k(g) is {v}"
    return None


def verify_equivariance(m: SparseMatrix, n: int, k: int, l: int, group: str,
                        d_k: int = 1, d_l: int = 1) -> tuple[bool, Failure | None]:
    """Exact check of ``rho_l(g) M = M rho_k(g)`` for every group element."""
    want = (n**l * d_l, n**k * d_k)
    if m.shape != want:
        raise ValueError(f"matrix shape {m.shape} does not match {want}")
    hit = find_violation(m, group_action(n, k, l, group, d_k, d_l))
    if hit is None:
        return True, None
    return False, Failure(None, hit[0], hit[1])


def determinant(matrix: Sequence[Sequence[object]]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in matrix]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
    return det


def _pattern(x: Sequence[int]) -> tuple[int, ...]:
    labels: dict[int, int] = {}
    out = []
    for v in x:
        if v not in labels:
            labels[v] = len(labels) + 1
        out.append(labels[v])
    return tuple(out)


def top_row_partition(pi: SetPartition, n: int) -> tuple[int, ...]:
    """Pattern on ``[n + l + k]``: a new top row of ``n`` vertices where vertex
    ``i`` joins block ``i`` of ``pi`` (for ``i <= t``), followed by the flattened
    partition.  With ``t = n - 1`` top vertex ``n`` is a singleton."""
    t = pi.num_blocks
    top = list(range(1, t + 1)) + ([n] if t == n - 1 else [])
    return _pattern(tuple(top) + pi.rgs)


def projection_entries(pi: SetPartition, n: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Nonzero entries of the projection ``(R^n)^{(x)(l+k)} -> (R^n)^{(x)n}``,
    as ``x -> [K, ...]``, found by scanning all of ``[n]^(n+l+k)``."""
    m = pi.m
    check_size(n ** (n + m), "the projection scan")
    want = top_row_partition(pi, n)
    out: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for full in product(range(1, n + 1), repeat=n + m):
        if _pattern(full) == want:
            out.setdefault(full[n:], []).append(full[:n])
    return out


def full_fpi_table(pi: SetPartition, n: int, l: int, k: int) -> dict[tuple[int, ...], int]:
    """Determinant functional of ``pi`` on every basis vector of ``(R^n)^{(x)(l+k)}``."""
    if pi.m != l + k:
        raise ValueError("partition size does not match l + k")
    if not (n >= 2 and pi.num_blocks >= n - 1):
        raise ValueError(f"the S_{n} orbit of {pi} does not split")
    proj = projection_entries(pi, n)
    table = {}
    for x in product(range(1, n + 1), repeat=l + k):
        total = Fraction(0)
        for K in proj.get(x, ()):
            # determinant map on e_K: det of the matrix with columns e_{k_1..k_n}
            cols = [[int(K[c] == r + 1) for c in range(n)] for r in range(n)]
            total += determinant(cols)
        assert total.denominator == 1 and total in (-1, 0, 1), (x, total)
        table[x] = int(total)
    return table


@dataclass
class SubspaceReport:
    dimension: int
    size: int
    basis_ok: bool
    span_ok: bool
    full_space: bool
    failures: list[Failure] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "basis_size": self.size,
            "basis_ok": self.basis_ok,
            "span_ok": self.span_ok,
            "full_space": self.full_space,
            "failures": [
                {"element": f.element, "group_element": str(f.sigma), "detail": f.detail}
                for f in self.failures
            ],
        }


def _vec(m: SparseMatrix) -> dict[int, Fraction]:
    return {r * m.cols + c: v for (r, c), v in m.items()}


def _check(matrices: list[SparseMatrix], rows: int, cols: int, action,
           disjoint_groups: list[object]) -> SubspaceReport:
    failures: list[Failure] = []
    for i, mat in enumerate(matrices):
        hit = find_violation(mat, action)
        if hit is not None:
            failures.append(Failure(i, hit[0], hit[1]))
    basis_ok = not failures

    seen: dict[tuple[object, tuple[int, int]], int] = {}
    for i, (mat, grp) in enumerate(zip(matrices, disjoint_groups)):
        for key in mat.support():
            j = seen.setdefault((grp, key), i)
            if j != i:
                basis_ok = False
                failures.append(Failure(i, None, f"support overlaps element {j} at {key}"))
                break

    oracle = commutant_basis(rows, cols, action)
    ncols = rows * cols
    elim = RationalEliminator(ncols)
    for mat in matrices:
        elim.add(_vec(mat))
    own_rank = elim.rank
    span_ok = own_rank == len(matrices) == len(oracle)
    if own_rank != len(matrices):
        failures.append(Failure(None, None, f"constructed elements have rank {own_rank} < {len(matrices)}"))
    if len(matrices) != len(oracle):
        failures.append(Failure(None, None, f"{len(matrices)} elements but the commutant has dimension {len(oracle)}"))
    for i, vec in enumerate(oracle):
        if elim.add(_vec(vec)):
            span_ok = False
            failures.append(Failure(None, None, f"oracle null vector {i} is outside the constructed span"))
    return SubspaceReport(len(oracle), len(matrices), basis_ok, span_ok, len(oracle) == ncols, failures)


def check_basis(basis: LayerBasis) -> SubspaceReport:
    rows, cols = basis.shape
    action = group_action(basis.n, basis.k, basis.l, basis.group, basis.d_k, basis.d_l)
    check_size(rows * cols * len(action), "the commutation system")
    return _check(
        [el.matrix for el in basis.elements], rows, cols, action,
        [(el.feature_row, el.feature_col) for el in basis.elements],
    )


def check_local_basis(basis: LocalBasis) -> SubspaceReport:
    rows, cols = basis.shape
    action = local_action(basis.factors)
    check_size(rows * cols * len(action), "the commutation system")
    # Kronecker products of disjoint-support factors have disjoint supports
    return _check([el.matrix for el in basis.elements], rows, cols, action, [None] * len(basis.elements))


def check_layer(n: int, k: int, l: int, group: str) -> SubspaceReport:
    return check_basis(layer_basis(n, k, l, normalize_group(group)))
