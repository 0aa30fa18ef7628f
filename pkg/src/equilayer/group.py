"""Permutations of ``[n]``, the groups S_n and A_n, and their tensor-power
representations.

Composition is ``(sigma * tau)(i) = sigma(tau(i))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Literal, Sequence

from ._backend import kernels
from .limits import DEFAULT_MAX_DEGREE, ResourceBoundError, check_size
from .sparse import SparseMatrix

__all__ = [
    "Permutation",
    "GroupName",
    "normalize_group",
    "sign",
    "act",
    "enumerate_group",
    "generators",
    "group_order",
    "rho",
]

GroupName = Literal["symmetric", "alternating"]

_ALIASES = {
    "symmetric": "symmetric",
    "sn": "symmetric",
    "s": "symmetric",
    "alternating": "alternating",
    "an": "alternating",
    "a": "alternating",
}


def normalize_group(name: str) -> GroupName:
    try:
        return _ALIASES[name.lower()]  # type: ignore[return-value]
    except KeyError:
        raise ValueError(f"unknown group {name!r}; expected 'sn' or 'an'") from None


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``[n]``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of [{len(images)}]: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def sign(sigma: Permutation) -> int:
    return kernels.perm_sign(sigma.images)


def act(sigma: Permutation, x: Sequence[int]) -> tuple[int, ...]:
    n = sigma.degree
    img = sigma.images
    out = []
    for i in x:
        if not 1 <= i <= n:
            raise ValueError(f"multi-index entry {i} outside [1, {n}]")
        out.append(img[i - 1])
    return tuple(out)


def group_order(n: int, which: GroupName) -> int:
    order = 1
    for i in range(2, n + 1):
        order *= i
    if normalize_group(which) == "alternating" and n >= 2:
        order //= 2
    return order


def enumerate_group(n: int, which: str, max_degree: int = DEFAULT_MAX_DEGREE) -> list[Permutation]:
    """All elements of S_n or A_n in lexicographic order of images."""
    which = normalize_group(which)
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_degree:
        raise ResourceBoundError(f"refusing to enumerate a group of degree {n} > {max_degree}")
    perms = (Permutation(p) for p in permutations(range(1, n + 1)))
    if which == "symmetric":
        return list(perms)
    return [p for p in perms if sign(p) == 1]


def generators(n: int, which: str) -> list[Permutation]:
    """A generating set: transpositions (1 i) for S_n, 3-cycles (1 2 i) for A_n."""
    which = normalize_group(which)
    if which == "symmetric":
        gens = [Permutation.from_cycles(n, (1, i)) for i in range(2, n + 1)]
    else:
        gens = [Permutation.from_cycles(n, (1, 2, i)) for i in range(3, n + 1)]
    return gens or [Permutation.identity(n)]


def rho(sigma: Permutation, order: int) -> SparseMatrix:
    """Permutation matrix of ``sigma`` acting on the ``order``-th tensor power:
    column ``offset(I)`` carries a single 1 in row ``offset(sigma(I))``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    size = sigma.degree**order
    check_size(size, f"rho on ({sigma.degree})^{order}")
    targets = kernels.perm_offsets(sigma.images, order)
    return SparseMatrix.ones_at(size, size, ((r, c) for c, r in enumerate(targets)))


def offsets_map(sigma: Permutation, order: int) -> list[int]:
    """Index form of ``rho``: position ``c`` maps to ``offsets_map[c]``."""
    check_size(sigma.degree**order, f"rho on ({sigma.degree})^{order}")
    return kernels.perm_offsets(sigma.images, order)
