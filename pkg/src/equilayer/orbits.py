"""S_n orbits on ``[n]^(l+k)`` indexed by set partitions, and their splitting
into two A_n orbits.

The orbit of a partition with ``t`` blocks is the set of multi-indices whose
equality pattern is the partition: positions hold equal values exactly when
they share a block.  When ``t`` is ``n - 1`` or ``n`` the permutation carrying
the block labelling onto a member is unique, and its sign separates the two
A_n orbits.  That sign equals the determinant map applied to the image of the
member under the projection attached to the partition, so no determinant is
ever formed here (``oracle.full_fpi_table`` evaluates the composite
literally, for cross-checking).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from ._backend import kernels
from .combinatorics import SetPartition
from .group import Permutation, sign

__all__ = [
    "Orbit",
    "SignClass",
    "sn_orbit",
    "splits",
    "transporter",
    "jellyfish_sign",
    "split_orbit",
    "equality_pattern",
]

SignClass = Literal["unsplit", "plus", "minus"]
SIGN_CLASS_ORDER = {"unsplit": 0, "plus": 1, "minus": 2}


@dataclass(frozen=True)
class Orbit:
    partition: SetPartition
    n: int
    l: int
    k: int
    members: tuple[tuple[int, ...], ...]
    sign_class: SignClass = "unsplit"

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self._member_set

    @property
    def _member_set(self) -> frozenset:
        cached = self.__dict__.get("_cache")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_cache", cached)
        return cached


def _check(pi: SetPartition, n: int, l: int, k: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if pi.m != l + k:
        raise ValueError(f"partition of [{pi.m}] does not match l + k = {l + k}")
    if pi.num_blocks > n:
        raise ValueError(f"partition has {pi.num_blocks} blocks, more than n = {n}")


def equality_pattern(x: Sequence[int]) -> tuple[int, ...]:
    """Relabel values by first occurrence; equals the rgs of the orbit of ``x``."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(v, len(seen) + 1) for v in x)


def sn_orbit(pi: SetPartition, n: int, l: int, k: int) -> Orbit:
    _check(pi, n, l, k)
    members, _ = kernels.orbit_table(pi.rgs, n, False)
    return Orbit(pi, n, l, k, tuple(members))


def splits(pi: SetPartition, n: int) -> bool:
    if pi.num_blocks > n:
        raise ValueError(f"partition has {pi.num_blocks} blocks, more than n = {n}")
    return n >= 2 and pi.num_blocks >= n - 1


def transporter(pi: SetPartition, x: Sequence[int], n: int) -> Permutation:
    """The unique ``sigma`` in S_n with ``sigma(rgs(pi)) = x``.

    Defined only when ``pi`` has ``n - 1`` or ``n`` blocks; otherwise the
    stabiliser of the block labelling is nontrivial.
    """
    t = pi.num_blocks
    if not splits(pi, n):
        raise ValueError(f"transporter is not unique for {t} blocks in S_{n}")
    x = tuple(x)
    if len(x) != pi.m or any(not 1 <= v <= n for v in x):
        raise ValueError(f"{x} is not a multi-index in [{n}]^{pi.m}")
    if equality_pattern(x) != pi.rgs:
        raise ValueError(f"{x} is not in the S_{n} orbit of {pi}")
    images = [0] * n
    for pos, label in enumerate(pi.rgs):
        images[label - 1] = x[pos]
    if t == n - 1:
        (images[n - 1],) = set(range(1, n + 1)).difference(images[: n - 1])
    sigma = Permutation(tuple(images))
    assert tuple(sigma(v) for v in pi.rgs) == x
    return sigma


def jellyfish_sign(pi: SetPartition, x: Sequence[int], n: int) -> int:
    """Value (+1 or -1) of the partition's determinant functional at ``e_x``,
    for ``x`` on the orbit of ``pi``."""
    return sign(transporter(pi, x, n))


def split_orbit(pi: SetPartition, n: int, l: int, k: int) -> tuple[Orbit, Orbit]:
    """The two A_n orbits (plus, minus) making up the S_n orbit of ``pi``."""
    _check(pi, n, l, k)
    if not splits(pi, n):
        raise ValueError(f"the S_{n} orbit of {pi} does not split")
    members, signs = kernels.orbit_table(pi.rgs, n, True)
    plus = tuple(x for x, s in zip(members, signs) if s == 1)
    minus = tuple(x for x, s in zip(members, signs) if s == -1)
    return Orbit(pi, n, l, k, plus, "plus"), Orbit(pi, n, l, k, minus, "minus")
