"""Pure-Python hot kernels.

Reference implementation for ``_kernels.pyx``; both modules expose the same
functions with identical outputs.  Multi-index entries are 1-based, offsets
0-based.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

BACKEND = "python"


def perm_sign(images: Sequence[int]) -> int:
    """Sign of a permutation given 1-based images, by cycle parity."""
    n = len(images)
    seen = [False] * n
    parity = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
            length += 1
        parity ^= (length - 1) & 1
    return -1 if parity else 1


def _completed_sign(phi: Sequence[int], n: int) -> int:
    # phi is injective [t] -> [n] with t in {n-1, n}; the completion to a
    # permutation of [n] is unique
    if len(phi) == n:
        return perm_sign(phi)
    missing = n * (n + 1) // 2 - sum(phi)
    return perm_sign(tuple(phi) + (missing,))


def orbit_table(rgs: Sequence[int], n: int, signed: bool) -> tuple[list[tuple[int, ...]], list[int]]:
    """All multi-indices with the equality pattern of ``rgs``, in lexicographic
    order, and (when ``signed``) the sign of the permutation carrying the
    block labelling onto each one.  Unsigned rows get sign 0."""
    t = max(rgs, default=0)
    if signed and not (n >= 2 and t >= n - 1):
        raise ValueError(f"orbit with {t} blocks has no unique transporter in S_{n}")
    labels = [x - 1 for x in rgs]
    members = []
    signs = []
    # permutations() of range(1, n+1) taken t at a time is lexicographic
    for phi in permutations(range(1, n + 1), t):
        members.append(tuple(phi[x] for x in labels))
        signs.append(_completed_sign(phi, n) if signed else 0)
    return members, signs


def orbit_coo(rgs: Sequence[int], n: int, l: int, signed: bool) -> tuple[list[int], list[int], list[int]]:
    """Row/column offsets of each orbit member split at position ``l``."""
    t = max(rgs, default=0)
    if signed and not (n >= 2 and t >= n - 1):
        raise ValueError(f"orbit with {t} blocks has no unique transporter in S_{n}")
    labels = [x - 1 for x in rgs]
    head, tail = labels[:l], labels[l:]
    rows, cols, signs = [], [], []
    for phi in permutations(range(n), t):
        r = 0
        for x in head:
            r = r * n + phi[x]
        c = 0
        for x in tail:
            c = c * n + phi[x]
        rows.append(r)
        cols.append(c)
        if signed:
            signs.append(_completed_sign([p + 1 for p in phi], n))
        else:
            signs.append(0)
    return rows, cols, signs


def perm_offsets(images: Sequence[int], order: int) -> list[int]:
    """``out[c]`` is the offset of ``sigma(I)`` where ``I`` sits at offset ``c``."""
    n = len(images)
    out = [0]
    stride = 1
    for _ in range(order):
        # new slowest axis
        out = [(images[i] - 1) * stride + o for i in range(n) for o in out]
        stride *= n
    return out
