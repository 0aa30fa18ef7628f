"""Set partitions as restricted-growth strings, Stirling and Bell counts.

A set partition of ``[m] = {1, ..., m}`` is stored as its restricted-growth
string (rgs): position ``i`` holds the label of the block containing ``i``,
blocks being numbered in order of their smallest element.  This is exactly
the canonical orbit representative (the "block labelling") used by the
basis construction, so splitting the rgs at position ``l`` gives ``(I, J)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "SetPartition",
    "enumerate_partitions",
    "iter_partitions",
    "stirling2",
    "bell_restricted",
    "block_labelling",
]


@dataclass(frozen=True, order=True)
class SetPartition:
    """A partition of ``[m]`` encoded by its restricted-growth string.

    Ordering compares rgs tuples lexicographically, which is the canonical
    enumeration order.
    """

    rgs: tuple[int, ...]
    m: int = field(init=False, compare=False)
    num_blocks: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        rgs = tuple(int(x) for x in self.rgs)
        top = 0
        for x in rgs:
            if x < 1 or x > top + 1:
                raise ValueError(f"not a restricted-growth string: {rgs}")
            top = max(top, x)
        object.__setattr__(self, "rgs", rgs)
        object.__setattr__(self, "m", len(rgs))
        object.__setattr__(self, "num_blocks", top)

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]], m: int | None = None) -> "SetPartition":
        """Build from blocks of 1-based elements, in any order."""
        if m is None:
            m = sum(len(b) for b in blocks)
        label = [0] * m
        for b in sorted((sorted(b) for b in blocks if len(b)), key=lambda b: b[0]):
            tag = max(label, default=0) + 1
            for x in b:
                if not 1 <= x <= m or label[x - 1]:
                    raise ValueError(f"blocks do not partition [{m}]: {blocks}")
                label[x - 1] = tag
        if 0 in label:
            raise ValueError(f"blocks do not cover [{m}]: {blocks}")
        return cls(tuple(label))

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for i, b in enumerate(self.rgs, start=1):
            out[b - 1].append(i)
        return tuple(tuple(b) for b in out)

    def __str__(self) -> str:
        if not self.rgs:
            return "{}"
        return "{" + " | ".join(", ".join(map(str, b)) for b in self.blocks) + "}"

    def rgs_string(self) -> str:
        return "".join(str(x) if x < 10 else f"({x})" for x in self.rgs)


def iter_partitions(m: int, max_blocks: int) -> Iterator[SetPartition]:
    """Yield set partitions of ``[m]`` with at most ``max_blocks`` blocks,
    in lexicographic rgs order."""
    if m < 0 or max_blocks < 0:
        raise ValueError("m and max_blocks must be non-negative")
    if m == 0:
        yield SetPartition(())
        return
    if max_blocks == 0:
        return

    rgs = [1] * m
    # prefix_max[i] = max(rgs[0..i])
    prefix_max = [1] * m
    while True:
        yield SetPartition(tuple(rgs))
        # rightmost position that can still be incremented
        i = m - 1
        while i > 0:
            cap = min(prefix_max[i - 1] + 1, max_blocks)
            if rgs[i] < cap:
                break
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        prefix_max[i] = max(prefix_max[i - 1], rgs[i])
        for j in range(i + 1, m):
            rgs[j] = 1
            prefix_max[j] = prefix_max[i]


def enumerate_partitions(m: int, max_blocks: int) -> list[SetPartition]:
    return list(iter_partitions(m, max_blocks))


@lru_cache(maxsize=None)
def stirling2(m: int, t: int) -> int:
    """Stirling number of the second kind, S(m, t)."""
    if m < 0 or t < 0:
        return 0
    if m == 0 or t == 0:
        return int(m == t)
    if t > m:
        return 0
    # iterate rows to avoid deep recursion for large m
    row = [1] + [0] * t
    for i in range(1, m + 1):
        new = [0] * (t + 1)
        for j in range(1, min(i, t) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[t]


def bell_restricted(m: int, n: int) -> int:
    """Number of set partitions of ``[m]`` with at most ``n`` blocks."""
    if m == 0:
        return 1
    return sum(stirling2(m, t) for t in range(1, n + 1))


def block_labelling(pi: SetPartition, l: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the rgs of ``pi`` into the output part ``I`` (length ``l``) and
    input part ``J`` (length ``k``)."""
    if pi.m != l + k:
        raise ValueError(f"partition of [{pi.m}] cannot be split as l={l}, k={k}")
    return pi.rgs[:l], pi.rgs[l:]
