# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contract as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

BACKEND = "cython"


cdef int _cycle_sign(const long *perm, int n, char *seen) noexcept nogil:
    # perm is 0-based
    cdef int start, j, parity = 0, length
    for start in range(n):
        seen[start] = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
            length += 1
        parity ^= (length - 1) & 1
    return -1 if parity else 1


def perm_sign(images):
    """Sign of a permutation given 1-based images, by cycle parity."""
    cdef int n = len(images), i
    cdef long *perm = <long *> malloc(max(n, 1) * sizeof(long))
    cdef char *seen = <char *> malloc(max(n, 1))
    cdef int s
    try:
        for i in range(n):
            perm[i] = images[i] - 1
        s = _cycle_sign(perm, n, seen)
    finally:
        free(perm)
        free(seen)
    return s


cdef long _falling(int n, int t):
    cdef long out = 1
    cdef int i
    for i in range(t):
        out *= n - i
    return out


cdef void _walk(int n, int t, int m, int l, const long *labels, bint signed,
                long *members, long *rows, long *cols, signed char *signs) noexcept nogil:
    # Lexicographic enumeration of injections [t] -> [n] (0-based values).
    cdef long *phi = <long *> malloc((n + 1) * sizeof(long))
    cdef char *used = <char *> malloc(n + 1)
    cdef char *seen = <char *> malloc(n + 1)
    cdef long count = 0, r, c, total
    cdef int depth, i, v
    for i in range(n):
        used[i] = 0
    if t == 0:
        # the empty partition: a single empty multi-index
        if rows != NULL:
            rows[0] = 0
            cols[0] = 0
        signs[0] = 0
        free(phi); free(used); free(seen)
        return
    depth = 0
    phi[0] = -1
    while depth >= 0:
        # advance phi[depth] to the next unused value
        if phi[depth] >= 0:
            used[phi[depth]] = 0
        v = phi[depth] + 1
        while v < n and used[v]:
            v += 1
        if v >= n:
            phi[depth] = -1
            depth -= 1
            continue
        phi[depth] = v
        used[v] = 1
        if depth + 1 < t:
            depth += 1
            phi[depth] = -1
            continue
        # complete injection
        if members != NULL:
            for i in range(m):
                members[count * m + i] = phi[labels[i]] + 1
        if rows != NULL:
            r = 0
            for i in range(l):
                r = r * n + phi[labels[i]]
            c = 0
            for i in range(l, m):
                c = c * n + phi[labels[i]]
            rows[count] = r
            cols[count] = c
        if signed:
            if t < n:
                total = n * (n - 1) // 2
                for i in range(t):
                    total -= phi[i]
                phi[t] = total
            signs[count] = _cycle_sign(phi, n, seen)
        else:
            signs[count] = 0
        count += 1
    free(phi); free(used); free(seen)


cdef tuple _run(rgs, int n, int l, bint signed, bint want_members, bint want_coo):
    cdef int m = len(rgs), i
    cdef int t = max(rgs) if m else 0
    if signed and not (n >= 2 and t >= n - 1):
        raise ValueError(f"orbit with {t} blocks has no unique transporter in S_{n}")
    cdef long total = _falling(n, t) if t <= n else 0
    cdef cnp.ndarray[long, ndim=1] lab = np.empty(max(m, 1), dtype=np.int_)
    for i in range(m):
        lab[i] = rgs[i] - 1
    cdef cnp.ndarray[long, ndim=1] mem = np.zeros(max(total * m, 1), dtype=np.int_)
    cdef cnp.ndarray[long, ndim=1] rr = np.zeros(max(total, 1), dtype=np.int_)
    cdef cnp.ndarray[long, ndim=1] cc = np.zeros(max(total, 1), dtype=np.int_)
    cdef cnp.ndarray[signed char, ndim=1] ss = np.zeros(max(total, 1), dtype=np.int8)
    if total:
        _walk(n, t, m, l, <long *> lab.data, signed,
              <long *> mem.data if want_members else NULL,
              <long *> rr.data if want_coo else NULL,
              <long *> cc.data if want_coo else NULL,
              <signed char *> ss.data)
    return total, mem, rr, cc, ss


def orbit_table(rgs, int n, bint signed):
    """All multi-indices with the equality pattern of ``rgs`` in lexicographic
    order, plus transporter signs (0 when unsigned)."""
    rgs = tuple(rgs)
    total, mem, _, _, ss = _run(rgs, n, 0, signed, True, False)
    m = len(rgs)
    if m == 0:
        return [()] * total, ss[:total].tolist()
    members = [tuple(row) for row in mem[: total * m].reshape(total, m).tolist()]
    return members, ss[:total].tolist()


def orbit_coo(rgs, int n, int l, bint signed):
    """Row/column offsets of each orbit member split at position ``l``."""
    rgs = tuple(rgs)
    total, _, rr, cc, ss = _run(rgs, n, l, signed, False, True)
    return rr[:total].tolist(), cc[:total].tolist(), ss[:total].tolist()


def perm_offsets(images, int order):
    """``out[c]`` is the offset of ``sigma(I)`` where ``I`` sits at offset ``c``."""
    cdef int n = len(images), j
    cdef long size = 1, c, rest, off, digit
    for j in range(order):
        size *= n
    cdef cnp.ndarray[long, ndim=1] img = np.empty(max(n, 1), dtype=np.int_)
    for j in range(n):
        img[j] = images[j] - 1
    cdef cnp.ndarray[long, ndim=1] out = np.empty(size, dtype=np.int_)
    cdef long stride
    with nogil:
        for c in range(size):
            rest = c
            off = 0
            stride = 1
            for j in range(order):
                digit = rest % n
                rest = rest // n
                off += img[digit] * stride
                stride *= n
            out[c] = off
    return out.tolist()
