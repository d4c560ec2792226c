# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled group-coloring search.

Same contract as ``grunbaum._kernel_py``; groups are flattened into CSR
arrays and color masks live in C ``uint64`` words.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

IMPLEMENTATION = "cython"


cdef struct Problem:
    int m
    int k
    int ngroups
    int *ig_ptr      # item -> groups, CSR
    int *ig_idx
    uint64_t *used   # per group: colors taken
    int *color
    uint64_t full
    int ncolors
    bint require_all
    # enumeration
    bint stop
    long limit


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline uint64_t item_mask(Problem *p, int it) nogil:
    cdef uint64_t mask = 0
    cdef int j
    for j in range(p.ig_ptr[it], p.ig_ptr[it + 1]):
        mask |= p.used[p.ig_idx[j]]
    return mask


cdef inline void set_color(Problem *p, int it, int c) nogil:
    cdef int j
    cdef uint64_t bit = (<uint64_t>1) << c
    p.color[it] = c
    for j in range(p.ig_ptr[it], p.ig_ptr[it + 1]):
        p.used[p.ig_idx[j]] |= bit


cdef inline void clear_color(Problem *p, int it, int c) nogil:
    cdef int j
    cdef uint64_t bit = ~((<uint64_t>1) << c)
    for j in range(p.ig_ptr[it], p.ig_ptr[it + 1]):
        p.used[p.ig_idx[j]] &= bit


cdef int pick(Problem *p) nogil:
    cdef int it, free_, best = -1, best_free = 99
    for it in range(p.m):
        if p.color[it] >= 0:
            continue
        free_ = popcount(p.full & ~item_mask(p, it))
        if free_ < best_free:
            best = it
            best_free = free_
            if free_ <= 1:
                break
    return best


cdef bint solve_rec(Problem *p, int assigned) nogil:
    cdef int it, c, top, ncol
    cdef uint64_t mask
    if assigned == p.m:
        return (not p.require_all) or p.ncolors == p.k
    if p.require_all and p.m - assigned < p.k - p.ncolors:
        return False
    it = pick(p)
    mask = item_mask(p, it)
    ncol = p.ncolors
    top = ncol + 1 if ncol < p.k else p.k
    for c in range(top):
        if (mask >> c) & 1:
            continue
        set_color(p, it, c)
        if c == ncol:
            p.ncolors = ncol + 1
        if solve_rec(p, assigned + 1):
            return True
        p.ncolors = ncol
        clear_color(p, it, c)
        p.color[it] = -1
    return False


cdef void enum_rec(Problem *p, int it, list out):
    cdef int c, i
    cdef uint64_t mask
    if p.stop:
        return
    if it == p.m:
        out.append(tuple([p.color[i] for i in range(p.m)]))
        if p.limit >= 0 and len(out) >= p.limit:
            p.stop = True
        return
    mask = item_mask(p, it)
    for c in range(p.k):
        if (mask >> c) & 1:
            continue
        set_color(p, it, c)
        enum_rec(p, it + 1, out)
        clear_color(p, it, c)
        if p.stop:
            return


cdef int setup(Problem *p, int m, int k, list groups) except -1:
    cdef int total = 0, g, it, pos
    cdef list ig = [[] for _ in range(m)]
    for g in range(len(groups)):
        for it in groups[g]:
            if it < 0 or it >= m:
                raise ValueError("item index out of range")
            ig[it].append(g)
            total += 1
    p.m = m
    p.k = k
    p.ngroups = len(groups)
    p.full = ((<uint64_t>1) << k) - 1
    p.ncolors = 0
    p.stop = False
    p.ig_ptr = <int *>malloc((m + 1) * sizeof(int))
    p.ig_idx = <int *>malloc((total + 1) * sizeof(int))
    p.used = <uint64_t *>malloc((p.ngroups + 1) * sizeof(uint64_t))
    p.color = <int *>malloc((m + 1) * sizeof(int))
    if not (p.ig_ptr and p.ig_idx and p.used and p.color):
        teardown(p)
        raise MemoryError()
    pos = 0
    for it in range(m):
        p.ig_ptr[it] = pos
        for g in ig[it]:
            p.ig_idx[pos] = g
            pos += 1
        p.color[it] = -1
    p.ig_ptr[m] = pos
    for g in range(p.ngroups):
        p.used[g] = 0
    return 0


cdef void teardown(Problem *p):
    free(p.ig_ptr)
    free(p.ig_idx)
    free(p.used)
    free(p.color)
    p.ig_ptr = NULL
    p.ig_idx = NULL
    p.used = NULL
    p.color = NULL


def solve(int m, int k, groups, bint require_all=False):
    """Return one coloring as a list, or None (see ``_kernel_py.solve``)."""
    cdef Problem p
    cdef bint ok
    cdef list gl = [list(g) for g in groups]
    if k < 1 or k > 62:
        raise ValueError("k must be in 1..62")
    if any(len(g) > k for g in gl):
        return None
    if require_all and m < k:
        return None
    p.ig_ptr = NULL
    p.ig_idx = NULL
    p.used = NULL
    p.color = NULL
    setup(&p, m, k, gl)
    p.require_all = require_all
    try:
        with nogil:
            ok = solve_rec(&p, 0)
        if not ok:
            return None
        return [p.color[i] for i in range(m)]
    finally:
        teardown(&p)


def enumerate_all(int m, int k, groups, long limit=-1):
    """All colorings in lexicographic order (see ``_kernel_py.enumerate_all``)."""
    cdef Problem p
    cdef list out = []
    cdef list gl = [list(g) for g in groups]
    if k < 1 or k > 62:
        raise ValueError("k must be in 1..62")
    if any(len(g) > k for g in gl):
        return out
    if limit == 0:
        return out
    p.ig_ptr = NULL
    p.ig_idx = NULL
    p.used = NULL
    p.color = NULL
    setup(&p, m, k, gl)
    p.require_all = False
    p.limit = limit
    try:
        enum_rec(&p, 0, out)
    finally:
        teardown(&p)
    return out
