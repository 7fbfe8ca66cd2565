# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled breadth-first word-length enumerator.

Packs a lattice point into one uint64: up to eight coordinate fields of
eight bits each, biased by +128.  A generator step is then a single
64-bit addition.  Adding a negative component in two's complement
always carries +1 into the next field (the biased value never drops
below zero), and a positive component never carries (it never reaches
256); that fixed carry pattern is subtracted from the packed delta up
front, so the plain addition is exact.

The caller guarantees dim <= 8 and that every reachable coordinate
stays within +-120, keeping each biased field inside (0, 256).
"""
from libc.stdint cimport uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector


def bfs_census(gens, int dim, int K, budget_bytes=None):
    """Count new points per level out to depth K.

    Returns (counts, completed).  completed < K means the memory budget
    was exhausted after finishing level `completed`.
    """
    cdef int m = dim
    cdef int i, comp, level
    cdef uint64_t packed, correction, origin, v, w
    cdef size_t fi, gi
    cdef vector[uint64_t] deltas
    cdef unordered_set[uint64_t] visited
    cdef vector[uint64_t] frontier, nxt
    cdef long long budget = -1
    cdef unsigned long long usage

    if budget_bytes is not None:
        budget = budget_bytes

    for g in gens:
        packed = 0
        correction = 0
        for i in range(m):
            comp = g[i]
            packed += (<uint64_t> (comp & 0xFF)) << (8 * i)
            if comp < 0:
                correction += (<uint64_t> 1) << (8 * (i + 1))
        deltas.push_back(packed - correction)

    origin = 0
    for i in range(m):
        origin += (<uint64_t> 128) << (8 * i)

    visited.insert(origin)
    frontier.push_back(origin)
    counts = [1]
    for level in range(1, K + 1):
        nxt.clear()
        for fi in range(frontier.size()):
            v = frontier[fi]
            for gi in range(deltas.size()):
                w = v + deltas[gi]
                if visited.insert(w).second:
                    nxt.push_back(w)
        counts.append(<object> nxt.size())
        frontier.swap(nxt)
        if budget >= 0 and level < K:
            # node + bucket overhead per set entry, plus the frontiers
            usage = visited.size() * 48 + (frontier.capacity() + nxt.capacity()) * 8
            if usage > <unsigned long long> budget:
                return counts, level
    return counts, K
