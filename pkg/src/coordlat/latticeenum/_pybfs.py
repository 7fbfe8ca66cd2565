"""Pure-Python breadth-first word-length enumerator.

Reference backend: coordinates live in plain tuples, the visited set is
a Python set.  Correct for any dimension and any depth, at roughly two
orders of magnitude the cost of the compiled kernel.
"""
from __future__ import annotations

from typing import Optional


def bfs_census(
    gens: tuple[tuple[int, ...], ...],
    dim: int,
    K: int,
    budget_bytes: Optional[int] = None,
) -> tuple[list[int], int]:
    """Count new points per level out to depth K.

    Returns (counts, completed).  completed < K means the memory budget
    was exhausted after finishing level `completed`; counts then holds
    exactly completed+1 entries.
    """
    # tuple header + dim small-int slots + set slot, all approximate
    per_entry = 96 + 8 * dim
    origin = (0,) * dim
    visited = {origin}
    frontier = [origin]
    counts = [1]
    for level in range(1, K + 1):
        nxt = []
        for pt in frontier:
            for g in gens:
                w = tuple(a + b for a, b in zip(pt, g))
                if w not in visited:
                    visited.add(w)
                    nxt.append(w)
        counts.append(len(nxt))
        frontier = nxt
        if (
            budget_bytes is not None
            and level < K
            and (len(visited) + len(frontier)) * per_entry > budget_bytes
        ):
            return counts, level
    return counts, K
