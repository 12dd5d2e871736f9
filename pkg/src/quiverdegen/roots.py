"""Positive roots of a Dynkin diagram by simple reflections.

Works only with the underlying graph of a quiver (as an edge list), never
with representations, so it can serve as an independent oracle for the
enumeration code.
"""
from __future__ import annotations

from collections import deque
from typing import List, Sequence, Tuple

MAX_ROOTS = 10_000


def _pair(x: Sequence[int], i: int, adjacency) -> int:
    # symmetric Cartan form (x, e_i) = 2 x_i - sum of neighbours (counted with multiplicity)
    return 2 * x[i] - sum(x[j] for j in adjacency[i])


def positive_roots(n: int, edges: Sequence[Tuple[int, int]]) -> List[Tuple[int, ...]]:
    """All positive roots of the graph on ``n`` vertices, sorted.

    Raises ``ValueError`` when the orbit of the simple roots under the Weyl
    group grows past :data:`MAX_ROOTS` (the graph is not Dynkin).
    """
    adjacency = [[] for _ in range(n)]
    for a, b in edges:
        if a == b:
            raise ValueError("loops have no real-root system")
        adjacency[a].append(b)
        adjacency[b].append(a)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = deque(simple)
    while todo:
        x = todo.popleft()
        for i in range(n):
            c = _pair(x, i, adjacency)
            if c == 0:
                continue
            y = tuple(x[j] - (c if j == i else 0) for j in range(n))
            if all(v >= 0 for v in y) and any(y) and y not in seen:
                seen.add(y)
                todo.append(y)
                if len(seen) > MAX_ROOTS:
                    raise ValueError("root system is infinite (graph is not Dynkin)")
    return sorted(seen)


def count_positive_roots(n: int, edges, max_dim: Sequence[int] = None) -> int:
    roots = positive_roots(n, edges)
    if max_dim is not None:
        roots = [r for r in roots if all(a <= b for a, b in zip(r, max_dim))]
    return len(roots)
