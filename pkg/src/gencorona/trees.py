"""Exhaustive generation of free trees, one per isomorphism class.

Trees are produced as level sequences (depths in preorder) of rooted
representatives, stepped with the Beyer-Hedetniemi rooted-tree successor and
filtered to the one rooting per free tree chosen by Wright, Richmond, Odlyzko
and McKay, which keeps the cost constant per tree on average.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graph import Graph, GraphError, from_edge_list

__all__ = ["MAX_ORDER", "free_trees", "count_free_trees", "trees_up_to", "graph_from_levels"]

MAX_ORDER = 20


def graph_from_levels(levels: list[int]) -> Graph:
    """Vertex ``i`` hangs under the closest earlier vertex one level up."""
    edges = []
    last_at: list[int] = []
    for v, depth in enumerate(levels):
        del last_at[depth:]
        if depth:
            edges.append((last_at[depth - 1], v))
        last_at.append(v)
    return from_edge_list(len(levels), edges)


def _rooted_successor(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_first_subtree(levels: list[int]) -> tuple[list[int], list[int]]:
    """Return the first child's subtree (re-rooted at depth 0) and the rest."""
    end = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            end = i
            break
    first = [d - 1 for d in levels[1:end]]
    rest = [0] + levels[end:]
    return first, rest


def _canonical_or_jump(levels: list[int]) -> list[int] | None:
    first, rest = _split_first_subtree(levels)
    h_first, h_rest = max(first), max(rest)
    ok = h_rest >= h_first
    if ok and h_rest == h_first:
        ok = len(first) < len(rest) or (len(first) == len(rest) and first <= rest)
    if ok:
        return levels
    p = len(first)
    jumped = _rooted_successor(levels, p)
    if jumped is None:
        return None
    if levels[p] > 2:
        height = max(_split_first_subtree(jumped)[0])
        tail = list(range(1, height + 2))
        jumped[len(jumped) - len(tail) :] = tail
    return jumped


def _level_sequences(n: int) -> Iterator[list[int]]:
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _canonical_or_jump(levels)
        if levels is None:
            return
        yield levels
        levels = _rooted_successor(levels)


def free_trees(n: int) -> Iterator[Graph]:
    """All free trees on ``n`` vertices, each isomorphism class once."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"tree order must lie in 1..{MAX_ORDER}, got {n}")
    if n <= 2:
        yield graph_from_levels(list(range(n)))
        return
    for levels in _level_sequences(n):
        yield graph_from_levels(levels)


def count_free_trees(n: int) -> int:
    return sum(1 for _ in free_trees(n))


def trees_up_to(n_max: int, n_min: int = 1) -> Iterable[Graph]:
    for n in range(n_min, n_max + 1):
        yield from free_trees(n)
