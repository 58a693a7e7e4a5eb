"""Edge subdivision and the domination subdivision number ``sd(G)``."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from enum import Enum

from .domination import domination_number, domination_number_bruteforce
from .graph import Graph, GraphError, NotATreeError, from_edge_list, is_connected, is_tree

__all__ = [
    "SubdivisionNotFound",
    "SubdivisionInvariantError",
    "TreeClass",
    "subdivide_edge",
    "subdivide_edge_set",
    "subdivision_number",
    "classify_tree",
]

TREE_MAX_K = 3


class SubdivisionNotFound(LookupError):
    def __init__(self, max_k: int):
        super().__init__(f"no edge set of size <= {max_k} raises the domination number")
        self.max_k = max_k


class SubdivisionInvariantError(AssertionError):
    """Subdividing edges lowered the domination number, which cannot happen."""


class TreeClass(str, Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"

    @property
    def sd(self) -> int:
        return int(self.value[1])


def _norm(e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    return (u, v) if u < v else (v, u)


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    return subdivide_edge_set(g, [e])


def subdivide_edge_set(g: Graph, s: Iterable[tuple[int, int]]) -> Graph:
    """Subdivide each listed edge once; new vertices take ids ``n, n+1, ...``
    in sorted edge order."""
    chosen = [_norm(e) for e in s]
    if len(set(chosen)) != len(chosen):
        raise GraphError("edge listed more than once")
    for u, v in chosen:
        if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count and g.has_edge(u, v)):
            raise GraphError(f"({u}, {v}) is not an edge")
    cut = set(chosen)
    n = g.vertex_count
    edges = [e for e in g.edges() if e not in cut]
    for i, (u, v) in enumerate(sorted(chosen)):
        edges += [(u, n + i), (n + i, v)]
    return from_edge_list(n + len(chosen), edges)


def _colex_subsets(m: int, k: int) -> Iterator[tuple[int, ...]]:
    # Gosper's hack enumerates k-bit masks in increasing order, i.e. colex order
    mask = (1 << k) - 1
    while mask < 1 << m:
        yield tuple(i for i in range(m) if mask >> i & 1)
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def _gamma(g: Graph) -> int:
    if is_tree(g) or g.vertex_count > 24:
        return domination_number(g)
    return domination_number_bruteforce(g)


def subdivision_number(g: Graph, max_k: int | None = None) -> int:
    """Least ``k <= max_k`` such that subdividing some ``k`` edges raises ``γ``.

    ``max_k`` defaults to 3 for trees and must be given for other graphs.
    Raises :class:`SubdivisionNotFound` when no such ``k`` exists.
    """
    if g.vertex_count < 3:
        raise GraphError("subdivision number needs at least three vertices")
    if not is_connected(g):
        raise GraphError("subdivision number needs a connected graph")
    if max_k is None:
        if not is_tree(g):
            raise GraphError("max_k is required for graphs that are not trees")
        max_k = TREE_MAX_K
    edges = g.edges()
    base = _gamma(g)
    for k in range(1, min(max_k, len(edges)) + 1):
        for idx in _colex_subsets(len(edges), k):
            gamma = _gamma(subdivide_edge_set(g, [edges[i] for i in idx]))
            if gamma < base:
                raise SubdivisionInvariantError(
                    f"subdividing {[edges[i] for i in idx]} lowered gamma from {base} to {gamma}"
                )
            if gamma > base:
                return k
    raise SubdivisionNotFound(max_k)


def classify_tree(t: Graph) -> TreeClass:
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    if t.vertex_count < 3:
        raise GraphError("classification needs a tree with at least three vertices")
    try:
        return TreeClass(f"S{subdivision_number(t, TREE_MAX_K)}")
    except SubdivisionNotFound as exc:
        raise SubdivisionInvariantError(
            f"tree with sd > 3 found, contradicting the tree bound: {t.edges()}"
        ) from exc
