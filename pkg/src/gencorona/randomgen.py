"""Seeded random trees and neighbourhood partitions."""

from __future__ import annotations

import heapq
import random

from .corona import NeighborhoodPartition
from .graph import Graph, from_edge_list


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices, decoded from a random Prüfer sequence."""
    if n <= 2:
        return from_edge_list(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return from_edge_list(n, edges)


def random_partition(rng: random.Random, g: Graph) -> NeighborhoodPartition:
    """Each neighbour of ``v`` goes into one of ``deg(v)`` buckets; empty buckets vanish."""
    family = {}
    for v in range(g.vertex_count):
        buckets: dict[int, list[int]] = {}
        for u in g.adjacency[v]:
            buckets.setdefault(rng.randrange(len(g.adjacency[v])), []).append(u)
        family[v] = list(buckets.values())
    return NeighborhoodPartition.from_blocks(family)
