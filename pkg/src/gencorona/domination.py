"""Domination number, 2-packings, and dominating 2-packings that contain every leaf."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations, islice

from .graph import INF, Graph, GraphError, NotATreeError, bfs_distances, is_tree, leaves

__all__ = [
    "is_dominating",
    "domination_number",
    "domination_number_bruteforce",
    "is_2packing",
    "iter_dominating_2packings_with_leaves",
    "dominating_2packings_with_leaves",
    "has_unique_dominating_2packing_with_leaves",
]

BRUTEFORCE_LIMIT = 24


def _members(g: Graph, s: Iterable[int]) -> set[int]:
    members = set(s)
    for v in members:
        g._check_vertex(v)
    return members


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    members = _members(g, s)
    return all(v in members or any(u in members for u in g.adjacency[v]) for v in range(g.vertex_count))


def _tree_domination(g: Graph) -> int:
    # states per vertex: in the set / dominated by a child / waiting on the parent
    parent = [-1] * g.vertex_count
    order = [0]
    seen = [False] * g.vertex_count
    seen[0] = True
    for u in order:
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    take = [1.0] * g.vertex_count
    covered = [0.0] * g.vertex_count
    waiting = [0.0] * g.vertex_count
    extra = [INF] * g.vertex_count  # cheapest upgrade of one child to "in the set"
    for v in reversed(order):
        covered[v] += extra[v]
        p = parent[v]
        if p < 0:
            break
        best_not_waiting = min(take[v], covered[v])
        take[p] += min(best_not_waiting, waiting[v])
        covered[p] += best_not_waiting
        waiting[p] += covered[v]
        extra[p] = min(extra[p], take[v] - best_not_waiting)
    return int(min(take[0], covered[0]))


def _branch_and_bound(g: Graph) -> int:
    n = g.vertex_count
    closed = [(1 << v) | sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    reach = max(bin(c).count("1") for c in closed)
    full = (1 << n) - 1
    best = n

    def search(dominated: int, size: int) -> None:
        nonlocal best
        if dominated == full:
            best = min(best, size)
            return
        left = bin(full & ~dominated).count("1")
        if size + -(-left // reach) >= best:
            return
        # branch on the undominated vertex with fewest ways to be dominated
        free = full & ~dominated
        options = None
        v = 0
        while free:
            if free & 1:
                cands = [v, *g.adjacency[v]]
                if options is None or len(cands) < len(options):
                    options = cands
            free >>= 1
            v += 1
        assert options is not None
        gain = lambda w: bin(closed[w] & ~dominated).count("1")  # noqa: E731
        for w in sorted(options, key=lambda w: (-gain(w), w)):
            search(dominated | closed[w], size + 1)

    search(0, 0)
    return best


def domination_number(g: Graph) -> int:
    """Tree dynamic programme for trees, branch and bound otherwise."""
    if g.vertex_count == 0:
        raise GraphError("domination number of the empty graph is undefined")
    if is_tree(g):
        return _tree_domination(g)
    return _branch_and_bound(g)


def domination_number_bruteforce(g: Graph) -> int:
    n = g.vertex_count
    if n == 0:
        raise GraphError("domination number of the empty graph is undefined")
    if n > BRUTEFORCE_LIMIT:
        raise GraphError(f"brute force limited to {BRUTEFORCE_LIMIT} vertices, got {n}")
    closed = [(1 << v) | sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            mask = 0
            for v in subset:
                mask |= closed[v]
            if mask == full:
                return k
    raise AssertionError("unreachable: V itself dominates")


def is_2packing(g: Graph, s: Iterable[int]) -> bool:
    members = sorted(_members(g, s))
    for i, v in enumerate(members[:-1]):
        dist = bfs_distances(g, v)
        if any(dist[u] <= 2 for u in members[i + 1 :]):
            return False
    return True


def iter_dominating_2packings_with_leaves(t: Graph) -> Iterator[frozenset[int]]:
    """Yield every dominating 2-packing containing all leaves, in a fixed order.

    Depth-first over the non-leaf vertices in id order (take before skip);
    a branch dies as soon as a vertex can no longer be dominated.
    """
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    if t.vertex_count < 2:
        raise GraphError("need a tree with at least two vertices")
    n = t.vertex_count
    dist = [bfs_distances(t, v) for v in range(n)]
    forced = sorted(leaves(t))
    if any(dist[a][b] <= 2 for a, b in combinations(forced, 2)):
        return
    cands = [v for v in range(n) if v not in set(forced) and all(dist[v][x] > 2 for x in forced)]
    pos = {v: i for i, v in enumerate(cands)}
    # index of the last candidate that could still dominate each vertex
    deadline = [max((pos[u] for u in (v, *t.adjacency[v]) if u in pos), default=-1) for v in range(n)]
    by_deadline: list[list[int]] = [[] for _ in range(len(cands) + 1)]
    for v in range(n):
        by_deadline[deadline[v] + 1].append(v)

    dominated = [0] * n
    for x in forced:
        for u in (x, *t.adjacency[x]):
            dominated[u] += 1
    chosen = list(forced)

    def all_settled(i: int) -> bool:
        return all(dominated[v] for v in by_deadline[i])

    def extend(i: int) -> Iterator[frozenset[int]]:
        if not all_settled(i):
            return
        if i == len(cands):
            yield frozenset(chosen)
            return
        c = cands[i]
        if all(dist[c][x] > 2 for x in chosen):
            chosen.append(c)
            for u in (c, *t.adjacency[c]):
                dominated[u] += 1
            yield from extend(i + 1)
            for u in (c, *t.adjacency[c]):
                dominated[u] -= 1
            chosen.pop()
        yield from extend(i + 1)

    yield from extend(0)


def dominating_2packings_with_leaves(t: Graph) -> list[frozenset[int]]:
    return list(iter_dominating_2packings_with_leaves(t))


def has_unique_dominating_2packing_with_leaves(t: Graph) -> tuple[bool, frozenset[int] | None]:
    """Decide uniqueness by looking for at most two such sets."""
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    if t.vertex_count < 3:
        raise GraphError("need a tree with at least three vertices")
    found = list(islice(iter_dominating_2packings_with_leaves(t), 2))
    if len(found) == 1:
        return True, found[0]
    return False, None
