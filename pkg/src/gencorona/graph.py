"""Simple undirected graphs on dense integer ids, plus the tree utilities
(traversal, diametral paths, AHU canonical codes) the rest of the package
builds on."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

__all__ = [
    "External",
    "Internal",
    "Tag",
    "Graph",
    "GraphError",
    "NotATreeError",
    "from_edge_list",
    "is_connected",
    "is_tree",
    "distance",
    "bfs_distances",
    "leaves",
    "support_vertices",
    "longest_path",
    "tree_centers",
    "tree_canonical_code",
    "are_isomorphic_trees",
    "parse_edge_list",
    "format_edge_list",
    "to_dot",
]

INF = math.inf


class GraphError(ValueError):
    pass


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True, order=True)
class External:
    """The pendant copy ``(v, 1)`` of base vertex ``origin``."""

    origin: int

    def __str__(self) -> str:
        return f"({self.origin},1)"


@dataclass(frozen=True)
class Internal:
    """The vertex ``(v, A)`` for a block ``A`` of the partition at ``origin``."""

    origin: int
    block: frozenset[int]

    def __str__(self) -> str:
        inner = ",".join(map(str, sorted(self.block)))
        return f"({self.origin},{{{inner}}})"

    def sort_key(self) -> tuple[int, int]:
        return (self.origin, min(self.block))


Tag = External | Internal


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``; ``tags`` is
    either ``None`` or one corona provenance tag per vertex.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    tags: tuple[Tag, ...] | None = None

    @property
    def n(self) -> int:
        return self.vertex_count

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def untagged(self) -> Graph:
        return Graph(self.vertex_count, self.adjacency)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} out of range 0..{self.vertex_count - 1}")


def from_edge_list(
    n: int,
    edges: Iterable[tuple[int, int]],
    tags: Sequence[Tag] | None = None,
) -> Graph:
    """Build a graph on ``0..n-1``; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    if tags is not None:
        if len(tags) != n:
            raise GraphError("need exactly one tag per vertex")
        tags = tuple(tags)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), tags)


def bfs_distances(g: Graph, source: int) -> list[float]:
    g._check_vertex(source)
    dist: list[float] = [INF] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Edge count of a shortest u-v path; ``math.inf`` when disconnected."""
    g._check_vertex(v)
    return bfs_distances(g, u)[v]


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return INF not in bfs_distances(g, 0)


def is_tree(g: Graph) -> bool:
    return g.vertex_count >= 1 and g.edge_count == g.vertex_count - 1 and is_connected(g)


def leaves(g: Graph) -> set[int]:
    return {v for v in range(g.vertex_count) if len(g.adjacency[v]) == 1}


def support_vertices(g: Graph) -> tuple[set[int], set[int]]:
    """Return ``(supports, strong_supports)``."""
    counts: dict[int, int] = {}
    for leaf in leaves(g):
        s = g.adjacency[leaf][0]
        counts[s] = counts.get(s, 0) + 1
    return set(counts), {s for s, c in counts.items() if c >= 2}


def _require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise NotATreeError("input graph is not a tree")


# -- helpers over plain adjacency mappings (used for sub-trees during peeling)


def _bfs_tree(adj: Mapping[int, Sequence[int]], source: int) -> tuple[dict[int, int], dict[int, int]]:
    dist = {source: 0}
    parent = {source: -1}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def _farthest(dist: Mapping[int, int]) -> int:
    far = max(dist.values())
    return min(v for v, d in dist.items() if d == far)


def diametral_path(adj: Mapping[int, Sequence[int]]) -> list[int]:
    """Double-BFS diametral path of the tree given as an adjacency mapping.

    Starts from the smallest vertex; every farthest-vertex choice takes the
    smallest id, and neighbours are scanned in increasing order.
    """
    start = min(adj)
    u = _farthest(_bfs_tree(adj, start)[0])
    dist, parent = _bfs_tree(adj, u)
    w = _farthest(dist)
    path = [w]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def longest_path(t: Graph) -> list[int]:
    _require_tree(t)
    if t.vertex_count < 2:
        raise GraphError("longest_path needs at least two vertices")
    return diametral_path(dict(enumerate(t.adjacency)))


def tree_centers(t: Graph) -> list[int]:
    """The one or two centres, found by peeling leaves layer by layer."""
    _require_tree(t)
    n = t.vertex_count
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in t.adjacency]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in t.adjacency[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Graph, root: int, labels: Sequence[str] | None) -> str:
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in t.adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    children: dict[int, list[str]] = {v: [] for v in order}
    code = ""
    for v in reversed(order):
        sym = labels[v] if labels is not None else ""
        code = sym + "(" + "".join(sorted(children[v])) + ")"
        if parent[v] >= 0:
            children[parent[v]].append(code)
    return code


def tree_canonical_code(t: Graph, labels: Sequence[str] | Mapping[int, str] | None = None) -> str:
    """Centre-rooted AHU code; equal codes iff the (labelled) trees are isomorphic.

    Label symbols must not contain parentheses.
    """
    _require_tree(t)
    if labels is not None:
        if isinstance(labels, Mapping):
            labels = [labels[v] for v in range(t.vertex_count)]
        if len(labels) != t.vertex_count:
            raise GraphError("need one label per vertex")
        if any("(" in s or ")" in s for s in labels):
            raise GraphError("labels may not contain parentheses")
    return min(_rooted_code(t, c, labels) for c in tree_centers(t))


def are_isomorphic_trees(t1: Graph, t2: Graph) -> bool:
    if t1.vertex_count != t2.vertex_count:
        _require_tree(t1)
        _require_tree(t2)
        return False
    return tree_canonical_code(t1) == tree_canonical_code(t2)


# -- text formats


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise GraphError("empty edge-list input")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise GraphError("header line must be 'n m'")
    n, m = header
    if len(body) != m:
        raise GraphError(f"header promises {m} edges, found {len(body)}")
    if any(len(r) != 2 for r in body):
        raise GraphError("each edge line must hold exactly two ids")
    return from_edge_list(n, body)  # type: ignore[arg-type]


def format_edge_list(g: Graph, with_tags: bool = False) -> str:
    lines = []
    if with_tags and g.tags is not None:
        for v, tag in enumerate(g.tags):
            kind = "external" if isinstance(tag, External) else "internal"
            lines.append(f"# {v} {kind} {tag}")
    edges = g.edges()
    lines.append(f"{g.vertex_count} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        attrs = []
        if g.tags is not None:
            tag = g.tags[v]
            attrs.append(f'label="{tag}"')
            if isinstance(tag, External):
                attrs.append("shape=square")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
