"""Independent reference computations used only by the tests.

Nothing here calls into the code paths it is used to check: isomorphism is
decided by backtracking, free trees are counted through Prüfer sequences
with a separate integer AHU encoding, and domination/sd are found by plain
subset enumeration.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, product

import numpy as np
from numba import njit

from gencorona.graph import Graph, from_edge_list


def decode_prufer(seq: list[int], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return from_edge_list(n, edges)


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def spider(*legs: int) -> Graph:
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return from_edge_list(nxt, edges)


# -- isomorphism by backtracking


def isomorphic(g: Graph, h: Graph) -> bool:
    n = g.vertex_count
    if n != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(map(len, g.adjacency)) != sorted(map(len, h.adjacency)):
        return False
    order = sorted(range(n), key=lambda v: -len(g.adjacency[v]))
    image = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or len(h.adjacency[w]) != len(g.adjacency[v]):
                continue
            if all(
                (image[u] in h.adjacency[w]) == (u in g.adjacency[v])
                for u in order[:i]
            ):
                image[v], used[w] = w, True
                if place(i + 1):
                    return True
                image[v], used[w] = -1, False
        return False

    return place(0)


# -- exhaustive searches


def all_simple_paths_longest(g: Graph) -> int:
    best = 0

    def walk(v: int, seen: set[int], length: int) -> None:
        nonlocal best
        best = max(best, length)
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                walk(w, seen, length + 1)
                seen.discard(w)

    for v in range(g.vertex_count):
        walk(v, {v}, 0)
    return best


def bfs_dist(g: Graph, s: int) -> list[float]:
    d = [float("inf")] * g.vertex_count
    d[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w in g.adjacency[u]:
            if d[w] == float("inf"):
                d[w] = d[u] + 1
                q.append(w)
    return d


def gamma_by_subsets(g: Graph) -> int:
    n = g.vertex_count
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            chosen = set(s)
            if all(v in chosen or chosen & set(g.adjacency[v]) for v in range(n)):
                return k
    raise AssertionError


def subdivide(g: Graph, edges: list[tuple[int, int]]) -> Graph:
    n = g.vertex_count
    cut = {frozenset(e) for e in edges}
    out = [e for e in g.edges() if frozenset(e) not in cut]
    for i, (u, v) in enumerate(edges):
        out += [(u, n + i), (n + i, v)]
    return from_edge_list(n + len(edges), out)


def sd_by_subsets(g: Graph, max_k: int = 3) -> int | None:
    base = gamma_by_subsets(g)
    edges = g.edges()
    for k in range(1, max_k + 1):
        for s in combinations(edges, k):
            if gamma_by_subsets(subdivide(g, list(s))) > base:
                return k
    return None


def packings_by_subsets(t: Graph) -> list[frozenset[int]]:
    """Every dominating 2-packing containing all leaves, by scanning all subsets."""
    n = t.vertex_count
    dist = [bfs_dist(t, v) for v in range(n)]
    forced = {v for v in range(n) if len(t.adjacency[v]) == 1}
    out = []
    for bits in product((0, 1), repeat=n):
        s = {v for v in range(n) if bits[v]}
        if not forced <= s:
            continue
        if any(dist[a][b] <= 2 for a, b in combinations(sorted(s), 2)):
            continue
        if all(v in s or s & set(t.adjacency[v]) for v in range(n)):
            out.append(frozenset(s))
    return out


# -- free trees through Prüfer sequences


@njit(cache=True)
def _tree_code(n, adj):
    deg = np.zeros(n, np.int64)
    for v in range(n):
        for w in range(n):
            if adj[v, w]:
                deg[v] += 1
    # centres by leaf peeling
    removed = np.zeros(n, np.bool_)
    d = deg.copy()
    remaining = n
    layer = np.empty(n, np.int64)
    k = 0
    for v in range(n):
        if d[v] <= 1:
            layer[k] = v
            k += 1
    while remaining > 2:
        nxt = np.empty(n, np.int64)
        nk = 0
        for i in range(k):
            v = layer[i]
            removed[v] = True
            remaining -= 1
            for w in range(n):
                if adj[v, w] and not removed[w]:
                    d[w] -= 1
                    if d[w] == 1:
                        nxt[nk] = w
                        nk += 1
        layer = nxt
        k = nk
    best = -1
    for ci in range(n):
        if removed[ci]:
            continue
        order = np.empty(n, np.int64)
        parent = np.full(n, -1, np.int64)
        seen = np.zeros(n, np.bool_)
        order[0] = ci
        seen[ci] = True
        head, tail = 0, 1
        while head < tail:
            u = order[head]
            head += 1
            for w in range(n):
                if adj[u, w] and not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    order[tail] = w
                    tail += 1
        val = np.zeros(n, np.int64)
        length = np.zeros(n, np.int64)
        for i in range(n - 1, -1, -1):
            v = order[i]
            kids_v = np.empty(n, np.int64)
            kids_l = np.empty(n, np.int64)
            m = 0
            for w in range(n):
                if adj[v, w] and parent[w] == v:
                    # insertion sort by (length, value)
                    j = m
                    while j > 0 and (kids_l[j - 1] > length[w] or (kids_l[j - 1] == length[w] and kids_v[j - 1] > val[w])):
                        kids_v[j] = kids_v[j - 1]
                        kids_l[j] = kids_l[j - 1]
                        j -= 1
                    kids_v[j] = val[w]
                    kids_l[j] = length[w]
                    m += 1
            code = 1
            total = 1
            for j in range(m):
                code = (code << kids_l[j]) | kids_v[j]
                total += kids_l[j]
            val[v] = code << 1
            length[v] = total + 1
        if best < 0 or val[ci] < best:
            best = val[ci]
    return best


@njit(cache=True)
def _all_prufer_codes(n):
    total = n ** (n - 2)
    out = np.empty(total, np.int64)
    seq = np.zeros(max(n - 2, 1), np.int64)
    for idx in range(total):
        x = idx
        for i in range(n - 2):
            seq[i] = x % n
            x //= n
        degree = np.ones(n, np.int64)
        for i in range(n - 2):
            degree[seq[i]] += 1
        adj = np.zeros((n, n), np.bool_)
        for i in range(n - 2):
            leaf = 0
            while degree[leaf] != 1:
                leaf += 1
            adj[leaf, seq[i]] = True
            adj[seq[i], leaf] = True
            degree[leaf] -= 1
            degree[seq[i]] -= 1
        a = -1
        for v in range(n):
            if degree[v] == 1:
                if a < 0:
                    a = v
                else:
                    adj[a, v] = True
                    adj[v, a] = True
        out[idx] = _tree_code(n, adj)
    return out


def prufer_representatives(n: int) -> list[Graph]:
    """One labelled tree per isomorphism class on ``n >= 3`` vertices, found by
    decoding every Prüfer sequence and deduplicating by an integer AHU code."""
    codes = _all_prufer_codes(n)
    _, first = np.unique(codes, return_index=True)
    reps = []
    for idx in first.tolist():
        seq = []
        for _ in range(n - 2):
            seq.append(idx % n)
            idx //= n
        reps.append(decode_prufer(seq, n))
    return reps
