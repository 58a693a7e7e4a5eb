"""Trees with domination subdivision number 3, seen four independent ways:
by brute-force ``sd``, by the unique dominating 2-packing through all
leaves, by membership in the labelled family generated from ``P4``, and by
being a general corona of a smaller tree (with a checkable certificate)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .corona import (
    CoronaGraph,
    NeighborhoodPartition,
    contract_internal_pair,
    general_corona,
    is_refinement,
    partition_to_json,
    singleton_partition,
    split_internal,
    trivial_partition,
    validate_partition,
)
from .domination import has_unique_dominating_2packing_with_leaves
from .graph import (
    External,
    Graph,
    GraphError,
    Internal,
    NotATreeError,
    Tag,
    are_isomorphic_trees,
    diametral_path,
    from_edge_list,
    is_tree,
    tree_canonical_code,
)
from .subdivision import classify_tree

__all__ = [
    "LabeledTreeAB",
    "labeled_p4",
    "f_extend",
    "f_closure",
    "f_member",
    "CoronaWitness",
    "recognize_general_corona",
    "witness_problem",
    "verify_witness",
    "contraction_steps",
    "splitting_steps",
    "realize_by_contractions",
    "realize_by_splittings",
    "ClassReport",
    "verify_equivalences",
    "witness_to_json",
]


# -- the labelled family grown from P4


@dataclass(frozen=True)
class LabeledTreeAB:
    tree: Graph
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.tree.vertex_count or not set(self.labels) <= {"A", "B"}:
            raise GraphError("every vertex needs a label A or B")

    def code(self) -> str:
        return tree_canonical_code(self.tree, self.labels)


def labeled_p4() -> LabeledTreeAB:
    return LabeledTreeAB(from_edge_list(4, [(0, 1), (1, 2), (2, 3)]), ("A", "B", "B", "A"))


def f_extend(t: LabeledTreeAB, v: int) -> LabeledTreeAB:
    """Hang ``B-B-A`` off an ``A`` vertex, or ``B-A`` off a ``B`` vertex."""
    n = t.tree.vertex_count
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range")
    path = ("B", "B", "A") if t.labels[v] == "A" else ("B", "A")
    edges = t.tree.edges() + [(v, n)] + [(n + i, n + i + 1) for i in range(len(path) - 1)]
    return LabeledTreeAB(from_edge_list(n + len(path), edges), t.labels + path)


@lru_cache(maxsize=None)
def _closure(max_n: int) -> frozenset[str]:
    start = labeled_p4()
    seen = {start.code()}
    members = [start]
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for v in range(t.tree.vertex_count):
            grow = 3 if t.labels[v] == "A" else 2
            if t.tree.vertex_count + grow > max_n:
                continue
            child = f_extend(t, v)
            code = child.code()
            if code not in seen:
                seen.add(code)
                members.append(child)
                queue.append(child)
    return frozenset(tree_canonical_code(m.tree) for m in members)


def f_closure(max_n: int) -> frozenset[str]:
    """Unlabelled canonical codes of all family members on at most ``max_n`` vertices."""
    if max_n < 4:
        raise GraphError("the family starts at P4; max_n must be at least 4")
    return _closure(max_n)


def f_member(t: Graph, max_n: int | None = None) -> bool:
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    bound = t.vertex_count if max_n is None else max_n
    if t.vertex_count > bound:
        raise GraphError(f"tree has {t.vertex_count} vertices, above the closure bound {bound}")
    if t.vertex_count < 4:
        return False
    return tree_canonical_code(t) in f_closure(max(bound, 4))


# -- corona recognition


@dataclass(frozen=True)
class CoronaWitness:
    """Certificate that a tree is ``base ∘ partition``; ``embedding[x]`` is the
    corona vertex that tree vertex ``x`` plays."""

    base: Graph
    partition: NeighborhoodPartition
    embedding: tuple[Tag, ...]

    def externals(self) -> frozenset[int]:
        return frozenset(x for x, tag in enumerate(self.embedding) if isinstance(tag, External))


def _drop(adj: dict[int, set[int]], *vs: int) -> None:
    for x in vs:
        for y in adj.pop(x):
            adj[y].discard(x)


def recognize_general_corona(t: Graph) -> CoronaWitness | None:
    """Peel ``P4`` pieces off the end of a longest path until ``P4`` remains,
    then rebuild the witness by gluing the pieces back, at a shared external
    vertex or along a shared external-internal edge.

    Returns ``None`` as soon as the structure breaks (strong support vertex,
    short diameter, missing external anchor); no alternative paths are tried.
    """
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    if t.vertex_count < 3:
        raise GraphError("recognition needs a tree with at least three vertices")
    adj = {v: set(t.adjacency[v]) for v in range(t.vertex_count)}
    pieces: list[tuple[bool, int, int, int, int]] = []
    while True:
        if len(adj) == 4 and all(len(s) <= 2 for s in adj.values()):
            break
        if len(adj) <= 4:
            return None
        leaf_count: dict[int, int] = {}
        for x, s in adj.items():
            if len(s) == 1:
                (y,) = s
                leaf_count[y] = leaf_count.get(y, 0) + 1
        if any(c >= 2 for c in leaf_count.values()):
            return None
        path = diametral_path(adj)
        if len(path) < 5:
            return None
        v0, v1, v2, v3 = path[:4]
        if len(adj[v1]) != 2:
            return None
        if len(adj[v2]) == 2:
            pieces.append((False, v0, v1, v2, v3))
            _drop(adj, v0, v1, v2)
        else:
            leafy = sorted(u for u in adj[v2] if len(adj[u]) == 1)
            anchor = leafy[0] if leafy else v3
            pieces.append((True, v0, v1, v2, anchor))
            _drop(adj, v0, v1)

    x0, x1, x2, x3 = diametral_path(adj)
    tags: dict[int, Tag] = {
        x0: External(0),
        x1: Internal(0, frozenset({1})),
        x2: Internal(1, frozenset({0})),
        x3: External(1),
    }
    base_edges = [(0, 1)]
    for through_edge, a0, a1, a2, a3 in reversed(pieces):
        anchor = tags.get(a3)
        if not isinstance(anchor, External):
            return None
        b, new = anchor.origin, len(base_edges) + 1
        base_edges.append((b, new))
        tags[a0] = External(new)
        tags[a1] = Internal(new, frozenset({b}))
        if through_edge:
            shared = tags.get(a2)
            if not isinstance(shared, Internal) or shared.origin != b:
                return None
            tags[a2] = Internal(b, shared.block | {new})
        else:
            tags[a2] = Internal(b, frozenset({new}))

    base = from_edge_list(len(base_edges) + 1, base_edges)
    family: dict[int, list[frozenset[int]]] = {v: [] for v in range(base.vertex_count)}
    for tag in tags.values():
        if isinstance(tag, Internal):
            family[tag.origin].append(tag.block)
    embedding = tuple(tags[x] for x in range(t.vertex_count))
    return CoronaWitness(base, NeighborhoodPartition.from_blocks(family), embedding)


def witness_problem(t: Graph, w: CoronaWitness) -> str | None:
    """``None`` if ``w`` certifies ``t``, else the reason it does not."""
    if not is_tree(w.base):
        return "witness base is not a tree"
    problem = validate_partition(w.base, w.partition)
    if problem is not None:
        return f"invalid partition: {problem}"
    c = general_corona(w.base, w.partition)
    if c.graph.vertex_count != t.vertex_count:
        return f"corona has {c.graph.vertex_count} vertices, tree has {t.vertex_count}"
    if len(w.embedding) != t.vertex_count:
        return "embedding does not cover every tree vertex"
    try:
        image = [c.vertex_of(tag) for tag in w.embedding]
    except GraphError as exc:
        return f"embedding names a vertex the corona lacks: {exc}"
    if len(set(image)) != len(image):
        return "embedding is not injective"
    mapped = {frozenset((image[u], image[v])) for u, v in t.edges()}
    if mapped != {frozenset(e) for e in c.graph.edges()}:
        return "embedding does not carry tree edges onto corona edges"
    if not are_isomorphic_trees(c.graph, t):
        return "corona is not isomorphic to the tree"
    return None


def verify_witness(t: Graph, w: CoronaWitness) -> bool:
    return witness_problem(t, w) is None


# -- explicit contraction / splitting sequences


def contraction_steps(base: Graph, target: NeighborhoodPartition) -> list[tuple[int, frozenset[int], frozenset[int]]]:
    """Pairs of internal blocks to contract, starting from the singleton partition."""
    steps = []
    for v in range(base.vertex_count):
        for block in target.of(v):
            first, *others = sorted(block)
            acc = frozenset({first})
            for u in others:
                steps.append((v, acc, frozenset({u})))
                acc = acc | {u}
    return steps


def splitting_steps(
    base: Graph, target: NeighborhoodPartition
) -> list[tuple[int, frozenset[int], frozenset[int], frozenset[int]]]:
    """``(v, block, part, remainder)`` splits, starting from the trivial partition."""
    steps = []
    for v in range(base.vertex_count):
        rest = frozenset(base.adjacency[v])
        for block in target.of(v)[:-1]:
            steps.append((v, rest, block, rest - block))
            rest = rest - block
    return steps


def realize_by_contractions(base: Graph, target: NeighborhoodPartition) -> CoronaGraph:
    c = general_corona(base, singleton_partition(base))
    for v, a, b in contraction_steps(base, target):
        c = contract_internal_pair(c, c.internal(v, a), c.internal(v, b))
    return c


def realize_by_splittings(base: Graph, target: NeighborhoodPartition) -> CoronaGraph:
    c = general_corona(base, trivial_partition(base))
    for v, block, part, rest in splitting_steps(base, target):
        c = split_internal(c, c.internal(v, block), (part, rest))
    return c


# -- the equivalence report


def witness_to_json(w: CoronaWitness) -> dict[str, Any]:
    return {
        "base": {"n": w.base.vertex_count, "edges": [list(e) for e in w.base.edges()]},
        "partition": partition_to_json(w.partition),
    }


@dataclass(frozen=True)
class ClassReport:
    tree_code: str
    n: int
    sd_value: int
    cond_sd3: bool
    cond_unique_packing: bool
    cond_family_f: bool
    cond_corona: bool
    cond_from_subdivision: bool
    cond_from_corona_k1: bool
    witness: CoronaWitness | None
    packing: frozenset[int] | None

    def conditions(self) -> tuple[bool, ...]:
        return (
            self.cond_sd3,
            self.cond_unique_packing,
            self.cond_family_f,
            self.cond_corona,
            self.cond_from_subdivision,
            self.cond_from_corona_k1,
        )

    @property
    def packing_matches_witness(self) -> bool:
        if self.packing is None or self.witness is None:
            return True
        return self.packing == self.witness.externals()

    @property
    def agree(self) -> bool:
        return len(set(self.conditions())) == 1 and self.packing_matches_witness

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"code": self.tree_code, "n": self.n, "sd": self.sd_value}
        for i, c in enumerate(self.conditions(), start=1):
            out[f"c{i}"] = c
        if self.witness is not None:
            out["witness"] = witness_to_json(self.witness)
        if self.packing is not None:
            out["packing"] = sorted(self.packing)
        return out


def verify_equivalences(t: Graph, closure_bound: int | None = None) -> ClassReport:
    """Evaluate all six characterisations of ``sd(T) = 3`` on one tree."""
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    if t.vertex_count < 3:
        raise GraphError("need a tree with at least three vertices")
    sd = classify_tree(t).sd
    unique, packing = has_unique_dominating_2packing_with_leaves(t)
    in_family = f_member(t, closure_bound)
    witness = recognize_general_corona(t)
    if witness is not None and not verify_witness(t, witness):
        raise AssertionError(f"recognizer produced a bad certificate: {witness_problem(t, witness)}")
    from_sub = from_k1 = False
    if witness is not None:
        base, part = witness.base, witness.partition
        from_sub = is_refinement(singleton_partition(base), part, base) and are_isomorphic_trees(
            realize_by_contractions(base, part).graph, t
        )
        from_k1 = is_refinement(part, trivial_partition(base), base) and are_isomorphic_trees(
            realize_by_splittings(base, part).graph, t
        )
    return ClassReport(
        tree_code=tree_canonical_code(t),
        n=t.vertex_count,
        sd_value=sd,
        cond_sd3=sd == 3,
        cond_unique_packing=unique,
        cond_family_f=in_family,
        cond_corona=witness is not None,
        cond_from_subdivision=from_sub,
        cond_from_corona_k1=from_k1,
        witness=witness,
        packing=packing,
    )
