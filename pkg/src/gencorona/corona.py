"""General coronas ``G∘P`` of a graph with respect to a family of
neighbourhood partitions, and the partition-level operations around them."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from .graph import External, Graph, GraphError, Internal, Tag, from_edge_list, is_tree

__all__ = [
    "InvalidPartitionError",
    "NeighborhoodPartition",
    "CoronaGraph",
    "validate_partition",
    "general_corona",
    "trivial_partition",
    "singleton_partition",
    "corona_k1",
    "two_subdivision",
    "is_refinement",
    "contract_internal_pair",
    "split_internal",
    "glue_at_external_vertex",
    "glue_at_edge",
    "partition_from_json",
    "partition_to_json",
]

Block = frozenset[int]


class InvalidPartitionError(ValueError):
    pass


def _block_key(block: Block) -> tuple[int, int]:
    return (min(block), len(block)) if block else (-1, 0)


@dataclass(frozen=True)
class NeighborhoodPartition:
    """``blocks[v]`` holds the blocks of the partition of ``N(v)``.

    Construction does not validate against any graph; use
    :func:`validate_partition` for that.
    """

    blocks: Mapping[int, tuple[Block, ...]]

    @classmethod
    def from_blocks(cls, mapping: Mapping[int, Iterable[Iterable[int]]]) -> NeighborhoodPartition:
        norm = {}
        for v, fam in mapping.items():
            norm[int(v)] = tuple(sorted((frozenset(b) for b in fam), key=_block_key))
        return cls(dict(sorted(norm.items())))

    def of(self, v: int) -> tuple[Block, ...]:
        return self.blocks.get(v, ())

    def block_count(self) -> int:
        return sum(len(f) for f in self.blocks.values())

    def replace(self, v: int, family: Iterable[Block]) -> NeighborhoodPartition:
        new = dict(self.blocks)
        new[v] = tuple(sorted(family, key=_block_key))
        return NeighborhoodPartition(new)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NeighborhoodPartition):
            return NotImplemented
        keys = set(self.blocks) | set(other.blocks)
        return all(set(self.of(v)) == set(other.of(v)) for v in keys)

    __hash__ = None  # type: ignore[assignment]


def validate_partition(g: Graph, p: NeighborhoodPartition) -> str | None:
    """Return ``None`` when ``p`` is a neighbourhood partition of ``g``,
    else a description of the first violation found."""
    for v in p.blocks:
        if not 0 <= v < g.vertex_count:
            return f"stray vertex: partition given for {v}, which is not in the graph"
    for v in range(g.vertex_count):
        nbrs = set(g.adjacency[v])
        if v not in p.blocks:
            if nbrs:
                return f"missing partition for vertex {v}"
            continue
        seen: set[int] = set()
        for block in p.blocks[v]:
            if not block:
                return f"empty block at vertex {v}"
            stray = block - nbrs
            if stray:
                return f"stray vertex: {min(stray)} in a block at {v} is not a neighbour of {v}"
            dup = block & seen
            if dup:
                return f"overlap: neighbour {min(dup)} of {v} lies in two blocks"
            seen |= block
        missing = nbrs - seen
        if missing:
            return f"uncovered neighbour: {min(missing)} of {v} is in no block"
    return None


def _require_valid(g: Graph, p: NeighborhoodPartition) -> None:
    problem = validate_partition(g, p)
    if problem is not None:
        raise InvalidPartitionError(problem)


@dataclass(frozen=True)
class CoronaGraph:
    """A product graph together with the base graph and partition it came from.

    Vertices ``0..n-1`` are the external vertices ``(v, 1)`` in base order;
    internal vertices follow, ordered by ``(origin, min(block))``.
    """

    graph: Graph
    base: Graph
    partition: NeighborhoodPartition

    @property
    def base_order(self) -> int:
        return self.base.vertex_count

    @property
    def tags(self) -> tuple[Tag, ...]:
        assert self.graph.tags is not None
        return self.graph.tags

    @cached_property
    def _index(self) -> dict[Tag, int]:
        return {tag: i for i, tag in enumerate(self.tags)}

    def vertex_of(self, tag: Tag) -> int:
        try:
            return self._index[tag]
        except KeyError:
            raise GraphError(f"no vertex tagged {tag}") from None

    def external(self, origin: int) -> int:
        return self.vertex_of(External(origin))

    def internal(self, origin: int, block: Iterable[int]) -> int:
        return self.vertex_of(Internal(origin, frozenset(block)))

    def externals(self) -> list[int]:
        return [i for i, t in enumerate(self.tags) if isinstance(t, External)]


def general_corona(g: Graph, p: NeighborhoodPartition) -> CoronaGraph:
    _require_valid(g, p)
    n = g.vertex_count
    tags: list[Tag] = [External(v) for v in range(n)]
    owner: dict[tuple[int, int], int] = {}  # (v, neighbour) -> internal vertex id
    edges = []
    for v in range(n):
        for block in sorted(p.of(v), key=_block_key):
            i = len(tags)
            tags.append(Internal(v, block))
            edges.append((v, i))
            for u in block:
                owner[(v, u)] = i
    for u, v in g.edges():
        edges.append((owner[(u, v)], owner[(v, u)]))
    return CoronaGraph(from_edge_list(len(tags), edges, tags), g, p)


def trivial_partition(g: Graph) -> NeighborhoodPartition:
    return NeighborhoodPartition.from_blocks(
        {v: [g.adjacency[v]] if g.adjacency[v] else [] for v in range(g.vertex_count)}
    )


def singleton_partition(g: Graph) -> NeighborhoodPartition:
    return NeighborhoodPartition.from_blocks(
        {v: [[u] for u in g.adjacency[v]] for v in range(g.vertex_count)}
    )


def corona_k1(g: Graph) -> Graph:
    """Classical corona with K1: a pendant vertex ``n + v`` hung on every ``v``."""
    n = g.vertex_count
    return from_edge_list(2 * n, g.edges() + [(v, n + v) for v in range(n)])


def two_subdivision(g: Graph) -> Graph:
    """Replace every edge ``uv`` by a path ``u, x1, x2, v`` on two new vertices."""
    n = g.vertex_count
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        x1, x2 = n + 2 * i, n + 2 * i + 1
        edges += [(u, x1), (x1, x2), (x2, v)]
    return from_edge_list(n + 2 * g.edge_count, edges)


def is_refinement(p1: NeighborhoodPartition, p2: NeighborhoodPartition, g: Graph) -> bool:
    """True iff every block of ``p1(v)`` lies inside a block of ``p2(v)``."""
    _require_valid(g, p1)
    _require_valid(g, p2)
    return all(
        any(a <= b for b in p2.of(v)) for v in range(g.vertex_count) for a in p1.of(v)
    )


def _internal_tag(c: CoronaGraph, x: int) -> Internal:
    if not 0 <= x < c.graph.vertex_count:
        raise GraphError(f"vertex {x} out of range")
    tag = c.tags[x]
    if not isinstance(tag, Internal):
        raise GraphError(f"vertex {x} is not internal")
    return tag


def contract_internal_pair(c: CoronaGraph, a: int, b: int) -> CoronaGraph:
    """Contract two internal neighbours ``(v, A)``, ``(v, B)`` of ``(v, 1)``
    into ``(v, A ∪ B)``."""
    ta, tb = _internal_tag(c, a), _internal_tag(c, b)
    if a == b:
        raise GraphError("cannot contract a vertex with itself")
    if ta.origin != tb.origin:
        raise GraphError(f"internal vertices have different origins {ta.origin} and {tb.origin}")
    v = ta.origin
    family = [blk for blk in c.partition.of(v) if blk not in (ta.block, tb.block)]
    family.append(ta.block | tb.block)
    return general_corona(c.base, c.partition.replace(v, family))


def split_internal(c: CoronaGraph, x: int, parts: tuple[Iterable[int], Iterable[int]]) -> CoronaGraph:
    """Split ``(v, A)`` into ``(v, A1)`` and ``(v, A2)``."""
    tag = _internal_tag(c, x)
    a1, a2 = (frozenset(part) for part in parts)
    if not a1 or not a2 or a1 & a2 or a1 | a2 != tag.block:
        raise GraphError(f"{sorted(a1)} and {sorted(a2)} do not split block {sorted(tag.block)}")
    family = [blk for blk in c.partition.of(tag.origin) if blk != tag.block] + [a1, a2]
    return general_corona(c.base, c.partition.replace(tag.origin, family))


def _external_origin(c: CoronaGraph, x: int) -> int:
    if not 0 <= x < c.graph.vertex_count:
        raise GraphError(f"vertex {x} out of range")
    tag = c.tags[x]
    if not isinstance(tag, External):
        raise GraphError(f"vertex {x} is not external")
    return tag.origin


def _merge_bases(
    c1: CoronaGraph, c2: CoronaGraph, o1: int, o2: int
) -> tuple[Graph, dict[int, tuple[Block, ...]], dict[int, int]]:
    """Disjoint union of the two bases with ``o2`` identified onto ``o1``."""
    if not (is_tree(c1.base) and is_tree(c2.base)):
        raise GraphError("gluing is defined for coronas of trees")
    n1 = c1.base_order
    remap = {o2: o1}
    for u in range(c2.base_order):
        if u != o2:
            remap[u] = n1 + len(remap) - 1
    edges = c1.base.edges() + [(remap[u], remap[v]) for u, v in c2.base.edges()]
    base = from_edge_list(n1 + c2.base_order - 1, edges)
    blocks = {v: c1.partition.of(v) for v in range(n1)}
    for u in range(c2.base_order):
        moved = tuple(frozenset(remap[w] for w in blk) for blk in c2.partition.of(u))
        blocks[remap[u]] = blocks.get(remap[u], ()) + moved
    return base, blocks, remap


def glue_at_external_vertex(c1: CoronaGraph, c2: CoronaGraph, v1: int, v2: int) -> CoronaGraph:
    """Disjoint union of two coronas of trees with external ``v1`` identified with ``v2``.

    The base trees merge at the shared base vertex, whose block family is the
    union of the two families. Base vertices of ``c2`` other than the shared
    one are renumbered after those of ``c1``.
    """
    o1, o2 = _external_origin(c1, v1), _external_origin(c2, v2)
    base, blocks, _ = _merge_bases(c1, c2, o1, o2)
    return general_corona(base, NeighborhoodPartition.from_blocks(blocks))


def _edge_ends(c: CoronaGraph, edge: tuple[int, int]) -> tuple[bool, int, int]:
    """Return ``(external_first, external, internal)`` for an external-internal edge."""
    x, y = edge
    if not c.graph.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    tx, ty = c.tags[x], c.tags[y]
    if isinstance(tx, External) and isinstance(ty, Internal):
        return True, x, y
    if isinstance(tx, Internal) and isinstance(ty, External):
        return False, y, x
    raise GraphError(f"edge ({x}, {y}) does not join an external and an internal vertex")


def glue_at_edge(
    c1: CoronaGraph, c2: CoronaGraph, e1: tuple[int, int], e2: tuple[int, int]
) -> CoronaGraph:
    """Identify an external-internal edge of ``c1`` with one of ``c2``.

    Edges are ordered pairs and must be given in the same orientation; the
    external ends are identified with each other, as are the internal ends.
    """
    if c1 is c2 and set(e1) == set(e2):
        raise GraphError("inputs must share only the glued edge; got the same corona and edge twice")
    first1, x1, y1 = _edge_ends(c1, e1)
    first2, x2, y2 = _edge_ends(c2, e2)
    if first1 != first2:
        raise GraphError("misaligned orientation: external ends must be in the same position")
    o1, o2 = _external_origin(c1, x1), _external_origin(c2, x2)
    base, blocks, remap = _merge_bases(c1, c2, o1, o2)
    glued = general_corona(base, NeighborhoodPartition.from_blocks(blocks))
    b1 = _internal_tag(c1, y1).block
    b2 = frozenset(remap[w] for w in _internal_tag(c2, y2).block)
    return contract_internal_pair(glued, glued.internal(o1, b1), glued.internal(o1, b2))


def partition_from_json(g: Graph, obj: Mapping[str, object] | str) -> NeighborhoodPartition:
    """Read ``{"v": [[...], ...]}``; vertices left out get the trivial partition."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, Mapping):
        raise InvalidPartitionError("partition JSON must be an object")
    given: dict[int, list[list[int]]] = {}
    for key, fam in obj.items():
        try:
            v = int(key)
        except ValueError:
            raise InvalidPartitionError(f"vertex key {key!r} is not an integer") from None
        if not isinstance(fam, list) or not all(
            isinstance(b, list) and all(isinstance(x, int) for x in b) for b in fam
        ):
            raise InvalidPartitionError(f"blocks for {key!r} must be arrays of integer arrays")
        given[v] = fam
    full = dict(trivial_partition(g).blocks)
    full.update(NeighborhoodPartition.from_blocks(given).blocks)
    return NeighborhoodPartition(dict(sorted(full.items())))


def partition_to_json(p: NeighborhoodPartition) -> dict[str, list[list[int]]]:
    return {
        str(v): [sorted(b) for b in sorted(fam, key=_block_key)]
        for v, fam in sorted(p.blocks.items())
    }
