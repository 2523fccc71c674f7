"""The forcing relation on ordered edge pairs, its closure, and witnesses.

For a graph G, Z(G) holds both orientations (u, v), (v, u) of every edge.
A pair (u, v) forces (x, y) when they are equal, or u = y with v, x
non-adjacent, or v = x with u, y non-adjacent.  The relation is symmetric
and reflexive, so its transitive closure partitions Z(G); the classes and
the edge classes they induce drive everything downstream.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .graphs import Edge, PartialGraph, SimpleGraph, bit_indices

Pair = tuple[int, int]


def ordered_pairs(g: SimpleGraph) -> list:
    """Z(G), sorted."""
    pairs = []
    for u, v in g.edges:
        pairs.append((u, v))
        pairs.append((v, u))
    return sorted(pairs)


def gamma_step(p: Pair, q: Pair, g: SimpleGraph) -> bool:
    """Whether p forces q in one step."""
    for pair in (p, q):
        if not g.has_edge(*pair):
            raise ValueError(f"pair {pair} is not an orientation of an edge")
    u, v = p
    x, y = q
    if u == x and v == y:
        return True
    if u == y and v != x and not g.has_edge(v, x):
        return True
    if v == x and u != y and not g.has_edge(u, y):
        return True
    return False


def _step_neighbors(u: int, v: int, masks: Sequence[int]) -> list:
    out = []
    m = masks[u] & ~masks[v] & ~(1 << v)
    for x in bit_indices(m):
        out.append((x, u))
    m = masks[v] & ~masks[u] & ~(1 << u)
    for y in bit_indices(m):
        out.append((v, y))
    return out


@dataclass(frozen=True)
class GammaPartition:
    """Classes of Z(G) under the closure, plus the induced edge classes."""

    graph: SimpleGraph
    classes: tuple
    class_index: Mapping = field(repr=False)
    implication_classes: tuple = field(repr=False)
    edge_class_index: Mapping = field(repr=False)

    def same_class(self, p: Pair, q: Pair) -> bool:
        return self.class_index[p] == self.class_index[q]

    def reversal_class(self, index: int) -> int:
        u, v = self.classes[index][0]
        return self.class_index[(v, u)]

    def has_self_paired_class(self) -> bool:
        return any(self.reversal_class(i) == i for i in range(len(self.classes)))


def gamma_partition(g: SimpleGraph) -> GammaPartition:
    """Partition Z(G) into closure classes by flood fill over single steps."""
    masks = g.adjacency_masks
    class_index: dict[Pair, int] = {}
    classes: list[tuple] = []
    for start in ordered_pairs(g):
        if start in class_index:
            continue
        cid = len(classes)
        members = [start]
        class_index[start] = cid
        stack = [start]
        while stack:
            u, v = stack.pop()
            for nxt in _step_neighbors(u, v, masks):
                if nxt not in class_index:
                    class_index[nxt] = cid
                    members.append(nxt)
                    stack.append(nxt)
        classes.append(tuple(sorted(members)))

    edge_class_index: dict[Edge, int] = {}
    groups: dict[int, list] = {}
    for u, v in sorted(g.edges):
        key = min(class_index[(u, v)], class_index[(v, u)])
        groups.setdefault(key, []).append((u, v))
    implication = []
    for i, key in enumerate(sorted(groups)):
        for e in groups[key]:
            edge_class_index[e] = i
        implication.append(tuple(groups[key]))
    return GammaPartition(
        graph=g,
        classes=tuple(classes),
        class_index=class_index,
        implication_classes=tuple(implication),
        edge_class_index=edge_class_index,
    )


def is_balanced_edge(g: SimpleGraph, e: Edge) -> bool:
    """True iff the endpoints share their closed neighbourhood."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{{{u},{v}}} is not an edge")
    return g.closed_neighborhood(u) == g.closed_neighborhood(v)


def gamma_sequence(g: SimpleGraph, frm: Pair, to: Pair) -> Optional[tuple]:
    """Shortest chain of single forcing steps from ``frm`` to ``to``, if any."""
    for pair in (frm, to):
        if not g.has_edge(*pair):
            raise ValueError(f"pair {pair} is not an orientation of an edge")
    frm, to = tuple(frm), tuple(to)
    if frm == to:
        return (frm,)
    masks = g.adjacency_masks
    parent: dict[Pair, Pair] = {frm: frm}
    queue = [frm]
    while queue:
        nxt_queue = []
        for pair in queue:
            for nxt in _step_neighbors(pair[0], pair[1], masks):
                if nxt in parent:
                    continue
                parent[nxt] = pair
                if nxt == to:
                    seq = [to]
                    while seq[-1] != frm:
                        seq.append(parent[seq[-1]])
                    return tuple(reversed(seq))
                nxt_queue.append(nxt)
        queue = nxt_queue
    return None


def opposing_witness(h: PartialGraph) -> Optional[tuple]:
    """A pair of arcs (a,b), (c,d) with (a,b) forcing-equivalent to (d,c).

    Returns ``((a,b), (c,d), sequence)`` where the sequence is a shortest
    forcing chain from (a,b) to (d,c), or None when no two arcs (including
    an arc against itself) are opposing.
    """
    if not h.arcs:
        return None
    g = h.underlying
    gp = gamma_partition(g)
    arcs = sorted(h.arcs)
    for i, a in enumerate(arcs):
        for b in arcs[i:]:
            if gp.class_index[a] == gp.class_index[(b[1], b[0])]:
                seq = gamma_sequence(g, a, (b[1], b[0]))
                return (a, b, seq)
    return None
