"""Straight enumerations, the umbrella property, and forbidden-pattern checks.

A straight enumeration orders the vertices so that whenever u < v < w in the
order and uw is an edge, uv and vw are edges too; a graph has one exactly
when it is a proper interval graph.  The forbidden-pattern oracle decides
proper circular-arc membership by induced-subgraph search: cycles-plus-vertex
and the tent on the graph side, even cycles, odd-cycles-plus-vertex and five
fixed graphs on the complement side.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Arc, PartialGraph, SimpleGraph, cycle_graph, disjoint_union
from .iso import contains_graph

TUCKER_MAX_N = 12
SEARCH_MAX_N = 12


@dataclass(frozen=True)
class StraightOrder:
    """Vertex order with the umbrella property (position = rank)."""

    order: tuple

    def position(self, v: int) -> int:
        return self.order.index(v)


@dataclass(frozen=True)
class TuckerWitness:
    family: str
    k: int
    vertices: tuple


@dataclass(frozen=True)
class TuckerVerdict:
    is_pca: bool
    witness: Optional[TuckerWitness] = None


def check_umbrella(g: SimpleGraph, order: Sequence[int]) -> Optional[tuple]:
    """First triple u < v < w (in the order) with uw an edge but uv or vw not."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertex set")
    for i in range(g.n):
        for j in range(i + 1, g.n):
            for k in range(j + 1, g.n):
                u, v, w = order[i], order[j], order[k]
                if g.has_edge(u, w) and not (g.has_edge(u, v) and g.has_edge(v, w)):
                    return (u, v, w)
    return None


def _component_order_search(g: SimpleGraph, verts: Sequence[int]) -> Optional[list]:
    """Depth-first search for an umbrella order of one component."""
    masks = g.adjacency_masks
    verts = sorted(verts)

    def valid_extension(prefix: list, x: int) -> bool:
        # Previously placed neighbours of x must form a suffix of the prefix
        # and that suffix must be pairwise adjacent.
        k = len(prefix)
        first = None
        for i in range(k):
            if masks[prefix[i]] >> x & 1:
                first = i
                break
        if first is None:
            return k == 0  # a component stays connected left-to-right
        tail = prefix[first:]
        for i, u in enumerate(tail):
            if not masks[u] >> x & 1:
                return False
            for w in tail[i + 1 :]:
                if not masks[u] >> w & 1:
                    return False
        return True

    prefix: list = []
    remaining = set(verts)

    def extend() -> bool:
        if not remaining:
            return True
        for x in sorted(remaining):
            if valid_extension(prefix, x):
                prefix.append(x)
                remaining.remove(x)
                if extend():
                    return True
                remaining.add(x)
                prefix.pop()
        return False

    return prefix if extend() else None


def _heuristic_order(g: SimpleGraph, verts: Sequence[int]) -> list:
    start = min(verts, key=lambda v: (g.degree(v), v))
    dist = {start: 0}
    frontier = [start]
    d = 0
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.neighbors(v):
                if u in dist or u not in set(verts):
                    continue
                dist[u] = d + 1
                nxt.append(u)
        frontier = nxt
        d += 1
    return sorted(verts, key=lambda v: (dist.get(v, 0), g.degree(v), v))


def straight_enumeration(g: SimpleGraph) -> Optional[StraightOrder]:
    """An umbrella-ordered enumeration, or None when the graph has none.

    Tries a cheap layered candidate first, then falls back to exhaustive
    prefix-pruned search per component (practical up to a dozen vertices).
    The umbrella property never constrains vertices of different components,
    so component orders concatenate.
    """
    order: list = []
    for verts in g.connected_components():
        candidate = _heuristic_order(g, verts)
        sub = g.induced_subgraph(verts)
        relindex = {v: i for i, v in enumerate(sorted(verts))}
        cand_local = [relindex[v] for v in candidate]
        if check_umbrella(sub, _complete_order(cand_local, sub.n)) is None:
            order.extend(candidate)
            continue
        found = _component_order_search(g, verts)
        if found is None:
            return None
        order.extend(found)
    result = StraightOrder(tuple(order))
    if check_umbrella(g, result.order) is not None:
        raise AssertionError("straight enumeration failed its own umbrella check")
    return result


def _complete_order(candidate: list, n: int) -> list:
    seen = set(candidate)
    return candidate + [v for v in range(n) if v not in seen]


def is_proper_interval(g: SimpleGraph) -> bool:
    return straight_enumeration(g) is not None


# ---------------------------------------------------------------------------
# forbidden patterns
# ---------------------------------------------------------------------------

# Five fixed graphs whose complements block proper circular-arc membership;
# adjacency transcribed as edge lists, the first is the 6-vertex tent.
_FIG_EDGES = {
    1: (6, ((0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 4), (4, 5))),
    2: (7, ((0, 2), (1, 2), (1, 4), (2, 3), (2, 5), (3, 6), (4, 5), (5, 6))),
    3: (7, ((0, 1), (1, 2), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (1, 6), (4, 6))),
    4: (7, ((0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 5), (5, 6))),
    5: (7, ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6))),
}

FAMILY_KINDS = (
    "cycle_plus_k1",
    "tent_plus_k1",
    "comp_even_cycle",
    "comp_odd_cycle_plus_k1",
    "tucker_fig1",
)


def tent_graph() -> SimpleGraph:
    n, edges = _FIG_EDGES[1]
    return SimpleGraph(n, frozenset(edges))


def tucker_fig1_graph(index: int) -> SimpleGraph:
    if index not in _FIG_EDGES:
        raise ValueError("fixed-list index must be 1..5")
    n, edges = _FIG_EDGES[index]
    return SimpleGraph(n, frozenset(edges))


def forbidden_family(kind: str, k: int = 0) -> SimpleGraph:
    """Parametric forbidden pattern.

    ``cycle_plus_k1`` (k >= 4) and ``tent_plus_k1`` are patterns to find in
    the graph itself.  For the ``comp_*`` kinds and ``tucker_fig1`` the named
    pattern lives on the complement side: ``comp_even_cycle``/``comp_odd_
    cycle_plus_k1`` return the graph whose complement is the named cycle
    pattern, while ``tucker_fig1`` returns the fixed graph itself.
    """
    if kind == "cycle_plus_k1":
        if k < 4:
            raise ValueError("cycle_plus_k1 needs k >= 4")
        return disjoint_union(cycle_graph(k), SimpleGraph(1))
    if kind == "tent_plus_k1":
        return disjoint_union(tent_graph(), SimpleGraph(1))
    if kind == "comp_even_cycle":
        if k < 3:
            raise ValueError("comp_even_cycle needs k >= 3")
        return cycle_graph(2 * k).complement()
    if kind == "comp_odd_cycle_plus_k1":
        if k < 1:
            raise ValueError("comp_odd_cycle_plus_k1 needs k >= 1")
        return disjoint_union(cycle_graph(2 * k + 1), SimpleGraph(1)).complement()
    if kind == "tucker_fig1":
        return tucker_fig1_graph(k)
    raise ValueError(f"unknown family kind {kind!r}")


def tucker_oracle(g: SimpleGraph) -> TuckerVerdict:
    """Proper circular-arc verdict by exhaustive forbidden-pattern search.

    Patterns are enumerated only up to the host's vertex count.  Bounded to
    n <= 12.
    """
    if g.n > TUCKER_MAX_N:
        raise ValueError(f"tucker_oracle supports at most {TUCKER_MAX_N} vertices, got {g.n}")
    for k in range(4, g.n):
        emb = contains_graph(g, forbidden_family("cycle_plus_k1", k))
        if emb is not None:
            return TuckerVerdict(False, TuckerWitness("cycle_plus_k1", k, tuple(sorted(emb))))
    if g.n >= 7:
        emb = contains_graph(g, forbidden_family("tent_plus_k1"))
        if emb is not None:
            return TuckerVerdict(False, TuckerWitness("tent_plus_k1", 0, tuple(sorted(emb))))
    comp = g.complement()
    for k in range(3, g.n // 2 + 1):
        emb = contains_graph(comp, cycle_graph(2 * k))
        if emb is not None:
            return TuckerVerdict(False, TuckerWitness("comp_even_cycle", k, tuple(sorted(emb))))
    for k in range(1, (g.n - 2) // 2 + 1):
        pattern = disjoint_union(cycle_graph(2 * k + 1), SimpleGraph(1))
        emb = contains_graph(comp, pattern)
        if emb is not None:
            return TuckerVerdict(
                False, TuckerWitness("comp_odd_cycle_plus_k1", k, tuple(sorted(emb)))
            )
    for index in range(1, 6):
        pattern = tucker_fig1_graph(index)
        if pattern.n <= g.n:
            emb = contains_graph(comp, pattern)
            if emb is not None:
                return TuckerVerdict(False, TuckerWitness("tucker_fig1", index, tuple(sorted(emb))))
    return TuckerVerdict(True)


# ---------------------------------------------------------------------------
# arc-balancing vertices and cut-vertex classification
# ---------------------------------------------------------------------------


def arc_balancing_vertex(h: PartialGraph, arc: Arc) -> Optional[int]:
    """The unique vertex adjacent to exactly one arc endpoint, if one exists."""
    if arc not in h.arcs:
        raise ValueError(f"({arc[0]},{arc[1]}) is not an arc")
    under = h.underlying
    x, y = arc
    hits = [
        v
        for v in range(h.n)
        if v not in (x, y) and (under.has_edge(v, x) != under.has_edge(v, y))
    ]
    return hits[0] if len(hits) == 1 else None


def classify_cut_vertex(h: PartialGraph, order: StraightOrder, v: int) -> str:
    """'dividing' when the two arcs sit on opposite sides of ``v`` in the order."""
    under = h.underlying
    if len(h.arcs) != 2:
        raise ValueError("classification needs exactly two arcs")
    if v not in under.cut_vertices():
        raise ValueError(f"vertex {v} is not a cut-vertex")
    if check_umbrella(under, order.order) is not None:
        raise ValueError("order is not a straight enumeration of the underlying graph")
    pos = {u: i for i, u in enumerate(order.order)}
    pv = pos[v]
    first, second = sorted(h.arcs)
    before = [min(pos[a], pos[b]) < pv for a, b in (first, second)]
    after = [max(pos[a], pos[b]) > pv for a, b in (first, second)]
    if (before[0] and after[1]) or (before[1] and after[0]):
        return "dividing"
    return "non_dividing"
