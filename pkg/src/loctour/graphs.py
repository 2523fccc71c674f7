"""Undirected and partially oriented graph model, POG text format, DOT export.

Vertices are dense 0-based integers.  An undirected edge is stored as a
``(u, v)`` tuple with ``u < v``; an arc is an ordered ``(tail, head)`` tuple.
All values are immutable after construction, so every operation here is a
pure function and safe to share across threads or processes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]
Arc = tuple[int, int]


class PogFormatError(ValueError):
    """Malformed POG text.  Carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def edge_key(u: int, v: int) -> Edge:
    """Normalize an unordered pair to (min, max) form."""
    return (u, v) if u < v else (v, u)


def _check_pair(n: int, u: int, v: int, what: str) -> None:
    if u == v:
        raise ValueError(f"loop {what} ({u},{v}) not allowed")
    for x in (u, v):
        if not 0 <= x < n:
            raise ValueError(f"{what} ({u},{v}) has endpoint {x} outside 0..{n - 1}")


@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = frozenset(edge_key(u, v) for u, v in self.edges)
        for u, v in norm:
            _check_pair(self.n, u, v, "edge")
        object.__setattr__(self, "edges", norm)

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        nbrs: list[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        """N[v]: the vertex together with its neighbours."""
        return self.adjacency[v] | {v}

    def complement(self) -> "SimpleGraph":
        """Graph with an edge exactly where this one has none (loop-free)."""
        missing = frozenset(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges
        )
        return SimpleGraph(self.n, missing)

    def _components_of(self, vertices: Iterable[int]) -> list[tuple[int, ...]]:
        todo = set(vertices)
        comps = []
        while todo:
            start = min(todo)
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if y in todo and y not in seen:
                        seen.add(y)
                        stack.append(y)
            todo -= seen
            comps.append(tuple(sorted(seen)))
        comps.sort(key=lambda c: c[0])
        return comps

    def connected_components(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sets of the components, each sorted, ordered by least vertex."""
        return tuple(self._components_of(range(self.n)))

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def cut_vertices(self) -> frozenset:
        """Vertices whose deletion increases the number of components."""
        base = len(self.connected_components())
        cuts = set()
        for v in range(self.n):
            rest = [u for u in range(self.n) if u != v]
            if len(self._components_of(rest)) > base:
                cuts.add(v)
        return frozenset(cuts)

    def induced_subgraph(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Subgraph on the given vertices, relabelled by their sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return SimpleGraph(len(keep), edges)

    def delete_vertex(self, v: int) -> "SimpleGraph":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        return self.induced_subgraph(u for u in range(self.n) if u != v)


@dataclass(frozen=True)
class PartialGraph:
    """Partially oriented graph: plain edges plus arcs on disjoint pairs."""

    n: int
    edges: frozenset = frozenset()
    arcs: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = frozenset(edge_key(u, v) for u, v in self.edges)
        arcs = frozenset(tuple(a) for a in self.arcs)
        for u, v in edges:
            _check_pair(self.n, u, v, "edge")
        for t, h in arcs:
            _check_pair(self.n, t, h, "arc")
            if edge_key(t, h) in edges:
                raise ValueError(f"pair {{{t},{h}}} is both an edge and an arc")
            if (h, t) in arcs:
                raise ValueError(f"opposite arcs ({t},{h}) and ({h},{t}) not allowed")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def plain(cls, g: SimpleGraph) -> "PartialGraph":
        return cls(g.n, g.edges, frozenset())

    @classmethod
    def orient(cls, g: SimpleGraph, arcs: Iterable[Arc]) -> "PartialGraph":
        """POG with underlying graph ``g`` and the given pairs turned into arcs."""
        arcset = frozenset(tuple(a) for a in arcs)
        for t, h in arcset:
            if not g.has_edge(t, h):
                raise ValueError(f"arc ({t},{h}) is not over an edge of the graph")
        plain = frozenset(e for e in g.edges if not any(edge_key(t, h) == e for t, h in arcset))
        return cls(g.n, plain, arcset)

    @cached_property
    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges | {edge_key(t, h) for t, h in self.arcs})

    def dual(self) -> "PartialGraph":
        """Same edges, every arc reversed."""
        return PartialGraph(self.n, self.edges, frozenset((h, t) for t, h in self.arcs))

    def relax_arc(self, arc: Arc) -> "PartialGraph":
        """Replace one arc by a plain edge."""
        if arc not in self.arcs:
            raise ValueError(f"({arc[0]},{arc[1]}) is not an arc")
        return PartialGraph(
            self.n, self.edges | {edge_key(*arc)}, self.arcs - {arc}
        )

    def induced(self, vertices: Iterable[int]) -> "PartialGraph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        arcs = frozenset(
            (index[t], index[h]) for t, h in self.arcs if t in index and h in index
        )
        return PartialGraph(len(keep), edges, arcs)

    def delete_vertex(self, v: int) -> "PartialGraph":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        return self.induced(u for u in range(self.n) if u != v)


def parse_pog(text: str) -> PartialGraph:
    """Parse the line-oriented POG format.

    Grammar per line: ``# comment`` | ``vertices <n>`` (first non-comment
    line) | ``edge <u> <v>`` | ``arc <tail> <head>``.  Blank lines are
    ignored.  Raises :class:`PogFormatError` with the line number on any
    malformed input, out-of-range id, loop, or duplicated pair.
    """
    n = None
    edges: set[Edge] = set()
    arcs: set[Arc] = set()

    def pair_taken(u: int, v: int) -> bool:
        return edge_key(u, v) in edges or any(edge_key(t, h) == edge_key(u, v) for t, h in arcs)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "vertices" or len(fields) != 2:
                raise PogFormatError(lineno, "expected 'vertices <n>' as first directive")
            try:
                n = int(fields[1])
            except ValueError:
                raise PogFormatError(lineno, f"bad vertex count {fields[1]!r}") from None
            if n < 0:
                raise PogFormatError(lineno, "vertex count must be non-negative")
            continue
        if fields[0] not in ("edge", "arc") or len(fields) != 3:
            raise PogFormatError(lineno, f"expected 'edge <u> <v>' or 'arc <u> <v>', got {line!r}")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise PogFormatError(lineno, f"non-integer vertex id in {line!r}") from None
        if u == v:
            raise PogFormatError(lineno, f"loop on vertex {u} not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise PogFormatError(lineno, f"vertex id outside 0..{n - 1} in {line!r}")
        if pair_taken(u, v):
            raise PogFormatError(lineno, f"pair {{{u},{v}}} already declared")
        if fields[0] == "edge":
            edges.add(edge_key(u, v))
        else:
            arcs.add((u, v))
    if n is None:
        raise PogFormatError(1, "missing 'vertices <n>' directive")
    return PartialGraph(n, frozenset(edges), frozenset(arcs))


def serialize_pog(pog: PartialGraph) -> str:
    """Inverse of :func:`parse_pog` (up to comments and ordering)."""
    lines = [f"vertices {pog.n}"]
    lines.extend(f"edge {u} {v}" for u, v in sorted(pog.edges))
    lines.extend(f"arc {t} {h}" for t, h in sorted(pog.arcs))
    return "\n".join(lines) + "\n"


def export_dot(pog: PartialGraph, name: str = "pog") -> str:
    """DOT text: arcs as ``u -> v``, plain edges as ``u -> v [dir=none]``."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(pog.n))
    lines.extend(f"  {u} -> {v} [dir=none];" for u, v in sorted(pog.edges))
    lines.extend(f"  {t} -> {h};" for t, h in sorted(pog.arcs))
    lines.append("}")
    return "\n".join(lines) + "\n"


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return SimpleGraph(n, frozenset(edge_key(i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges = set()
    offset = 0
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return SimpleGraph(offset, frozenset(edges))


def bit_indices(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
