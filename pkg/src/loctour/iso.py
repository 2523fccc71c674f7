"""Isomorphism machinery: canonical forms, induced containment, automorphisms.

Canonical labelling follows the usual refine/individualize scheme: iterated
neighbourhood colour refinement, branching on the first non-singleton cell,
taking the lexicographically least adjacency encoding over all leaves.  Arc
directions participate in the refinement, so two POGs get equal signatures
exactly when an isomorphism maps edges to edges and arcs to arcs preserving
direction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graphs import PartialGraph, SimpleGraph, edge_key

CANONICAL_MAX_N = 12

# pair codes used in the encoded signature
_NONE, _EDGE, _ARC_FWD, _ARC_REV = 0, 1, 2, 3


@dataclass(frozen=True)
class CanonicalForm:
    """Relabelling-invariant signature of a PartialGraph."""

    signature: bytes

    def hex(self) -> str:
        return self.signature.hex()


def _pair_codes(pog: PartialGraph) -> dict:
    codes = {}
    for u, v in pog.edges:
        codes[(u, v)] = _EDGE
    for t, h in pog.arcs:
        codes[edge_key(t, h)] = _ARC_FWD if t < h else _ARC_REV
    return codes


def _typed_adjacency(pog: PartialGraph) -> list:
    adj: list[list] = [[] for _ in range(pog.n)]
    for u, v in pog.edges:
        adj[u].append((0, v))
        adj[v].append((0, u))
    for t, h in pog.arcs:
        adj[t].append((1, h))
        adj[h].append((2, t))
    return [tuple(a) for a in adj]


def _refine(n: int, typed_adj: list, colors: list) -> list:
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((t, colors[u]) for t, u in typed_adj[v])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[sigs[v]] for v in range(n)]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def _cells(n: int, colors: list) -> list:
    by_color: dict[int, list] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def _cells_homogeneous(cells: list, codes: dict) -> bool:
    # Uniform relations within and between cells make every cell-respecting
    # completion encode identically, so branching would be wasted work.
    for i, ci in enumerate(cells):
        if len(ci) > 1:
            inner = {codes.get((min(u, v), max(u, v)), _NONE) for u, v in itertools.combinations(ci, 2)}
            if len(inner) > 1 or inner & {_ARC_FWD, _ARC_REV}:
                return False
        for cj in cells[i + 1 :]:
            seen = set()
            for u in ci:
                for v in cj:
                    code = codes.get((min(u, v), max(u, v)), _NONE)
                    if code in (_ARC_FWD, _ARC_REV) and u > v:
                        code = _ARC_FWD + _ARC_REV - code
                    seen.add(code)
                    if len(seen) > 1:
                        return False
    return True


def _encode(n: int, labelling: list, codes: dict) -> bytes:
    # labelling[k] = original vertex placed at position k
    out = bytearray()
    out.append(n)
    for i in range(n):
        u = labelling[i]
        for j in range(i + 1, n):
            v = labelling[j]
            code = codes.get((min(u, v), max(u, v)), _NONE)
            if code in (_ARC_FWD, _ARC_REV) and u > v:
                code = _ARC_FWD + _ARC_REV - code
            out.append(code)
    return bytes(out)


def _canon_search(n: int, typed_adj: list, codes: dict, colors: list, best: Optional[bytes]) -> bytes:
    colors = _refine(n, typed_adj, colors)
    cells = _cells(n, colors)
    target = next((c for c in cells if len(c) > 1), None)
    if target is None or _cells_homogeneous(cells, codes):
        labelling = [v for cell in cells for v in sorted(cell)]
        enc = _encode(n, labelling, codes)
        return enc if best is None or enc < best else best
    for v in sorted(target):
        branched = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
        best = _canon_search(n, typed_adj, codes, branched, best)
    return best


def canonical_form(pog: PartialGraph) -> CanonicalForm:
    """Canonical signature; equal iff the POGs are isomorphic (arcs directed).

    Exhaustive-search canonicalization, bounded to n <= 12.
    """
    if pog.n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_form supports at most {CANONICAL_MAX_N} vertices, got {pog.n}")
    if pog.n == 0:
        return CanonicalForm(bytes([0]))
    typed_adj = _typed_adjacency(pog)
    codes = _pair_codes(pog)
    colors = [0] * pog.n
    return CanonicalForm(_canon_search(pog.n, typed_adj, codes, colors, None))


def canonical_form_graph(g: SimpleGraph) -> CanonicalForm:
    return canonical_form(PartialGraph.plain(g))


def relabel(pog: PartialGraph, perm: Sequence[int]) -> PartialGraph:
    """Apply the permutation ``perm`` (new id of each old vertex)."""
    if sorted(perm) != list(range(pog.n)):
        raise ValueError("not a permutation of the vertex set")
    return PartialGraph(
        pog.n,
        frozenset((perm[u], perm[v]) for u, v in pog.edges),
        frozenset((perm[t], perm[h]) for t, h in pog.arcs),
    )


class _Relations:
    """Pairwise relation lookup with per-vertex degree summaries."""

    def __init__(self, pog: PartialGraph):
        self.n = pog.n
        self.codes = _pair_codes(pog)
        self.under = pog.underlying
        self.deg = [self.under.degree(v) for v in range(pog.n)]
        self.out_deg = [0] * pog.n
        self.in_deg = [0] * pog.n
        for t, h in pog.arcs:
            self.out_deg[t] += 1
            self.in_deg[h] += 1

    def code(self, u: int, v: int) -> int:
        c = self.codes.get((min(u, v), max(u, v)), _NONE)
        if c in (_ARC_FWD, _ARC_REV) and u > v:
            c = _ARC_FWD + _ARC_REV - c
        return c


def _match_order(pattern: PartialGraph) -> list:
    # Most-connected-first ordering keeps the backtracking shallow.
    under = pattern.underlying
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < pattern.n:
        best_v, best_score = None, None
        for v in range(pattern.n):
            if v in placed:
                continue
            score = (len(under.neighbors(v) & placed), under.degree(v), -v)
            if best_score is None or score > best_score:
                best_v, best_score = v, score
        order.append(best_v)
        placed.add(best_v)
    return order


def embeddings(host: PartialGraph, pattern: PartialGraph, exact: bool = False) -> Iterator[tuple]:
    """Yield injective maps phi (pattern vertex -> host vertex).

    Containment semantics: adjacency is preserved exactly (induced), pattern
    arcs map onto identically directed host arcs, and pattern edges map onto
    host edges or, unless ``exact``, host arcs of either direction.
    """
    if pattern.n > host.n:
        return
    hrel = _Relations(host)
    prel = _Relations(pattern)
    order = _match_order(pattern)
    assignment: dict[int, int] = {}
    used = [False] * host.n

    def compatible(p: int, h: int) -> bool:
        if hrel.deg[h] < prel.deg[p] or hrel.out_deg[h] < prel.out_deg[p] or hrel.in_deg[h] < prel.in_deg[p]:
            return False
        for q, hq in assignment.items():
            pc = prel.code(p, q)
            hc = hrel.code(h, hq)
            if pc == _NONE or pc == hc:
                if pc != hc:
                    return False
            elif pc == _EDGE and not exact:
                if hc not in (_EDGE, _ARC_FWD, _ARC_REV):
                    return False
            else:
                return False
        return True

    def extend(k: int) -> Iterator[tuple]:
        if k == len(order):
            yield tuple(assignment[p] for p in range(pattern.n))
            return
        p = order[k]
        for h in range(host.n):
            if used[h]:
                continue
            if compatible(p, h):
                assignment[p] = h
                used[h] = True
                yield from extend(k + 1)
                used[h] = False
                del assignment[p]

    yield from extend(0)


def contains(host: PartialGraph, pattern: PartialGraph) -> Optional[tuple]:
    """First embedding of ``pattern`` into ``host``, or None."""
    return next(embeddings(host, pattern), None)


def contains_graph(host: SimpleGraph, pattern: SimpleGraph) -> Optional[tuple]:
    """Induced-subgraph embedding between plain graphs."""
    return contains(PartialGraph.plain(host), PartialGraph.plain(pattern))


def automorphisms(pog: PartialGraph) -> list:
    """All permutations preserving edges and directed arcs (as tuples)."""
    return [perm for perm in embeddings(pog, pog, exact=True)]
