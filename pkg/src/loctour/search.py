"""Brute-force oracles and exhaustive small-order enumeration.

The completability oracle tries every orientation of the plain edges and
checks the local tournament property directly on bitmasks; it shares no
code with the forcing-relation machinery it validates.  Graph and POG
enumeration work up to isomorphism via canonical-form deduplication, and
the minimal-obstruction search scans every isomorphism class of candidate
inputs at a fixed order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .catalog import certify_obstruction, enumerate_catalog
from .completion import is_lt_orientable
from .gamma import gamma_partition, ordered_pairs
from .graphs import PartialGraph, SimpleGraph, bit_indices, edge_key
from .iso import automorphisms, canonical_form

UNRESTRICTED_MAX_N = 6
TWO_ARC_MAX_N = 8
BRUTE_FORCE_MAX_EDGES = 24


@dataclass(frozen=True)
class EnumerationConfig:
    """Bounds for exhaustive POG enumeration.

    ``max_arcs`` is 0 (no arcs), 2 (at most two arcs), or None for all arc
    assignments; the None mode is the expensive one and is capped at 6
    vertices, the two-arc mode at 8.
    """

    n: int
    max_arcs: Optional[int] = None
    require_connected: bool = True

    def __post_init__(self):
        if self.max_arcs not in (None, 0, 2):
            raise ValueError("max_arcs must be 0, 2, or None")
        bound = TWO_ARC_MAX_N if self.max_arcs in (0, 2) else UNRESTRICTED_MAX_N
        if not 1 <= self.n <= bound:
            raise ValueError(f"n must be within 1..{bound} for this mode")


def brute_force_completable(h: PartialGraph) -> bool:
    """Try all orientations of the plain edges; independent of the Γ engine."""
    plain = sorted(h.edges)
    if len(plain) > BRUTE_FORCE_MAX_EDGES:
        raise ValueError(f"more than {BRUTE_FORCE_MAX_EDGES} plain edges")
    n = h.n
    adj = h.underlying.adjacency_masks
    base_out = [0] * n
    base_in = [0] * n
    for t, hd in h.arcs:
        base_out[t] |= 1 << hd
        base_in[hd] |= 1 << t

    def is_local_tournament(outs, ins) -> bool:
        for v in range(n):
            for group in (outs[v], ins[v]):
                for u in bit_indices(group):
                    if group & ~adj[u] & ~(1 << u):
                        return False
        return True

    for mask in range(1 << len(plain)):
        outs = base_out[:]
        ins = base_in[:]
        for i, (u, v) in enumerate(plain):
            if mask >> i & 1:
                outs[u] |= 1 << v
                ins[v] |= 1 << u
            else:
                outs[v] |= 1 << u
                ins[u] |= 1 << v
        if is_local_tournament(outs, ins):
            return True
    return False


# ---------------------------------------------------------------------------
# graphs up to isomorphism
# ---------------------------------------------------------------------------


def _graph_sig(g: SimpleGraph) -> bytes:
    return canonical_form(PartialGraph.plain(g)).signature


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple:
    """All connected graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (SimpleGraph(1),)
    out: dict[bytes, SimpleGraph] = {}
    for g in connected_graphs(n - 1):
        for bits in range(1, 1 << (n - 1)):
            extra = frozenset((v, n - 1) for v in bit_indices(bits))
            h = SimpleGraph(n, g.edges | extra)
            sig = _graph_sig(h)
            if sig not in out:
                out[sig] = h
    return tuple(out[k] for k in sorted(out))


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (SimpleGraph(1),)
    out: dict[bytes, SimpleGraph] = {}
    for g in all_graphs(n - 1):
        for bits in range(1 << (n - 1)):
            extra = frozenset((v, n - 1) for v in bit_indices(bits))
            h = SimpleGraph(n, g.edges | extra)
            sig = _graph_sig(h)
            if sig not in out:
                out[sig] = h
    return tuple(out[k] for k in sorted(out))


def _arc_orbit_representatives(g: SimpleGraph, arcsets: Iterator[frozenset]) -> Iterator[frozenset]:
    """Filter arc sets down to one per orbit of the automorphism group."""
    auts = automorphisms(PartialGraph.plain(g))
    seen: set = set()
    for arcs in arcsets:
        key = tuple(sorted(arcs))
        if key in seen:
            continue
        for perm in auts:
            seen.add(tuple(sorted((perm[t], perm[h]) for t, h in arcs)))
        yield arcs


def _all_arcsets(g: SimpleGraph) -> Iterator[frozenset]:
    edges = sorted(g.edges)
    for trits in itertools.product((0, 1, 2), repeat=len(edges)):
        yield frozenset(
            (u, v) if t == 1 else (v, u)
            for (u, v), t in zip(edges, trits)
            if t
        )


def _small_arcsets(g: SimpleGraph, max_arcs: int) -> Iterator[frozenset]:
    yield frozenset()
    if max_arcs == 0:
        return
    oriented = sorted(p for e in sorted(g.edges) for p in (e, (e[1], e[0])))
    for a in oriented:
        yield frozenset((a,))
    for a, b in itertools.combinations(oriented, 2):
        if edge_key(*a) != edge_key(*b):
            yield frozenset((a, b))


def enumerate_pogs(cfg: EnumerationConfig) -> Iterator[PartialGraph]:
    """Every POG matching the config, exactly once per isomorphism class."""
    base = connected_graphs(cfg.n) if cfg.require_connected else all_graphs(cfg.n)
    for g in base:
        if cfg.max_arcs is None:
            arcsets = _all_arcsets(g)
        else:
            arcsets = _small_arcsets(g, cfg.max_arcs)
        for arcs in _arc_orbit_representatives(g, arcsets):
            yield PartialGraph.orient(g, arcs)


# ---------------------------------------------------------------------------
# minimal obstructions at a fixed order
# ---------------------------------------------------------------------------


def _two_arc_candidates(g: SimpleGraph) -> Iterator[tuple]:
    """Arc pairs that are mutually forcing-opposed in the underlying graph."""
    gp = gamma_partition(g)
    pairs = ordered_pairs(g)
    for i, p in enumerate(pairs):
        for q in pairs[i + 1 :]:
            if edge_key(*p) == edge_key(*q):
                continue
            if gp.class_index[p] == gp.class_index[(q[1], q[0])]:
                yield (p, q)


def minimal_obstructions(n: int, two_arc: bool = False) -> list:
    """All certified obstructions on exactly n vertices, up to isomorphism.

    In two-arc mode (needed beyond 6 vertices) only inputs with exactly two
    arcs are searched; arc-free obstructions are covered separately by the
    catalog families.  Candidate filtering reuses the forcing partition of
    each vertex-deleted graph, which certify_obstruction then re-validates.
    """
    bound = TWO_ARC_MAX_N if two_arc else UNRESTRICTED_MAX_N
    if not 1 <= n <= bound:
        raise ValueError(f"n must be within 1..{bound} for this mode")
    found: dict[bytes, PartialGraph] = {}
    for g in connected_graphs(n):
        plain = PartialGraph.plain(g)
        if not is_lt_orientable(g):
            if not two_arc and certify_obstruction(plain) is not None:
                found[canonical_form(plain).signature] = plain
            continue
        # Deletions of an orientable graph stay orientable; trust but verify,
        # since condition 2 needs every one of them completable.
        deletions = [g.delete_vertex(v) for v in range(n)]
        if not all(is_lt_orientable(d) for d in deletions):
            continue
        del_parts = [gamma_partition(d) for d in deletions]
        for p, q in _two_arc_candidates(g):
            endpoints = set(p) | set(q)
            minimal = True
            for v in range(n):
                if v in endpoints:
                    continue
                # relabelled pair positions after deleting v
                dp = del_parts[v]
                a = tuple(x - (x > v) for x in p)
                d = tuple(x - (x > v) for x in (q[1], q[0]))
                if dp.class_index[a] == dp.class_index[d]:
                    minimal = False
                    break
            if not minimal:
                continue
            x = PartialGraph.orient(g, (p, q))
            if certify_obstruction(x) is None:
                raise AssertionError("candidate filter and certifier disagree")
            found[canonical_form(x).signature] = x
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# comparison against the catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonReport:
    n: int
    two_arc: bool
    searched: int
    catalogued: int
    missing_from_catalog: tuple
    missing_from_search: tuple

    @property
    def ok(self) -> bool:
        return not self.missing_from_catalog and not self.missing_from_search

    def render(self) -> str:
        lines = [
            f"order {self.n}{' (two-arc)' if self.two_arc else ''}: "
            f"search found {self.searched}, catalog lists {self.catalogued}"
        ]
        if self.ok:
            lines.append("OK: 0 missing / 0 extra")
        else:
            for pog in self.missing_from_catalog:
                lines.append(f"MISSING FROM CATALOG: {canonical_form(pog).signature.hex()}")
            for entry in self.missing_from_search:
                lines.append(
                    f"MISSING FROM SEARCH: {entry.family}{entry.params} "
                    f"[{entry.figure_ref}] canonical {entry.canonical.hex()}"
                )
        return "\n".join(lines)


def compare_with_catalog(n: int, two_arc: bool = False, entries=None) -> ComparisonReport:
    """Cross-check exhaustive search against the generated catalog at order n."""
    if entries is None:
        entries = enumerate_catalog(n)
    relevant = {
        e.canonical: e
        for e in entries
        if e.pog.n == n and (not two_arc or len(e.pog.arcs) == 2)
    }
    searched = minimal_obstructions(n, two_arc=two_arc)
    searched_sigs = {canonical_form(p).signature: p for p in searched}
    missing_from_catalog = tuple(
        searched_sigs[s] for s in sorted(searched_sigs.keys() - relevant.keys())
    )
    missing_from_search = tuple(
        relevant[s] for s in sorted(relevant.keys() - searched_sigs.keys())
    )
    return ComparisonReport(
        n=n,
        two_arc=two_arc,
        searched=len(searched_sigs),
        catalogued=len(relevant),
        missing_from_catalog=missing_from_catalog,
        missing_from_search=missing_from_search,
    )
