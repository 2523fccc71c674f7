"""Obstruction certification, catalog enumeration, extraction, and matching.

An obstruction certificate witnesses the three minimality conditions
computationally: the input has no completion, every one-vertex deletion
has one, and relaxing any single arc to an edge restores one.  The catalog
enumerates every family over all legal parameters up to a vertex budget,
closes under arc reversal, deduplicates by canonical form, and certifies
every entry; a certification failure aborts enumeration because it can only
mean a transcription bug in the generators.
"""
from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .completion import Completed, CompletionResult, Opposing, complete
from .families import FAMILIES, generate_family_tagged
from .graphs import PartialGraph
from .iso import canonical_form


@dataclass(frozen=True)
class ObstructionCertificate:
    """Evidence for the three minimal-non-completability conditions."""

    not_completable: CompletionResult
    vertex_deletions: tuple  # (vertex, Completed) per vertex, ascending
    arc_relaxations: tuple  # (arc, Completed) per arc, ascending
    arc_count: int
    all_vertices_in_sequence: bool


def certify_obstruction(x: PartialGraph) -> Optional[ObstructionCertificate]:
    """Certificate if ``x`` is an obstruction, else None."""
    blocked = complete(x)
    if isinstance(blocked, Completed):
        return None
    deletions = []
    for v in range(x.n):
        res = complete(x.delete_vertex(v))
        if not isinstance(res, Completed):
            return None
        deletions.append((v, res))
    relaxations = []
    for arc in sorted(x.arcs):
        res = complete(x.relax_arc(arc))
        if not isinstance(res, Completed):
            return None
        relaxations.append((arc, res))
    covered = False
    if isinstance(blocked, Opposing):
        touched = {v for pair in blocked.witness.sequence for v in pair}
        covered = touched == set(range(x.n))
    return ObstructionCertificate(
        not_completable=blocked,
        vertex_deletions=tuple(deletions),
        arc_relaxations=tuple(relaxations),
        arc_count=len(x.arcs),
        all_vertices_in_sequence=covered,
    )


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    params: tuple
    pog: PartialGraph
    figure_ref: str
    is_dual: bool
    canonical: bytes


class CatalogError(RuntimeError):
    """A generated family member failed certification (transcription bug)."""


def _instantiate(max_n: int):
    for name, fam in FAMILIES.items():
        for params in fam.params_upto(max_n):
            pog, tag = generate_family_tagged(name, params)
            if pog.n > max_n:
                continue
            yield CatalogEntry(name, params, pog, tag, False, canonical_form(pog).signature)
            dual = pog.dual()
            yield CatalogEntry(name, params, dual, tag, True, canonical_form(dual).signature)


def _certify_entry(entry: CatalogEntry) -> tuple:
    return entry.canonical, certify_obstruction(entry.pog) is not None


def enumerate_catalog(max_n: int, threads: int = 1) -> list:
    """All catalog entries on at most ``max_n`` vertices, deduplicated.

    Duals are included; canonical-form collisions keep the first entry and
    merge the figure tags.  Every surviving entry is certified.
    """
    if max_n < 3:
        raise ValueError("max_n must be at least 3")
    entries: dict[bytes, CatalogEntry] = {}
    for entry in _instantiate(max_n):
        known = entries.get(entry.canonical)
        if known is None:
            entries[entry.canonical] = entry
        else:
            tag = entry.figure_ref + ("*" if entry.is_dual else "")
            if tag not in known.figure_ref:
                entries[entry.canonical] = replace(known, figure_ref=f"{known.figure_ref} | {tag}")
    ordered = list(entries.values())
    if threads > 1:
        with multiprocessing.Pool(threads) as pool:
            results = pool.map(_certify_entry, ordered, chunksize=16)
    else:
        results = [_certify_entry(e) for e in ordered]
    for entry, (_, ok) in zip(ordered, results):
        if not ok:
            raise CatalogError(
                f"family {entry.family} params {entry.params} "
                f"({'dual' if entry.is_dual else 'primal'}) failed certification"
            )
    return ordered


def containment_collisions(entries: Iterable[CatalogEntry]) -> list:
    """Pairs of distinct entries where one is contained in the other.

    Minimality should make this empty (a contained obstruction would
    contradict the container's vertex/arc minimality); any hit is reported
    as a diagnostic rather than treated as an error.
    """
    from .iso import contains

    entries = list(entries)
    hits = []
    for small in entries:
        for big in entries:
            if small.canonical == big.canonical or small.pog.n > big.pog.n:
                continue
            if contains(big.pog, small.pog) is not None:
                hits.append((big, small))
    return hits


def extract_obstruction(h: PartialGraph) -> Optional[PartialGraph]:
    """Greedy minimal non-completable sub-POG of ``h``; None if completable.

    Deterministic: each round applies the first vertex deletion (ascending
    ids), then the first arc relaxation (ascending), that preserves
    non-completability; stops when nothing does.
    """
    if isinstance(complete(h), Completed):
        return None
    current = h
    while True:
        shrunk = None
        for v in range(current.n):
            candidate = current.delete_vertex(v)
            if not isinstance(complete(candidate), Completed):
                shrunk = candidate
                break
        if shrunk is None:
            for arc in sorted(current.arcs):
                candidate = current.relax_arc(arc)
                if not isinstance(complete(candidate), Completed):
                    shrunk = candidate
                    break
        if shrunk is None:
            return current
        current = shrunk


def match_catalog(x: PartialGraph, max_n: int = 0, entries: Optional[Iterable[CatalogEntry]] = None) -> list:
    """Catalog identities isomorphic to ``x``: (family, params, is_dual) triples.

    Families overlap, but deduplication keeps one entry per isomorphism
    class, so the merged figure tags are reported through the single match.
    """
    if entries is None:
        entries = enumerate_catalog(max_n if max_n else x.n)
    sig = canonical_form(x).signature
    return [(e.family, e.params, e.is_dual) for e in entries if e.canonical == sig]


# ---------------------------------------------------------------------------
# JSON serialization (the catalog wire format)
# ---------------------------------------------------------------------------


def catalog_to_json(entries: Iterable[CatalogEntry]) -> str:
    payload = [
        {
            "family": e.family,
            "params": list(e.params),
            "figure_ref": e.figure_ref,
            "is_dual": e.is_dual,
            "pog": {
                "n": e.pog.n,
                "edges": sorted(list(p) for p in e.pog.edges),
                "arcs": sorted(list(a) for a in e.pog.arcs),
            },
            "canonical": e.canonical.hex(),
        }
        for e in entries
    ]
    return json.dumps(payload, indent=2) + "\n"


def catalog_from_json(text: str) -> list:
    entries = []
    for item in json.loads(text):
        pog = PartialGraph(
            item["pog"]["n"],
            frozenset(tuple(e) for e in item["pog"]["edges"]),
            frozenset(tuple(a) for a in item["pog"]["arcs"]),
        )
        entries.append(
            CatalogEntry(
                family=item["family"],
                params=tuple(item["params"]),
                pog=pog,
                figure_ref=item["figure_ref"],
                is_dual=item["is_dual"],
                canonical=bytes.fromhex(item["canonical"]),
            )
        )
    return entries
