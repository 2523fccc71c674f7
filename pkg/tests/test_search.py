import pytest

from loctour.catalog import certify_obstruction, enumerate_catalog
from loctour.graphs import PartialGraph, complete_graph, cycle_graph
from loctour.iso import canonical_form, contains
from loctour.search import (
    EnumerationConfig,
    all_graphs,
    brute_force_completable,
    compare_with_catalog,
    connected_graphs,
    enumerate_pogs,
    minimal_obstructions,
)

from conftest import pog


class TestBruteForce:
    def test_examples(self):
        assert brute_force_completable(pog(3, edges={(1, 2), (0, 2)}, arcs={(0, 1)}))
        assert not brute_force_completable(pog(3, arcs={(0, 1), (2, 1)}))
        assert brute_force_completable(PartialGraph.plain(cycle_graph(4)))
        assert not brute_force_completable(PartialGraph.plain(cycle_graph(6).complement()))

    def test_edge_budget(self):
        with pytest.raises(ValueError):
            brute_force_completable(PartialGraph.plain(complete_graph(8)))


class TestGraphEnumeration:
    def test_connected_counts(self):
        assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]

    def test_all_counts(self):
        assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


class TestEnumeratePogs:
    def test_no_arc_connected_counts(self):
        for n, expected in ((3, 2), (4, 6), (5, 21), (6, 112)):
            cfg = EnumerationConfig(n=n, max_arcs=0)
            assert sum(1 for _ in enumerate_pogs(cfg)) == expected

    def test_three_vertex_two_arc_catalogue(self):
        cfg = EnumerationConfig(n=3, max_arcs=2)
        pogs = list(enumerate_pogs(cfg))
        sigs = {canonical_form(h).signature for h in pogs}
        assert len(sigs) == len(pogs)
        assert canonical_form(pog(3, arcs={(0, 1), (2, 1)})).signature in sigs
        assert canonical_form(pog(3, arcs={(1, 0), (1, 2)})).signature in sigs

    def test_no_two_isomorphic_unrestricted(self):
        cfg = EnumerationConfig(n=4, max_arcs=None)
        sigs = [canonical_form(h).signature for h in enumerate_pogs(cfg)]
        assert len(sigs) == len(set(sigs))

    def test_unrestricted_count_matches_direct_dedup(self):
        # cross-check the orbit-based dedup against plain canonical dedup
        import itertools

        cfg = EnumerationConfig(n=4, max_arcs=None, require_connected=True)
        ours = sum(1 for _ in enumerate_pogs(cfg))
        brute = set()
        for g in connected_graphs(4):
            edges = sorted(g.edges)
            for trits in itertools.product((0, 1, 2), repeat=len(edges)):
                arcs = frozenset(
                    (u, v) if t == 1 else (v, u)
                    for (u, v), t in zip(edges, trits)
                    if t
                )
                brute.add(canonical_form(PartialGraph.orient(g, arcs)).signature)
        assert ours == len(brute)

    def test_bounds(self):
        with pytest.raises(ValueError):
            EnumerationConfig(n=7, max_arcs=None)
        with pytest.raises(ValueError):
            EnumerationConfig(n=9, max_arcs=2)
        with pytest.raises(ValueError):
            EnumerationConfig(n=3, max_arcs=1)

    def test_count_matches_burnside(self):
        # orbit counting over the symmetric group action on pair states
        # (absent / edge / two arc directions) is an independent census
        import itertools
        from math import factorial

        def burnside(n):
            total = 0
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            for perm in itertools.permutations(range(n)):
                seen = set()
                fixed = 1
                for u, v in pairs:
                    if (u, v) in seen:
                        continue
                    length, flips, cu, cv = 0, 0, u, v
                    while True:
                        seen.add((min(cu, cv), max(cu, cv)))
                        nu, nv = perm[cu], perm[cv]
                        if nu > nv:
                            flips += 1
                            nu, nv = nv, nu
                        cu, cv = nu, nv
                        if (cu, cv) == (u, v):
                            break
                    fixed *= 2 if flips % 2 else 4
                total += fixed
            return total // factorial(n)

        for n in (2, 3, 4):
            cfg = EnumerationConfig(n=n, max_arcs=None, require_connected=False)
            assert sum(1 for _ in enumerate_pogs(cfg)) == burnside(n)


class TestMinimalObstructions:
    def test_order_three(self):
        obs = minimal_obstructions(3)
        assert len(obs) == 2
        sigs = {canonical_form(x).signature for x in obs}
        assert sigs == {
            canonical_form(pog(3, arcs={(0, 1), (2, 1)})).signature,
            canonical_form(pog(3, arcs={(1, 0), (1, 2)})).signature,
        }

    def test_order_four_contains_known(self):
        obs = minimal_obstructions(4)
        assert len(obs) == 5
        sigs = {canonical_form(x).signature for x in obs}
        assert canonical_form(pog(4, edges={(1, 2)}, arcs={(0, 1), (3, 2)})).signature in sigs
        from loctour.families import generate_family

        assert canonical_form(generate_family("ond4_i", ())).signature in sigs

    def test_matches_unoptimized_route(self):
        # ground truth: enumerate every POG and certify it directly
        for n in (3, 4, 5):
            expected = set()
            cfg = EnumerationConfig(n=n, max_arcs=None)
            for h in enumerate_pogs(cfg):
                if certify_obstruction(h) is not None:
                    expected.add(canonical_form(h).signature)
            got = {canonical_form(x).signature for x in minimal_obstructions(n)}
            assert got == expected

    def test_two_arc_mode_drops_noarc(self):
        all_six = minimal_obstructions(6)
        two_arc = minimal_obstructions(6, two_arc=True)
        assert {len(x.arcs) for x in all_six} == {0, 2}
        assert {len(x.arcs) for x in two_arc} == {2}
        assert len(all_six) == len(two_arc) + 4

    def test_antichain_under_containment(self):
        # no minimal obstruction properly contains another
        pool = [x for n in (3, 4, 5) for x in minimal_obstructions(n)]
        for a in pool:
            for b in pool:
                if a is not b:
                    assert contains(a, b) is None

    def test_bounds(self):
        with pytest.raises(ValueError):
            minimal_obstructions(7)
        with pytest.raises(ValueError):
            minimal_obstructions(9, two_arc=True)


class TestCompareWithCatalog:
    def test_small_orders_clean(self):
        entries = enumerate_catalog(5)
        for n in (3, 4, 5):
            report = compare_with_catalog(n, entries=entries)
            assert report.ok
            assert "OK: 0 missing / 0 extra" in report.render()

    def test_report_flags_discrepancies(self):
        entries = [e for e in enumerate_catalog(4) if e.params != (4,)]
        report = compare_with_catalog(4, entries=entries)
        assert not report.ok
        assert report.missing_from_catalog
        assert "MISSING FROM CATALOG" in report.render()
