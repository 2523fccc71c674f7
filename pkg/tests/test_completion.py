import pytest

from loctour.completion import (
    Completed,
    NotOrientable,
    Opposing,
    complete,
    is_lt_orientable,
    verify_local_tournament,
)
from loctour.gamma import gamma_partition
from loctour.graphs import PartialGraph, complete_graph, cycle_graph, path_graph
from loctour.search import all_graphs, brute_force_completable, connected_graphs, enumerate_pogs, EnumerationConfig

from conftest import graph, pog


def prism():
    return cycle_graph(6).complement()


class TestVerify:
    def test_directed_triangle_valid(self):
        assert verify_local_tournament(complete_graph(3), {(0, 1), (1, 2), (0, 2)}) is None

    def test_star_violation(self):
        v = verify_local_tournament(graph(3, (0, 1), (1, 2)), {(0, 1), (2, 1)})
        assert v is not None and v.vertex == 1 and v.pair == (0, 2) and v.side == "in"

    def test_transitive_path_valid(self):
        assert verify_local_tournament(path_graph(4), {(0, 1), (1, 2), (2, 3)}) is None

    def test_rejects_wrong_arc_sets(self):
        with pytest.raises(ValueError):
            verify_local_tournament(path_graph(3), {(0, 1)})
        with pytest.raises(ValueError):
            verify_local_tournament(path_graph(3), {(0, 1), (1, 0), (1, 2)})


class TestComplete:
    def test_k3_with_arc(self):
        res = complete(pog(3, edges={(1, 2), (0, 2)}, arcs={(0, 1)}))
        assert isinstance(res, Completed)
        assert (0, 1) in res.arcs
        assert verify_local_tournament(complete_graph(3), res.arcs) is None

    def test_inward_p3_opposing(self):
        res = complete(pog(3, arcs={(0, 1), (2, 1)}))
        assert isinstance(res, Opposing)
        assert (res.witness.first, res.witness.second) == ((0, 1), (2, 1))
        assert res.witness.sequence == ((0, 1), (1, 2))

    def test_prism_not_orientable(self):
        res = complete(PartialGraph.plain(prism()))
        assert isinstance(res, NotOrientable)
        assert res.component == 0
        v = res.violation
        assert not prism().has_edge(*v.pair)

    def test_empty_and_isolated(self):
        assert complete(pog(0)) == Completed(frozenset())
        assert complete(pog(3)) == Completed(frozenset())

    def test_components_processed_independently(self):
        # a completable square next to the blocked path
        h = pog(7, edges={(3, 4), (4, 5), (5, 6), (3, 6)}, arcs={(0, 1), (2, 1)})
        res = complete(h)
        assert isinstance(res, Opposing)
        h2 = pog(7, edges={(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)})
        res2 = complete(h2)
        assert isinstance(res2, Completed)
        assert len(res2.arcs) == 6

    def test_completion_extends_input_arcs(self, rng):
        for _ in range(50):
            n = rng.randint(1, 6)
            g = connected_graphs(n)[rng.randrange(len(connected_graphs(n)))]
            arcs = set()
            for u, v in g.edges:
                roll = rng.random()
                if roll < 0.3:
                    arcs.add((u, v) if rng.random() < 0.5 else (v, u))
            try:
                h = PartialGraph.orient(g, arcs)
            except ValueError:
                continue
            res = complete(h)
            if isinstance(res, Completed):
                assert h.arcs <= res.arcs
                assert {tuple(sorted(a)) for a in res.arcs} == {tuple(e) for e in g.edges}
                assert verify_local_tournament(g, res.arcs) is None

    def test_determinism(self):
        h = pog(5, edges=path_graph(5).edges)
        assert complete(h) == complete(h)

    def test_class_consistency_of_completions(self, rng):
        # any two orientations in one closure class are adopted together
        for n in range(2, 6):
            for g in connected_graphs(n):
                res = complete(PartialGraph.plain(g))
                if not isinstance(res, Completed):
                    continue
                gp = gamma_partition(g)
                for cls in gp.classes:
                    taken = {p in res.arcs for p in cls}
                    assert len(taken) == 1


class TestRecognition:
    def test_paths_cycles_complete_graphs(self):
        for g in (path_graph(6), cycle_graph(7), complete_graph(5)):
            assert is_lt_orientable(g)

    def test_prism_and_claw(self):
        assert not is_lt_orientable(prism())
        assert not is_lt_orientable(graph(4, (0, 1), (0, 2), (0, 3)))

    def test_orientable_iff_brute_force_small(self):
        for n in range(1, 5):
            for g in all_graphs(n):
                assert is_lt_orientable(g) == brute_force_completable(PartialGraph.plain(g))


class TestOracleAgreementSmall:
    def test_all_pogs_up_to_four(self):
        # the full five-vertex sweep runs in the acceptance suite
        for n in range(1, 5):
            cfg = EnumerationConfig(n=n, max_arcs=None, require_connected=False)
            for h in enumerate_pogs(cfg):
                assert isinstance(complete(h), Completed) == brute_force_completable(h)

    def test_random_soak_six_and_seven(self, rng):
        # spot-check beyond the exhaustive range, bounded to keep the
        # orientation sweep affordable
        from conftest import random_pog

        checked = 0
        while checked < 250:
            h = random_pog(rng, rng.choice((6, 7)), p=rng.uniform(0.3, 0.8))
            if len(h.edges) > 14:
                continue
            assert isinstance(complete(h), Completed) == brute_force_completable(h)
            checked += 1
