import pytest

from loctour.catalog import certify_obstruction
from loctour.families import family_names, family_params_upto, generate_family, generate_family_tagged
from loctour.graphs import cycle_graph
from loctour.interval import classify_cut_vertex, straight_enumeration
from loctour.iso import canonical_form

from conftest import pog


class TestKnownInstances:
    def test_div_i_smallest_is_inward_p3(self):
        x = generate_family("div_i", (3,))
        assert canonical_form(x) == canonical_form(pog(3, arcs={(0, 1), (2, 1)}))

    def test_div_i_p4(self):
        x = generate_family("div_i", (4,))
        assert x.arcs == frozenset({(0, 1), (3, 2)})
        assert x.edges == frozenset({(1, 2)})

    def test_disconnected_1_2_is_outward_p3(self):
        x = generate_family("disconnected", (1, 2))
        assert canonical_form(x) == canonical_form(pog(3, arcs={(0, 1), (0, 2)}))

    def test_disconnected_parity_tags(self):
        _, tag_even = generate_family_tagged("disconnected", (2, 2))
        _, tag_odd = generate_family_tagged("disconnected", (1, 2))
        assert tag_even == "disc(i)" and tag_odd == "disc(ii)"

    def test_noarc_even_cycle_is_prism_complement(self):
        x = generate_family("noarc_comp_even_cycle", (3,))
        assert not x.arcs
        assert x.underlying.complement() == cycle_graph(6)

    def test_dual_of_div_i_equals_disconnected(self):
        a = generate_family("div_i", (3,)).dual()
        b = generate_family("disconnected", (1, 2))
        assert canonical_form(a) == canonical_form(b)


class TestParamValidation:
    @pytest.mark.parametrize(
        "family,params",
        [
            ("div_i", (2,)),
            ("div_ii", (4,)),
            ("div_iii", (6,)),
            ("disconnected", (1, 1)),
            ("tree_i", (4,)),
            ("tree_ii", (4, 3, 2)),
            ("tree_iv", (4, 2, 2, 0, 0)),
            ("c4_i", (2,)),
            ("c4_xi", (3, 0)),
            ("c4_xiii", (0,)),
            ("c4_xv", (1,)),
            ("noarc_comp_even_cycle", (2,)),
            ("noarc_tucker_fig1", (6,)),
        ],
    )
    def test_out_of_range_rejected(self, family, params):
        with pytest.raises(ValueError):
            generate_family(family, params)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            generate_family("nope", ())

    def test_param_spaces_respect_bound(self):
        for name in family_names():
            for params in family_params_upto(name, 9):
                assert generate_family(name, params).n <= 9


class TestEveryInstanceCertifies:
    def test_all_instances_to_ten(self):
        for name in family_names():
            for params in family_params_upto(name, 10):
                x = generate_family(name, params)
                assert certify_obstruction(x) is not None, (name, params)
                assert certify_obstruction(x.dual()) is not None, (name, params, "dual")


class TestStructuralTags:
    def test_dividing_families_have_dividing_cut_vertex(self):
        for family, params in (("div_i", (5,)), ("div_ii", (6,)), ("div_iii", (7,))):
            x = generate_family(family, params)
            order = straight_enumeration(x.underlying)
            assert order is not None
            cuts = x.underlying.cut_vertices()
            assert any(classify_cut_vertex(x, order, v) == "dividing" for v in cuts)

    def test_one_nondividing_families(self):
        for key in ("ond4_i", "ond5_ii", "ond6_iv", "ond7_ii", "ond8_i"):
            x = generate_family(key, ())
            order = straight_enumeration(x.underlying)
            assert order is not None
            cuts = x.underlying.cut_vertices()
            assert cuts and all(
                classify_cut_vertex(x, order, v) == "non_dividing" for v in cuts
            )

    def test_complement_families_have_no_cut_vertices(self):
        # boundary parameters may degenerate into cut-vertex graphs (and then
        # coincide with a cut-vertex family); the canonical representatives
        # of each complement-space family are cut-free
        cases = (
            ("disconnected", (2, 3)),
            ("tree_ii", (5, 3, 1)),
            ("c4_i", (4,)),
            ("c4_xiv", (1, 1)),
            ("twoc4_iv", (2,)),
            ("c5_i", ()),
            ("onlyc3_i", ()),
        )
        for family, params in cases:
            x = generate_family(family, params)
            assert not x.underlying.cut_vertices(), family
