from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import normalized_paths
from nucaracol.caracol import CaracolGraph, in_degree_vector
from nucaracol.enumeration import (HStarVector, KostantQuery, cat_determinant, complex_h_vector,
                                   ehrhart_values, facet_count, gravity_count,
                                   hstar_ehrhart_oracle, hstar_shelling, kostant, narayana,
                                   pitman_stanley_points, rational_catalan, rational_path,
                                   restriction_sizes, shelling_orders, volume_lidskii)
from nucaracol.framing import length_framing, maximal_cliques, planar_framing
from nucaracol.paths import LatticePath, nu_dyck_paths

paths = st.text(alphabet="NE", min_size=0, max_size=7).map(lambda s: LatticePath("N" + s))


class TestCatalan:
    def test_determinant(self, nu35):
        assert cat_determinant(nu35) == 7
        assert cat_determinant(LatticePath("NEEE")) == 1

    def test_rational(self):
        assert rational_path(3, 5).steps == "NENEENEE"
        assert rational_path(1, 1).steps == "NE"
        assert rational_path(2, 3).steps == "NENEE"
        for a, b in [(2, 3), (3, 5), (3, 4), (4, 5), (2, 7)]:
            assert len(nu_dyck_paths(rational_path(a, b))) == rational_catalan(a, b)
        with pytest.raises(ValueError):
            rational_path(2, 4)

    def test_classical(self):
        staircase = LatticePath("NE" * 4 + "E")
        assert cat_determinant(staircase) == comb(8, 4) // 5

    def test_pitman_stanley(self, nu35):
        assert pitman_stanley_points(nu35) == 7
        assert pitman_stanley_points(LatticePath("NNNE")) == 1

    def test_gravity(self, nu35):
        assert gravity_count(nu35) == 7
        assert gravity_count(LatticePath("NNN")) == 1

    @given(paths)
    @settings(max_examples=80, deadline=None)
    def test_agreement(self, nu):
        n = len(nu_dyck_paths(nu))
        assert cat_determinant(nu) == n == pitman_stanley_points(nu) == gravity_count(nu)
        assert volume_lidskii(nu) == n


class TestKostant:
    def test_zero_vector(self, nu35):
        g = CaracolGraph(nu35)
        assert kostant(KostantQuery(g, (0,) * g.n_plus_1)) == 1

    def test_unit_flow_on_smallest_graph(self):
        g = CaracolGraph(LatticePath("N"))
        assert kostant(KostantQuery(g, (1, 0, 0, -1))) == 2

    def test_in_degree_vector(self, nu_21031):
        g = CaracolGraph(nu_21031)
        assert kostant(KostantQuery(g, in_degree_vector(g).entries)) == len(nu_dyck_paths(nu_21031))

    def test_query_validation(self, nu35):
        g = CaracolGraph(nu35)
        with pytest.raises(ValueError):
            KostantQuery(g, (1, 0, 0, 0, 0, 0))
        with pytest.raises(ValueError):
            KostantQuery(g, (1, -1))

    def test_small_volumes(self):
        assert volume_lidskii(LatticePath("N")) == 1
        assert volume_lidskii(LatticePath("NENE")) == 2


class TestHStar:
    def test_example(self, nu35):
        assert hstar_shelling(nu35).as_list() == [1, 4, 2, 0, 0, 0, 0, 0, 0]
        assert narayana(nu35).as_list() == [1, 4, 2, 0, 0, 0, 0, 0, 0]

    def test_top_path(self):
        assert hstar_shelling(LatticePath("NNNEE")).as_list() == [1, 0, 0, 0, 0, 0]

    def test_ehrhart_low_dilates(self, nu35):
        e = ehrhart_values(nu35, 1)
        assert e == [1, len(CaracolGraph(nu35).routes)]

    def test_ehrhart_small(self):
        nu = LatticePath("NENE")
        assert hstar_ehrhart_oracle(nu) == hstar_shelling(nu)

    def test_several_orders(self, nu35):
        orders = shelling_orders(nu35, 3)
        assert len({tuple(o) for o in orders}) == 3
        assert all(o[0].steps == "NNNEEEEE" for o in orders)

    def test_restriction_sizes(self):
        facets = [frozenset("abc"), frozenset("bcd"), frozenset("cde")]
        assert restriction_sizes(facets) == [0, 1, 1]

    def test_h_vector_of_two_triangles(self):
        # two triangles glued along an edge form a disk: h = (1, 1, 0, 0)
        assert complex_h_vector([frozenset("abc"), frozenset("bcd")]).as_list() == [1, 1, 0]

    @pytest.mark.parametrize("nu", normalized_paths(6), ids=str)
    def test_both_complexes(self, nu):
        g = CaracolGraph(nu)
        expected = narayana(nu)
        for f in (length_framing(g), planar_framing(g)):
            h = complex_h_vector([c.routes for c in maximal_cliques(g, f)])
            assert h == expected

    @given(paths)
    @settings(max_examples=40, deadline=None)
    def test_sum_and_start(self, nu):
        h = narayana(nu)
        assert h.total() == len(nu_dyck_paths(nu)) and h[0] == 1

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            HStarVector((1, -1))


class TestFacetFormula:
    def test_examples(self, nu35):
        assert facet_count(nu35) == 11
        assert facet_count(LatticePath("NNNEE")) == 6
        for n in (1, 2, 3):
            assert facet_count(LatticePath("NE" * n)) == 3 * n
