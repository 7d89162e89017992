import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings

from resreg.families import (
    cocktail_party,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    figure_graph,
    path_graph,
)
from resreg.graph import GraphError, cartesian_k2, double_graph, lexicographic_k2
from resreg.linalg import laplacian_pinv
from resreg.resistance import profile, resistance_matrix
from resreg.spectral import (
    BOUND_IDS,
    SpectralError,
    _check_resistance_spectrum,
    bounds_report,
    complete_cartesian_k2_spectrum,
    complete_cartesian_k2_spectrum_exact,
    double_graph_spectrum,
    eigencondition_regularity_test,
    energy_identities,
    group_eigenvalues,
    laplacian_eigen,
    lexicographic_k2_spectrum,
    make_spectrum,
    q_polynomial_check,
    r_spectrum,
    spectra_match,
)

from conftest import connected_graphs, corpus_upto


class TestGrouping:
    def test_merges_within_tolerance(self):
        assert group_eigenvalues([3.0, 3.0 + 1e-12, 1.0]) == [(3.0, 2), (1.0, 1)]
        assert group_eigenvalues([3.0, 2.9, 1.0]) == [(3.0, 1), (2.9, 1), (1.0, 1)]

    def test_relative_for_large_values(self):
        assert group_eigenvalues([1e6, 1e6 - 1e-4]) == [(1e6, 2)]
        assert len(group_eigenvalues([1e6, 1e6 - 1e-2])) == 2

    def test_make_spectrum(self):
        sp = make_spectrum([-1, 2, -1])
        assert sp.values == (2.0, -1.0, -1.0) and sp.energy == 4.0 and sp.radius == 2.0
        assert sp.distinct == [2.0, -1.0] and sp.to_dict()["groups"] == [[2.0, 1], [-1.0, 2]]


class TestRSpectrum:
    def test_c4(self):
        sp = r_spectrum(cycle_graph(4))
        assert np.allclose(sp.values, [2.5, -0.5, -1, -1], atol=1e-12)
        assert [m for _, m in sp.groups] == [1, 1, 2]

    @pytest.mark.parametrize("n", range(3, 9))
    def test_closed_form_energies(self, n):
        assert r_spectrum(complete_graph(n)).energy == pytest.approx(4 * (n - 1) / n, abs=1e-10)
        assert r_spectrum(cycle_graph(n)).energy == pytest.approx((n * n - 1) / 3, abs=1e-10)
        assert r_spectrum(complete_bipartite(n, n)).energy == pytest.approx((8 * n - 6) / n, abs=1e-10)

    def test_d2_k3_energy(self):
        assert r_spectrum(double_graph(complete_graph(3))).energy == pytest.approx(13 / 3, abs=1e-12)

    def test_against_numpy(self):
        for g in corpus_upto(5):
            sp = r_spectrum(g)
            ref = np.linalg.eigvalsh(resistance_matrix(g).to_numpy())[::-1]
            assert np.allclose(sp.values, ref, atol=1e-11)

    def test_invariant_guard(self):
        prof = profile(complete_graph(2))
        with pytest.raises(SpectralError, match="sum"):
            _check_resistance_spectrum(make_spectrum([1.0, 1.0]), prof, "K2")
        with pytest.raises(SpectralError, match="positive"):
            _check_resistance_spectrum(make_spectrum([0.5, 0.5, -1.0]), _StubProfile(F(3, 2)), "x")


class _StubProfile:
    def __init__(self, s_sum):
        self.s_sum = s_sum


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=9))
def test_resistance_spectrum_identities(g):
    prof = profile(g)
    sp = r_spectrum(g, prof=prof)
    assert abs(sum(sp.values)) < 1e-8 * max(1, sp.radius)
    assert sp.sum_squares() == pytest.approx(float(prof.s_sum), rel=1e-8)
    assert sp.energy == pytest.approx(2 * sp.values[0], rel=1e-8)


class TestLaplacianEigen:
    def test_complete(self):
        le = laplacian_eigen(complete_graph(5))
        assert np.allclose(le.gammas, [5, 5, 5, 5, 0]) and le.gammas[-1] == 0.0
        assert np.allclose(le.vectors[:, -1], 1 / math.sqrt(5))

    def test_eigencondition_matches_exact(self):
        for g in corpus_upto(6):
            t = eigencondition_regularity_test(g)
            assert t.holds == profile(g).resistance_regular, g.name
            assert np.allclose(t.values, [float(x) for x in laplacian_pinv(g).diagonal()])


class TestBounds:
    def test_ids_and_order(self):
        rep = bounds_report(cycle_graph(5))
        assert tuple(e.id for e in rep.entries) == BOUND_IDS

    def test_alpha_energy_k4(self):
        e = bounds_report(complete_graph(4))["ALPHA_ENERGY_UPPER"]
        assert e.lhs == pytest.approx(3) and e.rhs == pytest.approx(3)
        assert e.equality and e.condition_holds
        # the S - alpha reading gives a different (looser) right side on K4
        assert e.extra["literal_rhs"] > e.rhs + 0.1

    def test_kf_lower_k3(self):
        e = bounds_report(complete_graph(3))["KF_LOWER"]
        assert e.lhs == pytest.approx(4 / 3) and e.rhs == pytest.approx(4 / 3) and e.equality

    def test_path_strict(self):
        rep = bounds_report(path_graph(4))
        assert not rep.violations() and not rep.mismatches()
        assert not any(rep[b].equality for b in BOUND_IDS)

    def test_figure2_equalities(self):
        rep = bounds_report(figure_graph("figure2"))
        for b in ("KF_LOWER", "ROWSUM_LOWER", "WEIGHTED_ROWSUM_UPPER", "TI_LOWER",
                  "AVG_DEG_UPPER", "AVG_DEG_LOWER", "ENERGY_ROWSUM_LOWER", "ENERGY_KF_LOWER"):
            assert rep[b].equality, b
        assert not rep["ALPHA_ENERGY_UPPER"].equality and not rep["KF_SPECTRAL_UPPER"].equality
        assert rep["KF_LOWER"].rhs == pytest.approx(47 / 15)

    def test_to_dict(self):
        d = bounds_report(complete_graph(3)).to_dict()
        assert len(d["bounds"]) == 10 and d["bounds"][0]["condition"] == "resistance regular"

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            bounds_report(complete_graph(3))["NOPE"]

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(min_n=2, max_n=9))
    def test_random_graphs(self, g):
        rep = bounds_report(g)
        assert rep.violations() == []


class TestQPolynomial:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete_coefficients(self, n):
        q = q_polynomial_check(complete_graph(n))
        assert np.allclose(q.coefficients, [n / 2, 1]) and q.max_abs_deviation < 1e-10

    @pytest.mark.parametrize("g", [figure_graph("figure1"), figure_graph("figure2"), cocktail_party(4),
                                   cycle_graph(7), complete_bipartite(3, 3)], ids=str)
    def test_rr_graphs(self, g):
        assert q_polynomial_check(g).max_abs_deviation < 1e-8

    def test_not_rr(self):
        with pytest.raises(GraphError):
            q_polynomial_check(path_graph(3))


class TestProductSpectra:
    @pytest.mark.parametrize("g", [complete_graph(4), cycle_graph(5), cocktail_party(3),
                                   figure_graph("figure1"), figure_graph("figure2")], ids=str)
    def test_double_and_lexicographic(self, g):
        assert spectra_match(double_graph_spectrum(g), r_spectrum(double_graph(g))) < 1e-9
        assert spectra_match(lexicographic_k2_spectrum(g), r_spectrum(lexicographic_k2(g))) < 1e-9

    def test_requires_regular_rr(self):
        with pytest.raises(GraphError, match="not regular"):
            double_graph_spectrum(path_graph(3))
        with pytest.raises(GraphError, match="not resistance regular"):
            lexicographic_k2_spectrum(figure_graph("figure3"))

    def test_complete_prism_n3(self):
        assert complete_cartesian_k2_spectrum_exact(3) == [
            (F(47, 15), 1), (F(-2, 5), 2), (F(-2, 3), 2), (F(-1), 1)]

    def test_complete_prism_n4(self):
        exact = complete_cartesian_k2_spectrum_exact(4)
        assert exact[0] == (F(7, 2), 1) and (F(-1, 3), 3) in exact and (F(-1, 2), 3) in exact

    def test_complete_prism_n2_is_c4(self):
        # K2 x K2 = C4: -2/n and -1 coincide at n = 2
        sp = complete_cartesian_k2_spectrum(2)
        assert spectra_match(sp, r_spectrum(cycle_graph(4))) < 1e-12
        assert sp.groups[-1] == (-1.0, 2)
        assert complete_cartesian_k2_spectrum_exact(2) == [(F(5, 2), 1), (F(-1, 2), 1), (F(-1), 2)]

    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete_prism_numeric(self, n):
        assert spectra_match(complete_cartesian_k2_spectrum(n), r_spectrum(cartesian_k2(complete_graph(n)))) < 1e-9

    def test_size_mismatch(self):
        assert spectra_match(make_spectrum([1, -1]), make_spectrum([1])) == math.inf


class TestEnergyIdentities:
    def test_complete(self):
        rec = energy_identities(complete_graph(5))
        assert rec.ok and rec.two_k == pytest.approx(16 / 5) and rec.nk_over_2 == 4
        assert rec.to_dict()["kirchhoff"] == "4/1"

    def test_non_rr_has_no_k(self):
        rec = energy_identities(path_graph(4))
        assert rec.ok and rec.two_k is None

    def test_corpus(self):
        for g in corpus_upto(5):
            assert energy_identities(g).failures == [], g.name
