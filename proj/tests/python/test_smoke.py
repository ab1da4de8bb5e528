"""Smoke tests for the chorded_spectra extension module."""

import math

import pytest

import chorded_spectra as cs


def test_graph_construction():
    g = cs.build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert g.order == 4
    assert g.size == 5
    assert g.has_edge(0, 2)
    assert g.is_connected()
    assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]


def test_family_and_graph6():
    k4 = cs.family("complete:4")
    assert cs.graph6_encode(k4) == "C~"
    back = cs.graph6_decode("C~")
    assert back == k4
    assert cs.isomorphic(cs.family("star:9"), cs.graph6_decode(cs.graph6_encode(cs.family("star:9"))))


def test_spectral_values():
    assert cs.spectral_radius(cs.family("star:9")) == pytest.approx(3.0, abs=1e-9)
    assert cs.spectral_radius(cs.family("complete_bipartite:2,5")) == pytest.approx(
        math.sqrt(10), abs=1e-9
    )
    assert cs.theta(6) == pytest.approx((1 + math.sqrt(17)) / 2, abs=1e-9)
    assert cs.threshold_chorded(100) == pytest.approx(10.0, abs=1e-9)
    assert cs.threshold_k_chorded(9, 2) == pytest.approx((1 + math.sqrt(33)) / 2, abs=1e-9)
    v = cs.perron_vector(cs.family("complete:4"))
    assert v == pytest.approx([0.5] * 4, abs=1e-9)


def test_detection():
    assert cs.has_chorded_cycle(cs.family("complete_bipartite:2,5")) is None
    cycle, chords = cs.has_chorded_cycle(cs.family("complete:4"))
    assert len(cycle) >= 4
    assert len(chords) >= 1
    assert cs.find_s_chorded_k_cycle(cs.family("sk4"), 2, 5) is not None
    assert cs.find_s_chorded_cycle(cs.family("cycle:8"), 1) is None


def test_enumeration_and_reports():
    assert cs.count_graphs(4) == 11
    report = cs.extremal_spectral(6)
    assert report["max_rho"] == pytest.approx(cs.theta(6), abs=1e-9)
    assert len(report["argmax"]) == 1
    verdict = cs.verify_theorem_chorded(6)
    assert verdict["pass"] is True
    verdict = cs.check_k_chorded_extremal(2, 9)
    assert verdict["pass"] is True
    lemma = cs.verify_lemma("prop_doubly_chorded", 5)
    assert lemma["pass"] is True
    assert lemma["expected"]["edge_bound"] == 7


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        cs.family("star")
    with pytest.raises(ValueError):
        cs.graph6_decode("C")
    with pytest.raises(ValueError):
        cs.theta(9)
