from fractions import Fraction
from itertools import combinations

import pytest

import cliquecover as cc


def complete(n):
    return cc.gen_complete_multipartite([1] * n)


def test_graph_and_cliques():
    g = complete(5)
    assert g.edge_count == 10
    tri = cc.enumerate_r_cliques(g, 3)
    assert len(tri) == 10
    assert cc.count_r_cliques(g, 3) == 10
    h = cc.gen_gnp(12, "1/2", 7)
    brute = [t for t in combinations(range(12), 3) if all(h.adjacent(a, b) for a, b in combinations(t, 2))]
    assert [tuple(t) for t in cc.enumerate_r_cliques(h, 3).tuples()] == brute
    assert cc.parse_edge_list(cc.emit_edge_list(h)) == h


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        cc.Graph(2, [(0, 0)])
    with pytest.raises(cc.PreconditionError):
        cc.chain_inequality_report(cc.Graph(6, [(i, (i + 1) % 6) for i in range(6)]), 3)


def test_reports_use_fractions():
    rep = cc.supersaturation_report(complete(10), 2)
    assert rep["c"] == Fraction(2, 5)
    assert rep["bound"] == 100
    assert rep["k_next"] == 120
    chain = cc.chain_inequality_report(complete(4), 2)
    assert chain["lhs"] == chain["rhs"] == -1
    p = cc.theorem_params(70, 2, Fraction(69, 140))
    assert (p["s"], p["t_min"], p["parameters_feasible"]) == (1, 9, True)


def test_prune_and_bipartite():
    k4 = cc.enumerate_r_cliques(complete(4), 3)
    res = cc.prune(k4, 4, 1)
    assert res.kept == k4 and res.rounds == []
    assert cc.prune_guarantee_check(k4, res, Fraction(1, 4), 4, 3)["all_ok"]
    f = cc.BipartiteInstance(2, 3)
    for i in range(2):
        for v in range(3):
            f.add_edge(i, v)
    assert cc.biclique_oracle(f, 2) == ([0, 1], 3)
    assert cc.find_s_subset(f, 2, 3, "maximize") == ([0, 1], [0, 1, 2])
    dc = cc.double_count_check(f, 2)
    assert dc["lhs_sum"] == dc["rhs_sum"] == 3 and dc["convexity_ok"]
    assert cc.generalized_binomial(Fraction(5, 2), 2) == Fraction(15, 8)


def test_extract_and_verify():
    g = complete(70)
    m = cc.enumerate_r_cliques(g, 2)
    cert = cc.extract(g, m, 2, Fraction(69, 140))
    assert isinstance(cert, cc.CoverCertificate)
    assert cert.s == 1 and cert.t >= 9
    assert cc.verify_cover(g, m, cert)["all_ok"]
    back = cc.parse_certificate(cert.to_text())
    assert cc.verify_cover(g, m, back)["all_ok"]

    k = cc.gen_complete_multipartite([2, 2, 12])
    tri = cc.enumerate_r_cliques(k, 3)
    best = cc.extract_with_target(k, tri, 3, 2, 12)
    assert [len(p) for p in best.parts] == [2, 2] and best.t >= 12
    assert cc.verify_cover(k, tri, best)["all_ok"]

    fail = cc.extract(k, tri, 3, Fraction(1, 10))
    assert isinstance(fail, cc.ExtractionFailure)
    assert fail.kind == "infeasible" and fail.stage == "params"
