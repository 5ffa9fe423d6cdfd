import math
import random
from itertools import combinations

import pytest

from laglab.degsq import (AK_COUNTEREXAMPLE, P2Report, p2, p2_max_bounded,
                          p2_max_search, p2_max_unbounded, p2_pair_identity,
                          p2_star_value, star_graph, structure_tag,
                          verify_ak_counterexample)
from laglab.hypergraph import (are_isomorphic, clique, from_edges,
                               lex_segment)


def test_p2_examples():
    assert p2(AK_COUNTEREXAMPLE) == 211
    assert p2(clique(4, 3)) == 4 * 9
    assert p2(from_edges(3, 5, [])) == 0
    assert p2(star_graph(3, 5)) == p2_star_value(3, 5)


def test_pair_identity_random():
    rng = random.Random(17)
    for _ in range(200):
        r = rng.choice([2, 3, 4])
        t = rng.randint(r, 8)
        universe = list(combinations(range(1, t + 1), r))
        m = rng.randint(0, len(universe))
        G = from_edges(r, t, rng.sample(universe, m))
        assert p2_pair_identity(G) == p2(G)


def test_star_value_formula():
    for r in range(2, 6):
        for m in range(0, 31):
            assert p2_star_value(r, m) == (r - 1) * m * m + m
            if m >= 1:
                assert p2(star_graph(r, m)) == p2_star_value(r, m)


def test_clique_subgraph_tie():
    # m-edge subgraphs of the clique on r+1 vertices tie the star for m <= r+1
    for r in (2, 3, 4):
        for m in range(1, r + 2):
            assert (m * (m - 1) ** 2 + (r + 1 - m) * m * m
                    == p2_star_value(r, m))
            edges = list(combinations(range(1, r + 2), r))[:m]
            G = from_edges(r, r + 1, edges)
            assert p2(G) == p2_star_value(r, m)


def test_structure_tag():
    assert structure_tag(star_graph(3, 4)) == "star"
    assert structure_tag(clique(4, 3)) == "clique_subgraph"
    assert structure_tag(AK_COUNTEREXAMPLE) == "other"
    assert structure_tag(from_edges(3, 4, [])) == "other"
    # a single edge is both; the star tag wins
    assert structure_tag(from_edges(3, 3, [(1, 2, 3)])) == "star"


def test_p2_max_unbounded_structures():
    rep = p2_max_unbounded(3, 3)
    assert rep.value == p2_star_value(3, 3)
    assert rep.structures == ("star", "clique_subgraph")
    rep = p2_max_unbounded(3, 10)
    assert rep.value == 210 and rep.structures == ("star",)
    with pytest.raises(ValueError):
        p2_max_unbounded(3, 0)


def test_p2_max_unbounded_matches_search():
    # the search on t = m + r - 1 vertices is unrestricted in effect
    for r in (2, 3):
        for m in range(1, 7):
            t = m + r - 1 if m + r - 1 >= r else r
            rep = p2_max_search(r, m, max(t, r))
            assert rep.value == p2_star_value(r, m)


def test_p2_max_bounded_values():
    assert p2_max_bounded(2, 3, 3).value == 12
    assert p2_max_bounded(3, math.comb(5, 3), 5).value == 180
    assert p2_max_bounded(3, 11, 7).value == 211
    with pytest.raises(ValueError):
        p2_max_bounded(3, 11, 5)


def test_p2_max_bounded_maximizer_is_counterexample():
    rep = p2_max_bounded(3, 11, 7)
    assert any(are_isomorphic(M, AK_COUNTEREXAMPLE) for M in rep.maximizers)


def test_left_compressed_restriction_is_exact():
    # brute-force over ALL m-subsets confirms the left-compressed scan
    for r, t, m_max in ((2, 4, 4), (3, 5, 4)):
        universe = list(combinations(range(1, t + 1), r))
        for m in range(1, m_max + 1):
            brute = max(p2(from_edges(r, t, edges))
                        for edges in combinations(universe, m))
            assert p2_max_bounded(r, m, t).value == brute


def test_report_to_dict():
    d = p2_max_unbounded(3, 2).to_dict()
    assert d["value"] == p2_star_value(3, 2)
    assert set(d) == {"value", "degree_sequence", "structures", "maximizers"}


def test_verify_ak():
    res = verify_ak_counterexample()
    assert res["counterexample"] == 211
    assert res["family_max"] == 209
    assert res["family_argmax"]["t"] == 7
    assert res["per_t_max"] == {6: 207, 7: 209}
    assert res["counterexample_degrees"] == [11, 5, 4, 4, 4, 4, 1]
    assert sum(d * d for d in res["counterexample_degrees"]) == 211


def test_verify_ak_larger_t_fails():
    # at t = 8 the 11-edge lex graph reaches 213 > 211; the per-t comparison
    # is only meaningful at the counterexample's own scale
    assert p2(lex_segment(11, 8, 3)) == 213
    assert p2(lex_segment(11, 12, 3)) == 237
    with pytest.raises(AssertionError):
        verify_ak_counterexample(range(6, 13))
