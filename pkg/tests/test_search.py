import math
from itertools import combinations

import pytest

from laglab.enumeration import enumerate_all_up_to_iso, enumerate_left_compressed
from laglab.hypergraph import (RGraph, clique, colex_segment, from_edges,
                               is_left_compressed)
from laglab.search import (SearchReport, candidate_stream, ff_verify,
                           p2_link_check, resolve_threads,
                           structure_check_nonedges)
from laglab.solver import SolverConfig

QUICK = SolverConfig(starts=8, max_iters=20_000, tol=1e-10)


def brute_left_compressed(r, m, t):
    universe = list(combinations(range(1, t + 1), r))
    out = []
    for edges in combinations(universe, m):
        G = RGraph(r, t, frozenset(edges))
        if is_left_compressed(G):
            out.append(frozenset(edges))
    return out


def test_enumerate_left_compressed_matches_brute_force():
    for r, t, ms in ((2, 4, range(0, 7)), (3, 5, range(0, 6)), (3, 6, (8,))):
        for m in ms:
            listed = [G.edges for G in enumerate_left_compressed(r, m, t)]
            assert len(listed) == len(set(listed))  # duplicate-free
            assert sorted(map(sorted, listed)) == sorted(
                map(sorted, brute_left_compressed(r, m, t)))


def test_enumerate_left_compressed_errors():
    with pytest.raises(ValueError):
        list(enumerate_left_compressed(3, 11, 5))


def test_colex_is_left_compressed_and_listed():
    for m in range(1, 11):
        G = colex_segment(m, 3).with_t(6)
        listed = {H.edges for H in enumerate_left_compressed(3, m, 6)}
        assert G.edges in listed


def test_enumerate_all_up_to_iso_counts():
    # 2 classes of 2-edge graphs (sharing a vertex or disjoint)
    assert sum(1 for _ in enumerate_all_up_to_iso(2, 2, 4)) == 2
    # 3 classes of 2-edge 3-graphs on [6]: overlap in 0, 1, or 2 vertices
    assert sum(1 for _ in enumerate_all_up_to_iso(3, 2, 6)) == 3
    # single-edge graphs are all isomorphic
    assert sum(1 for _ in enumerate_all_up_to_iso(3, 1, 6)) == 1
    with pytest.raises(ValueError):
        list(enumerate_all_up_to_iso(3, 10, 11))


def test_candidate_stream_modes():
    lc = list(candidate_stream(3, 3, 5, "left_compressed"))
    iso = list(candidate_stream(3, 3, 5, "all_iso"))
    assert lc and iso
    with pytest.raises(ValueError):
        candidate_stream(3, 3, 5, "nope")


def test_resolve_threads(monkeypatch):
    assert resolve_threads(4) == 4
    monkeypatch.setenv("LAGLAB_THREADS", "3")
    assert resolve_threads(0) == 3
    monkeypatch.delenv("LAGLAB_THREADS")
    assert resolve_threads(0) >= 1
    with pytest.raises(ValueError):
        resolve_threads(-1)


def test_ff_verify_small():
    for m in (1, 3, 5):
        rep = ff_verify(3, m, 6, config=QUICK, threads=1)
        assert rep.colex_is_max
        assert rep.all_converged
        assert rep.margin >= -rep.tol
        assert any(G.edges == colex_segment(m, 3).with_t(6).edges
                   for G in rep.best_families)


def test_ff_verify_modes_agree():
    for m in (2, 4):
        a = ff_verify(3, m, 5, mode="left_compressed", config=QUICK, threads=1)
        b = ff_verify(3, m, 5, mode="all_iso", config=QUICK, threads=1)
        assert a.best_value == pytest.approx(b.best_value, abs=1e-7)
        assert a.colex_is_max and b.colex_is_max


def test_ff_verify_threads_deterministic():
    one = ff_verify(3, 6, 6, config=QUICK, threads=1)
    four = ff_verify(3, 6, 6, config=QUICK, threads=4)
    assert one.to_dict() == four.to_dict()


def test_search_report_to_dict():
    rep = ff_verify(3, 2, 5, config=QUICK, threads=1)
    d = rep.to_dict()
    assert d["colex_is_max"] is True
    assert len(d["candidates"]) == len(rep.candidates)
    assert "candidates" not in rep.to_dict(include_candidates=False)


def test_structure_check_nonedges():
    t = 7
    # drop edges containing {6, 7}: every non-edge contains I with i = 2
    G = colex_segment(math.comb(t, 3) - 3, 3).with_t(t)
    assert structure_check_nonedges(G, 2)
    assert structure_check_nonedges(clique(6, 3), 1)
    H = from_edges(3, 5, [(1, 2, 3)])
    assert not structure_check_nonedges(H, 1)


def test_p2_link_check():
    t = 7
    for a in (0, 1, 2, 3):
        G = colex_segment(math.comb(t, 3) - a, 3).with_t(t)
        out = p2_link_check(G)
        assert out["a"] == a
        assert out["exact_regime"] and out["exact_equal"]
        assert out["ratio"] == 1.0 if a == 0 else out["ratio"] <= 1.0
