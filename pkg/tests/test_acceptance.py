"""Acceptance gate: ten checks, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
are produced.
"""
import math
import random
import time
from itertools import combinations

import numpy as np
import pytest

from laglab import kernels, report
from laglab.degsq import (p2, p2_max_search, p2_pair_identity, p2_star_value,
                          star_graph, verify_ak_counterexample)
from laglab.enumeration import enumerate_left_compressed
from laglab.asymptotics import (check_nikiforov, eval_lag_expansion,
                                expansion_input_for)
from laglab.hypergraph import (RGraph, canonical_form, clique, colex_rank,
                               colex_segment, complement, from_edges,
                               is_left_compressed, lex_segment)
from laglab.search import ff_verify
from laglab.solver import (SolverConfig, maximize_lagrangian,
                           motzkin_straus_exact)

FULL = SolverConfig(starts=32, max_iters=50_000, tol=1e-10, seed=0)


def _line(num: int, ok: bool, text: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {text}")
    assert ok, f"criterion {num}: {text}"


# --------------------------------------------------------------------------
# shared desk-scale verification runs (criteria 5, 6, 10)
# --------------------------------------------------------------------------

@pytest.fixture(scope="module")
def ff_reports_r3():
    return [ff_verify(3, m, 6, config=FULL, threads=1) for m in range(1, 21)]


def test_criterion_1_clique_formula():
    t0 = time.time()
    worst = 0.0
    for r in (2, 3, 4):
        for t in range(r, 11):
            cert = maximize_lagrangian(clique(t, r), FULL)
            worst = max(worst, abs(cert.value - math.comb(t, r) / t ** r))
    elapsed = time.time() - t0
    _line(1, worst <= 1e-9 and elapsed < 10,
          f"clique values within {worst:.2e} of C(t,r)/t^r "
          f"(r in 2..4, t in r..10) in {elapsed:.1f}s")


def test_criterion_2_ak_counterexample():
    t0 = time.time()
    res = verify_ak_counterexample()          # per-scale range t in 6..7
    ok = res["counterexample"] == 211 and res["family_max"] == 209
    # the wider configured default (t up to 12) is not paper ground truth
    # and is arithmetically unattainable: the 11-edge lex graph alone gives
    # 213 at t=8 and 237 at t=12, so the scan is pinned to the
    # counterexample's own vertex count
    ok = ok and p2(lex_segment(11, 8, 3)) == 213
    ok = ok and p2(lex_segment(11, 12, 3)) == 237
    elapsed = time.time() - t0
    _line(2, ok and elapsed < 30,
          f"p2(H) = {res['counterexample']}, lex/co-lex max (t in 6..7) = "
          f"{res['family_max']}; wider-t scan excluded (213 at t=8, 237 at "
          f"t=12) in {elapsed:.1f}s")


def test_criterion_3_star_formula_and_pair_identity():
    ok = True
    for r in range(2, 6):
        for m in range(1, 31):
            ok = ok and p2(star_graph(r, m)) == (r - 1) * m * m + m
    rng = random.Random(2024)
    for _ in range(200):
        r = rng.choice([2, 3, 4])
        t = rng.randint(r, 8)
        universe = list(combinations(range(1, t + 1), r))
        G = from_edges(r, t, rng.sample(universe, rng.randint(0, len(universe))))
        ok = ok and p2_pair_identity(G) == p2(G)
    _line(3, ok, "star value (r-1)m^2+m exact for r<=5, m<=30; "
                 "pair-intersection identity exact on 200 random graphs")


def test_criterion_4_p2_structure():
    t0 = time.time()
    ok = True
    detail = []
    for m in range(1, 7):
        rep = p2_max_search(3, m, m + 2)     # t = m+r-1 is unrestricted
        ok = ok and rep.value == p2_star_value(3, m)
        ok = ok and set(rep.structures) <= {"star", "clique_subgraph"}
        detail.append(f"m={m}:{'/'.join(rep.structures)}")
    elapsed = time.time() - t0
    _line(4, ok and elapsed < 120,
          f"every P2 maximizer (r=3, m<=6) is a star or clique-subgraph, "
          f"value (r-1)m^2+m [{'; '.join(detail)}] in {elapsed:.1f}s")


def test_criterion_5_colex_best_at_desk_scale(ff_reports_r3):
    t0 = time.time()
    ok = all(r.colex_is_max and r.all_converged for r in ff_reports_r3)
    worst2 = 0.0
    for m in range(1, 11):
        rep = ff_verify(2, m, 5, config=FULL, threads=1)
        exact = motzkin_straus_exact(colex_segment(m, 2).with_t(5))
        worst2 = max(worst2, abs(rep.best_value - exact))
        ok = ok and rep.colex_is_max
    ok = ok and worst2 <= 1e-7
    elapsed = time.time() - t0
    _line(5, ok and elapsed < 600,
          f"colex maximizes lambda over left-compressed families "
          f"(r=3, t=6, m=1..20); r=2 search within {worst2:.2e} of "
          f"Motzkin-Straus in {elapsed:.1f}s")


def test_criterion_6_nikiforov_bound(ff_reports_r3):
    t0 = time.time()
    ok = True
    equalities = []
    for m, rep in enumerate(ff_reports_r3, start=1):
        v = check_nikiforov(rep.colex_value, m, 3)
        ok = ok and v["holds"]
        if v["equality"]:
            equalities.append(m)
    ok = ok and equalities == [1, 4, 10, 20]
    elapsed = time.time() - t0
    _line(6, ok and elapsed < 60,
          f"lambda <= m x^-3 + 1e-8 for m=1..20; equality exactly at "
          f"{equalities} in {elapsed:.1f}s")


def test_criterion_7_expansion():
    t0 = time.time()
    cfg = SolverConfig(starts=0, max_iters=20_000, tol=1e-12)
    ok = True
    worst_ratio = 0.0
    for t in (20, 30, 40):
        for a in (1, 2, 3, 4):
            G = colex_segment(math.comb(t, 3) - a, 3).with_t(t)
            cert = maximize_lagrangian(G, cfg)
            value, scale = eval_lag_expansion(expansion_input_for(G))
            ratio = abs(cert.value - value) / scale
            worst_ratio = max(worst_ratio, ratio)
            ok = ok and ratio <= 50.0
    elapsed = time.time() - t0
    _line(7, ok and elapsed < 300,
          f"four-term expansion error <= 50 a^3 t^-5 for t in {{20,30,40}}, "
          f"a in 1..4 (worst ratio {worst_ratio:.2f}) in {elapsed:.1f}s")


def test_criterion_8_solver_properties():
    rng = random.Random(0)
    mono_ok = True
    for trial in range(100):
        r = rng.choice([2, 3])
        t = rng.randint(r + 1, 7)
        universe = list(combinations(range(1, t + 1), r))
        G = from_edges(r, t, rng.sample(universe,
                                        rng.randint(1, len(universe))))
        arr = np.random.default_rng(trial).exponential(size=t)
        arr /= arr.sum()
        edges = G.edge_array()
        prev, _ = kernels.poly_and_grad(edges, arr)
        for _ in range(30):
            kernels.ascend_inplace(edges, arr, r, 1, 0.0)
            cur, _ = kernels.poly_and_grad(edges, arr)
            mono_ok = mono_ok and cur >= prev - 1e-14
            prev = cur

    kkt_ok = True
    for m in range(1, 16):
        cert = maximize_lagrangian(colex_segment(m, 3), FULL)
        kkt_ok = kkt_ok and cert.converged and cert.kkt_max_residual <= 1e-8

    grad_ok = True
    for seed in range(5):
        g = np.random.default_rng(seed)
        universe = list(combinations(range(1, 7), 3))
        idx = g.choice(len(universe), size=10, replace=False)
        G = from_edges(3, 6, [universe[i] for i in idx])
        w = g.exponential(size=6)
        w /= w.sum()
        _, grad = kernels.poly_and_grad(G.edge_array(), w)
        h = 1e-6
        for x in range(6):
            wp, wm = w.copy(), w.copy()
            wp[x] += h
            wm[x] -= h
            fd = (kernels.poly_and_grad(G.edge_array(), wp)[0]
                  - kernels.poly_and_grad(G.edge_array(), wm)[0]) / (2 * h)
            denom = max(abs(fd), 1e-9)
            grad_ok = grad_ok and abs(grad[x] - fd) / denom <= 1e-6

    _line(8, mono_ok and kkt_ok and grad_ok,
          f"ascent monotone on 100 random starts ({mono_ok}), KKT residuals "
          f"<= 1e-8 at converged certificates ({kkt_ok}), gradient matches "
          f"finite differences to 1e-6 ({grad_ok})")


def test_criterion_9_enumeration_oracle():
    ok = True
    for t in (3, 4, 5, 6):
        for m in range(0, 7):
            if m > math.comb(t, 3):
                continue
            fast = {tuple(sorted(colex_rank(e)
                                 for e in canonical_form(G).edges))
                    for G in enumerate_left_compressed(3, m, t)}
            universe = list(combinations(range(1, t + 1), 3))
            brute = set()
            for edges in combinations(universe, m):
                G = RGraph(3, t, frozenset(edges))
                if is_left_compressed(G):
                    brute.add(tuple(sorted(colex_rank(e)
                                           for e in canonical_form(G).edges)))
            ok = ok and fast == brute
    _line(9, ok, "left-compressed enumeration equals brute-force filter "
                 "(canonical forms, r=3, m<=6, t<=6)")


def test_criterion_10_determinism(ff_reports_r3):
    blob1 = report.dumps({"results": [r.to_dict() for r in ff_reports_r3]})
    reports_n = [ff_verify(3, m, 6, config=FULL, threads=4)
                 for m in range(1, 21)]
    blob_n = report.dumps({"results": [r.to_dict() for r in reports_n]})
    ok = blob1.encode() == blob_n.encode()
    _line(10, ok, "desk-scale verification JSON is byte-identical with "
                  "1 and 4 worker threads")
