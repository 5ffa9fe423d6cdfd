"""Sum-of-degrees-squared machinery.

P2 of an r-graph, the closed-form unrestricted maximum (r-1)m^2 + m, the
bounded-vertex exhaustive maximum, and the exact check of the
Ahlswede-Katona counterexample on 7 vertices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .enumeration import enumerate_left_compressed
from .hypergraph import (RGraph, canonical_form, colex_rank, complement,
                         from_edges, lex_segment)

# 11-edge 3-graph on [7] with sum of degrees squared 211, beating every
# lex graph and complement-of-lex with 11 edges (which top out at 209).
AK_COUNTEREXAMPLE = from_edges(3, 7, [
    (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 2, 7),
    (1, 3, 4), (1, 3, 5), (1, 3, 6),
    (1, 4, 5), (1, 4, 6),
    (1, 5, 6),
])


def p2(G: RGraph) -> int:
    return sum(d * d for d in G.degrees())


def p2_pair_identity(G: RGraph) -> int:
    """Sum over ordered edge pairs of |e /\\ f|; equals p2(G)."""
    edges = [set(e) for e in G.edges]
    return sum(len(e & f) for e in edges for f in edges)


def p2_star_value(r: int, m: int) -> int:
    """P2 of m edges through a common (r-1)-set: (r-1) m^2 + m."""
    if r < 2 or m < 0:
        raise ValueError("need r >= 2, m >= 0")
    return (r - 1) * m * m + m


def star_graph(r: int, m: int) -> RGraph:
    """m edges all containing {1, ..., r-1}."""
    core = tuple(range(1, r))
    edges = [core + (r - 1 + i,) for i in range(1, m + 1)]
    t = max(r, m + r - 1)
    return from_edges(r, t, edges)


def structure_tag(G: RGraph) -> str:
    """One of star / clique_subgraph / other."""
    if G.m == 0:
        return "other"
    common = set.intersection(*(set(e) for e in G.edges))
    if len(common) >= G.r - 1:
        return "star"
    support = set().union(*(set(e) for e in G.edges))
    if len(support) <= G.r + 1:
        return "clique_subgraph"
    return "other"


@dataclass(frozen=True)
class P2Report:
    value: int
    degree_sequence: tuple
    structures: tuple           # structure tags present among maximizers
    maximizers: tuple = ()      # maximizer families up to isomorphism

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "degree_sequence": list(self.degree_sequence),
            "structures": list(self.structures),
            "maximizers": [sorted(M.edge_list()) for M in self.maximizers],
        }


def p2_max_unbounded(r: int, m: int) -> P2Report:
    """P2(r, m) and the maximizer shapes.

    The value is (r-1)m^2 + m, attained by a star through r-1 vertices;
    for m <= r+1 the m-edge subgraphs of the clique on r+1 vertices tie,
    since m(m-1)^2 + (r+1-m)m^2 = (r-1)m^2 + m.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    value = p2_star_value(r, m)
    star = star_graph(r, m)
    if m <= r + 1:
        structures = ("star", "clique_subgraph")
    else:
        structures = ("star",)
    return P2Report(value, tuple(sorted(star.degrees(), reverse=True)),
                    structures, (star,))


def p2_max_search(r: int, m: int, t: int, node_cap: int = 5_000_000) -> P2Report:
    """Exact max of P2 over m-edge families on [t] by exhaustive search.

    Only left-compressed families are scanned: moving edges toward the
    higher-degree vertex of a pair changes P2 by 2k(d(x)-d(y)) + 2k^2 > 0
    whenever k > 0 edges move, so every maximizer is left-compressed after
    relabeling vertices in decreasing degree order.
    """
    best = -1
    best_families: list[RGraph] = []
    visited = 0
    for G in enumerate_left_compressed(r, m, t):
        visited += 1
        if visited > node_cap:
            raise ValueError(f"search exceeded node cap {node_cap}")
        v = p2(G)
        if v > best:
            best = v
            best_families = [G]
        elif v == best:
            best_families.append(G)
    # dedupe maximizers up to isomorphism where the canonical form is usable
    if t <= 10:
        seen = {}
        for G in best_families:
            key = tuple(sorted(colex_rank(e) for e in canonical_form(G).edges))
            seen.setdefault(key, G)
        best_families = list(seen.values())
    rep = best_families[0]
    structures = tuple(sorted({structure_tag(G) for G in best_families}))
    return P2Report(best, tuple(sorted(rep.degrees(), reverse=True)),
                    structures, tuple(best_families))


def p2_max_bounded(r: int, m: int, t: int, node_cap: int = 5_000_000) -> P2Report:
    """P2(r, m, t): exact maximum over m-edge subfamilies of [t]^(r)."""
    if m > math.comb(t, r):
        raise ValueError(f"m = {m} exceeds C({t},{r})")
    return p2_max_search(r, m, t, node_cap=node_cap)


def verify_ak_counterexample(t_range=range(6, 8)) -> dict:
    """Check the 211-vs-209 computation behind the counterexample.

    Builds the 11-edge graph H, asserts P2(H) = 211, scans the lex
    3-graph and the complement-of-lex with 11 edges for each t in t_range
    and asserts their maximum is 209 < 211.  Any failure raises
    AssertionError (it would falsify the published computation).

    The default range stops at t = 7, the counterexample's own vertex
    count: the sum-of-degrees-squared comparison is per ambient t, and for
    t >= 8 the lex graph with 11 edges climbs toward the unrestricted star
    value and exceeds 211 (213 at t = 8, 237 at t = 12).
    """
    H = AK_COUNTEREXAMPLE
    value = p2(H)
    assert value == 211, f"P2(H) = {value}, expected 211"
    m = 11
    family_max = -1
    argmax = None
    per_t = {}
    for t in t_range:
        total = math.comb(t, 3)
        if total < m:
            continue
        candidates = {"lex": lex_segment(m, t, 3),
                      "co_lex": complement(lex_segment(total - m, t, 3))}
        t_best = -1
        for name, G in candidates.items():
            v = p2(G)
            t_best = max(t_best, v)
            if v > family_max:
                family_max = v
                argmax = (t, name)
        per_t[t] = t_best
    assert family_max == 209, f"lex/co-lex max is {family_max}, expected 209"
    assert value > family_max
    return {
        "counterexample": value,
        "counterexample_degrees": sorted(H.degrees(), reverse=True),
        "family_max": family_max,
        "family_argmax": {"t": argmax[0], "kind": argmax[1]},
        "per_t_max": per_t,
    }
