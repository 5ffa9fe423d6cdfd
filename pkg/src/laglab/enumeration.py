"""Streaming enumeration of candidate families.

Left-compressed m-edge families on [t] are exactly the size-m down-sets of
the coordinatewise-domination order on sorted r-tuples.  Since domination
implies smaller colex rank, every down-set listed in increasing colex rank
has down-closed prefixes; the DFS below therefore adds elements in strictly
increasing rank and is duplicate-free by construction.
"""
from __future__ import annotations

import math
from itertools import combinations

from .hypergraph import RGraph, canonical_form, colex_rank, colex_unrank


def _covers(e: tuple) -> list[tuple]:
    """Immediate predecessors in the domination order."""
    out = []
    r = len(e)
    for i in range(r):
        lo = e[i - 1] if i > 0 else 0
        if e[i] - 1 > lo:
            out.append(e[:i] + (e[i] - 1,) + e[i + 1:])
    return out


def enumerate_left_compressed(r: int, m: int, t: int):
    """Yield every left-compressed m-edge family on [t], each exactly once."""
    total = math.comb(t, r)
    if m > total:
        raise ValueError(f"m = {m} exceeds C({t},{r}) = {total}")
    if m == 0:
        yield RGraph(r, t, frozenset())
        return
    universe = [colex_unrank(k, r) for k in range(total)]
    cover_ranks = [[colex_rank(c) for c in _covers(e)] for e in universe]

    chosen: list[int] = []
    in_set = [False] * total

    def addable(k: int) -> bool:
        return all(in_set[c] for c in cover_ranks[k])

    def rec(next_rank: int):
        if len(chosen) == m:
            yield RGraph(r, t, frozenset(universe[k] for k in chosen))
            return
        # not enough elements left to finish
        if total - next_rank < m - len(chosen):
            return
        for k in range(next_rank, total):
            if addable(k):
                chosen.append(k)
                in_set[k] = True
                yield from rec(k + 1)
                in_set[k] = False
                chosen.pop()

    yield from rec(0)


def enumerate_all_up_to_iso(r: int, m: int, t: int, cap: int = 2_000_000):
    """One representative per isomorphism class of m-edge families on [t].

    Oracle mode for validating the left-compressed restriction; brute
    force over all C(C(t,r), m) subsets, so sizes are capped.
    """
    total = math.comb(t, r)
    if m > total:
        raise ValueError(f"m = {m} exceeds C({t},{r}) = {total}")
    if t > 10:
        raise ValueError("isomorphism dedup is capped at t <= 10")
    n_subsets = math.comb(total, m)
    if n_subsets > cap:
        raise ValueError(f"C({total},{m}) = {n_subsets} exceeds cap {cap}")
    universe = list(combinations(range(1, t + 1), r))
    seen = set()
    for edges in combinations(universe, m):
        G = RGraph(r, t, frozenset(edges))
        key = tuple(sorted(colex_rank(e) for e in canonical_form(G).edges))
        if key not in seen:
            seen.add(key)
            yield G
