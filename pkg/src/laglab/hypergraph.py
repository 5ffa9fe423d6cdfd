"""r-uniform hypergraphs on [t]: colex/lex segments, compressions, links, canonical forms.

Vertices are 1-based integers.  Edges are strictly increasing r-tuples.  For
t <= 64 every edge also has a 64-bit mask representation so that set
operations are O(1); all ranking goes through the combinatorial number
system (greedy binomials), never through 2^i sums, to avoid overflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

Edge = tuple[int, ...]

ISO_T_CAP = 10  # brute-force canonical labeling is capped at this many vertices


def _validate_edge(e: Edge, r: int, t: int) -> None:
    if len(e) != r:
        raise ValueError(f"edge {e} does not have {r} vertices")
    if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
        raise ValueError(f"edge {e} is not strictly increasing")
    if e[0] < 1 or e[-1] > t:
        raise ValueError(f"edge {e} is not contained in [1..{t}]")


@dataclass(frozen=True)
class RGraph:
    """An r-uniform hypergraph with vertex set {1..t}."""

    r: int
    t: int
    edges: frozenset

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("uniformity r must be >= 2")
        if self.t < self.r:
            raise ValueError("need t >= r")
        for e in self.edges:
            _validate_edge(e, self.r, self.t)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[Edge]:
        """Edges sorted by colex rank (deterministic iteration order)."""
        return sorted(self.edges, key=colex_rank)

    def edge_array(self) -> np.ndarray:
        """(m, r) int64 array of 0-based vertex indices, colex-sorted rows."""
        if self.m == 0:
            return np.empty((0, self.r), dtype=np.int64)
        return np.array(self.edge_list(), dtype=np.int64) - 1

    def edge_masks(self) -> list[int]:
        if self.t > 64:
            raise ValueError("bitmask encoding requires t <= 64")
        return [edge_mask(e) for e in self.edge_list()]

    def degree(self, x: int) -> int:
        return sum(1 for e in self.edges if x in e)

    def degrees(self) -> list[int]:
        return [self.degree(x) for x in range(1, self.t + 1)]

    def nonedge_degree(self, x: int) -> int:
        """e(x): number of edges of the complement within [t]^(r) containing x."""
        return math.comb(self.t - 1, self.r - 1) - self.degree(x)

    def with_t(self, t: int) -> "RGraph":
        """Same edge set viewed inside a larger ambient vertex set."""
        if t < self.t:
            for e in self.edges:
                _validate_edge(e, self.r, t)
        return RGraph(self.r, t, self.edges)


def edge_mask(e: Edge) -> int:
    m = 0
    for v in e:
        m |= 1 << (v - 1)
    return m


def from_edges(r: int, t: int, edges) -> RGraph:
    return RGraph(r, t, frozenset(tuple(sorted(e)) for e in edges))


# ---------------------------------------------------------------------------
# colex / lex orders (combinatorial number system)
# ---------------------------------------------------------------------------

def colex_rank(e: Edge) -> int:
    """Colex rank of a sorted tuple of 1-based vertices, 0-based rank."""
    return sum(math.comb(v - 1, i + 1) for i, v in enumerate(e))


def colex_unrank(rank: int, r: int) -> Edge:
    """Inverse of colex_rank: the r-set of 1-based vertices with this rank."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    out = [0] * r
    for k in range(r, 0, -1):
        # largest c with C(c, k) <= rank
        c = k - 1
        while math.comb(c + 1, k) <= rank:
            c += 1
        rank -= math.comb(c, k)
        out[k - 1] = c + 1
    return tuple(out)


def colex_key_pow2(e: Edge) -> int:
    """Test oracle only: the paper-order key sum of 2^i (keep t <= 60)."""
    return sum(2 ** v for v in e)


def colex_segment(m: int, r: int) -> RGraph:
    """The m colex-smallest r-subsets of N; t is the largest vertex used."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if r < 2:
        raise ValueError("r must be >= 2")
    edges = [colex_unrank(k, r) for k in range(m)]
    t = max((e[-1] for e in edges), default=r)
    t = max(t, r)
    return RGraph(r, t, frozenset(edges))


def lex_segment(m: int, t: int, r: int) -> RGraph:
    """The m lex-smallest r-subsets of [t] (min of symmetric difference rule).

    For equal-size sets the min-symmetric-difference order coincides with
    comparing sorted tuples lexicographically, which is the order
    itertools.combinations yields.
    """
    total = math.comb(t, r)
    if not 0 <= m <= total:
        raise ValueError(f"need 0 <= m <= C({t},{r}) = {total}")
    edges = []
    for i, e in enumerate(combinations(range(1, t + 1), r)):
        if i >= m:
            break
        edges.append(e)
    return RGraph(r, t, frozenset(edges))


def clique(t: int, r: int) -> RGraph:
    if t < r:
        raise ValueError("need t >= r")
    return RGraph(r, t, frozenset(combinations(range(1, t + 1), r)))


def complement(G: RGraph) -> RGraph:
    full = set(combinations(range(1, G.t + 1), G.r))
    return RGraph(G.r, G.t, frozenset(full - G.edges))


# ---------------------------------------------------------------------------
# compressions
# ---------------------------------------------------------------------------

def compress_edge(e: Edge, x: int, y: int) -> Edge:
    """(F \\ y) u x when x is absent and y present; otherwise F unchanged."""
    if x >= y:
        raise ValueError("need x < y")
    if x in e or y not in e:
        return e
    return tuple(sorted([v for v in e if v != y] + [x]))


def compress_family(G: RGraph, x: int, y: int) -> RGraph:
    if x >= y:
        raise ValueError("need x < y")
    out = set()
    for e in G.edges:
        ce = compress_edge(e, x, y)
        if ce == e or ce in G.edges:
            out.add(e)
        else:
            out.add(ce)
    return RGraph(G.r, G.t, frozenset(out))


def is_left_compressed(G: RGraph) -> bool:
    for y in range(2, G.t + 1):
        for x in range(1, y):
            if compress_family(G, x, y).edges != G.edges:
                return False
    return True


def left_compress_fixpoint(G: RGraph) -> RGraph:
    """Sweep pairs (increasing y, then x) until a clean pass.

    Terminates: each effective compression strictly decreases the total
    colex rank of the family.
    """
    cur = G
    changed = True
    while changed:
        changed = False
        for y in range(2, cur.t + 1):
            for x in range(1, y):
                nxt = compress_family(cur, x, y)
                if nxt.edges != cur.edges:
                    cur = nxt
                    changed = True
    return cur


# ---------------------------------------------------------------------------
# links and twins
# ---------------------------------------------------------------------------

def link(G: RGraph, S) -> frozenset:
    """N_G(S): completions of S into edges of G, as (r-|S|)-tuples."""
    S = frozenset(S)
    if len(S) >= G.r:
        raise ValueError("need |S| < r")
    out = set()
    for e in G.edges:
        if S <= set(e):
            out.add(tuple(v for v in e if v not in S))
    return frozenset(out)


def link_excluding(G: RGraph, x: int, y: int) -> frozenset:
    """N_y(x): members of N(x) avoiding y."""
    return frozenset(f for f in link(G, {x}) if y not in f)


def are_twins(G: RGraph, x: int, y: int) -> bool:
    if x == y:
        raise ValueError("twins require x != y")
    return link_excluding(G, x, y) == link_excluding(G, y, x)


def degree(G: RGraph, x: int) -> int:
    return G.degree(x)


def nonedge_degree(G: RGraph, x: int) -> int:
    return G.nonedge_degree(x)


# ---------------------------------------------------------------------------
# canonical form (brute force with invariant refinement, t <= ISO_T_CAP)
# ---------------------------------------------------------------------------

def _vertex_invariants(G: RGraph) -> list:
    deg = G.degrees()
    # one round of refinement: multiset of co-member degrees
    inv = []
    for x in range(1, G.t + 1):
        nb = sorted(sorted(deg[v - 1] for v in e if v != x)
                    for e in G.edges if x in e)
        inv.append((deg[x - 1], tuple(map(tuple, nb))))
    return inv


def _ranks_key(edges, perm) -> tuple:
    # perm maps old vertex -> new vertex (1-based)
    return tuple(sorted(colex_rank(tuple(sorted(perm[v - 1] for v in e)))
                        for e in edges))


def canonical_form(G: RGraph) -> RGraph:
    """Lexicographically smallest colex-rank sequence over all relabelings.

    Permutations are restricted to the cells of an invariant partition,
    which is safe because any isomorphism preserves the invariants.
    """
    if G.t > ISO_T_CAP:
        raise ValueError(f"canonical_form capped at t <= {ISO_T_CAP}")
    inv = _vertex_invariants(G)
    cells: dict = {}
    for x in range(1, G.t + 1):
        cells.setdefault(inv[x - 1], []).append(x)
    # sort cells deterministically; assign label blocks per cell
    ordered = sorted(cells.items(), key=lambda kv: (repr(kv[0]),))
    blocks = []
    start = 1
    for _, members in ordered:
        blocks.append((members, list(range(start, start + len(members)))))
        start += len(members)

    best_key = None
    best_perm = None
    def rec(i, perm):
        nonlocal best_key, best_perm
        if i == len(blocks):
            key = _ranks_key(G.edges, perm)
            if best_key is None or key < best_key:
                best_key = key
                best_perm = list(perm)
            return
        members, labels = blocks[i]
        for assign in permutations(labels):
            for v, lab in zip(members, assign):
                perm[v - 1] = lab
            rec(i + 1, perm)

    rec(0, [0] * G.t)
    edges = frozenset(tuple(sorted(best_perm[v - 1] for v in e)) for e in G.edges)
    return RGraph(G.r, G.t, edges)


def are_isomorphic(G: RGraph, H: RGraph) -> bool:
    if G.r != H.r or G.m != H.m:
        return False
    t = max(G.t, H.t)
    if t > ISO_T_CAP:
        raise ValueError(f"are_isomorphic capped at t <= {ISO_T_CAP}")
    G, H = G.with_t(t), H.with_t(t)
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G).edges == canonical_form(H).edges


def permute(G: RGraph, perm: dict) -> RGraph:
    """Relabel vertices; perm maps old label -> new label (a bijection on [t])."""
    edges = frozenset(tuple(sorted(perm[v] for v in e)) for e in G.edges)
    return RGraph(G.r, G.t, edges)


# ---------------------------------------------------------------------------
# edge-list text format: "r t m" header then m lines of r vertices
# ---------------------------------------------------------------------------

def to_text(G: RGraph) -> str:
    lines = [f"{G.r} {G.t} {G.m}"]
    for e in G.edge_list():
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> RGraph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    header = rows[0].split()
    if len(header) != 3:
        raise ValueError(f"bad header {rows[0]!r}, expected 'r t m'")
    r, t, m = (int(v) for v in header)
    if len(rows) - 1 != m:
        raise ValueError(f"header says {m} edges, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        e = tuple(int(v) for v in line.split())
        edges.append(e)
    return RGraph(r, t, frozenset(edges))
