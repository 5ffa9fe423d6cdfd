"""Lagrangian evaluation and maximization over the probability simplex.

The ascent is the multiplicative growth transform (monotone for polynomials
with nonnegative coefficients); converged iterates are polished by a Newton
step on the interior stationarity system and certified by the first-order
identities  w(N(x)) = r * w(G)  (for w(x) > 0) and the pairwise exchange
identity  w(N(x,y)) (w(x) - w(y)) = w(N_y(x)) - w(N_x(y)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .hypergraph import RGraph, link, link_excluding

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class Weighting:
    """Nonnegative weights on {1..t} summing to 1."""

    weights: tuple

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        total = sum(self.weights)
        if abs(total - 1) > WEIGHT_SUM_TOL:
            raise ValueError(f"weights must sum to 1 (got {total!r})")

    @property
    def t(self) -> int:
        return len(self.weights)

    def __getitem__(self, x: int):
        """Weight of 1-based vertex x."""
        return self.weights[x - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.weights, dtype=np.float64)

    def is_decreasing(self) -> bool:
        w = self.weights
        return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def uniform_weighting(t: int) -> Weighting:
    return Weighting(tuple([1.0 / t] * t))


@dataclass(frozen=True)
class SolverConfig:
    starts: int = 64
    max_iters: int = 100_000
    tol: float = 1e-10
    seed: int = 0


@dataclass(frozen=True)
class LagrangianCertificate:
    value: float
    witness: Weighting          # relabeled so the weights are decreasing
    kkt_max_residual: float
    iterations: int
    starts_used: int
    converged: bool

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": list(self.witness.weights),
            "kkt_max_residual": self.kkt_max_residual,
            "iterations": self.iterations,
            "starts_used": self.starts_used,
            "converged": self.converged,
        }


# ---------------------------------------------------------------------------
# evaluation (generic arithmetic: works with floats and Fractions)
# ---------------------------------------------------------------------------

def _weights_seq(w):
    if isinstance(w, Weighting):
        return w.weights
    return tuple(w)


def weight_of(G: RGraph, w):
    """w(G) = sum over edges of the product of endpoint weights."""
    ws = _weights_seq(w)
    if len(ws) != G.t:
        raise ValueError(f"weighting has {len(ws)} entries, graph has t={G.t}")
    total = 0
    for e in G.edges:
        prod = 1
        for v in e:
            prod = prod * ws[v - 1]
        total += prod
    return total


def _set_weight(sets, ws):
    total = 0
    for f in sets:
        prod = 1
        for v in f:
            prod = prod * ws[v - 1]
        total += prod
    return total


def link_weight(G: RGraph, w, S):
    """Weight of the link N_G(S) under w."""
    ws = _weights_seq(w)
    return _set_weight(link(G, S), ws)


def kkt_residuals(G: RGraph, w):
    """First-order residuals at w.

    residual_a[x] = |w(N(x)) - r * w(G)| for vertices with positive weight;
    residual_b[(x, y)] = |w(N(x,y))(w(x)-w(y)) - (w(N_y(x)) - w(N_x(y)))|
    for pairs with both weights positive.
    """
    ws = _weights_seq(w)
    wG = weight_of(G, ws)
    pos = [x for x in range(1, G.t + 1) if ws[x - 1] > 0]
    res_a = {x: abs(_set_weight(link(G, {x}), ws) - G.r * wG) for x in pos}
    res_b = {}
    for i, x in enumerate(pos):
        for y in pos[i + 1:]:
            lhs = _set_weight(link(G, {x, y}), ws) * (ws[x - 1] - ws[y - 1])
            rhs = (_set_weight(link_excluding(G, x, y), ws)
                   - _set_weight(link_excluding(G, y, x), ws))
            res_b[(x, y)] = abs(lhs - rhs)
    return {"a": res_a, "b": res_b}


def twin_merge_weighting(w: Weighting, x: int, y: int) -> Weighting:
    """Give both x and y the average of their weights; others unchanged."""
    if x == y:
        raise ValueError("need x != y")
    ws = list(w.weights)
    avg = (ws[x - 1] + ws[y - 1]) / 2
    ws[x - 1] = avg
    ws[y - 1] = avg
    return Weighting(tuple(ws))


# ---------------------------------------------------------------------------
# ascent + Newton polish
# ---------------------------------------------------------------------------

def ascend(G: RGraph, w0: Weighting, config: SolverConfig = SolverConfig()) -> Weighting:
    """Growth-transform ascent from w0; the value never decreases."""
    arr = w0.as_array()
    kernels.ascend_inplace(G.edge_array(), arr, G.r, config.max_iters, config.tol)
    arr = np.clip(arr, 0.0, None)
    arr /= arr.sum()
    return Weighting(tuple(arr.tolist()))


def _newton_polish(edges: np.ndarray, w: np.ndarray, r: int,
                   support_eps: float = 0.0) -> np.ndarray:
    """Solve the interior stationarity system on the current support.

    Bails out (returns the input) on any sign of trouble; the ascent
    iterate is always a valid fallback.
    """
    support = np.flatnonzero(w > support_eps)
    if len(support) < r:
        return w
    remap = -np.ones(w.shape[0], dtype=np.int64)
    remap[support] = np.arange(len(support))
    keep = np.all(np.isin(edges, support), axis=1) if edges.size else np.zeros(0, bool)
    sub = remap[edges[keep]]
    if sub.shape[0] == 0:
        return w
    ws = w[support].copy()
    s = len(support)
    p0, grad0 = kernels.poly_and_grad(sub, ws)
    c = r * p0
    for _ in range(50):
        p, grad = kernels.poly_and_grad(sub, ws)
        F = np.concatenate([grad - c, [ws.sum() - 1.0]])
        if np.max(np.abs(F)) < 1e-15:
            break
        H = kernels.pair_link_matrix(sub, ws, s)
        J = np.zeros((s + 1, s + 1))
        J[:s, :s] = H
        J[:s, s] = -1.0
        J[s, :s] = 1.0
        try:
            step = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            return w
        ws_new = ws + step[:s]
        if not np.all(np.isfinite(ws_new)) or np.any(ws_new < -1e-9):
            return w
        ws = np.clip(ws_new, 0.0, None)
        c += step[s]
    p1, _ = kernels.poly_and_grad(sub, ws)
    if not np.isfinite(p1) or p1 < p0 - 1e-12:
        return w
    out = np.zeros_like(w)
    out[support] = ws
    total = out.sum()
    if abs(total - 1.0) > 1e-9 or total <= 0:
        return w
    out /= total
    return out


def _gap_thresholds(w: np.ndarray, ratio: float = 50.0, cap: int = 5):
    """Truncation levels sitting inside large multiplicative gaps of the
    sorted positive weights."""
    pos = np.sort(w[w > 0])
    out = []
    for i in range(len(pos) - 1):
        if pos[i + 1] > ratio * pos[i]:
            out.append(float(np.sqrt(pos[i] * pos[i + 1])))
    return out[-cap:]


def _random_start(t: int, seed: int, index: int) -> np.ndarray:
    # normalized exponentials of a fixed-seed generator (Dirichlet(1)-like)
    rng = np.random.default_rng([seed, index])
    w = rng.exponential(size=t)
    return w / w.sum()


def _max_residual_a(edges: np.ndarray, w: np.ndarray, r: int) -> float:
    p, grad = kernels.poly_and_grad(edges, w)
    res = np.abs(grad - r * p)
    res[w <= 0] = 0.0
    return float(res.max()) if res.size else 0.0


def maximize_lagrangian(G: RGraph, config: SolverConfig = SolverConfig(),
                        exhaustive_supports: bool = False) -> LagrangianCertificate:
    """Best lower bound for lambda(G) over multistart ascent runs.

    The uniform start always runs first, followed by `config.starts`
    seeded pseudo-random starts.  Ties are resolved in favor of the
    earliest start, so the result is independent of scheduling.
    """
    t = G.t
    edges = G.edge_array()
    if G.m == 0:
        return LagrangianCertificate(0.0, uniform_weighting(t), 0.0, 0, 0, True)

    starts = [np.full(t, 1.0 / t)]
    starts += [_random_start(t, config.seed, i) for i in range(config.starts)]
    if exhaustive_supports:
        if t > 6:
            raise ValueError("exhaustive support enumeration is capped at t <= 6")
        for mask in range(1, 1 << t):
            sup = [x for x in range(t) if mask >> x & 1]
            if len(sup) < G.r:
                continue
            w = np.zeros(t)
            w[sup] = 1.0 / len(sup)
            starts.append(w)

    best_p = -1.0
    best_w = None
    best_iters = 0
    best_conv = False
    total_iters = 0
    for w in starts:
        w = w.copy()
        p, iters, conv = kernels.ascend_inplace(edges, w, G.r, config.max_iters,
                                                config.tol)
        total_iters += iters
        w = _newton_polish(edges, w, G.r)
        p, _ = kernels.poly_and_grad(edges, w)
        if _max_residual_a(edges, w, G.r) > config.tol:
            # ascent stalling near a face: weights decaying toward the
            # boundary do so sublinearly, so truncate below each large gap
            # of the sorted weight profile and polish on that support
            for eps in _gap_thresholds(w):
                w2 = _newton_polish(edges, w, G.r, support_eps=eps)
                p2, _ = kernels.poly_and_grad(edges, w2)
                if p2 >= p - 1e-12 and (
                        p2 > p + 1e-15
                        or _max_residual_a(edges, w2, G.r)
                        < _max_residual_a(edges, w, G.r)):
                    w, p = w2, p2
        if p > best_p + 1e-15:
            best_p = p
            best_w = w
            best_iters = iters
            best_conv = conv

    res = _max_residual_a(edges, best_w, G.r)
    converged = best_conv or res <= config.tol
    # decreasing normalization: relabel so the reported witness is decreasing
    order = np.argsort(-best_w, kind="stable")
    witness = Weighting(tuple(np.clip(best_w[order], 0.0, None)
                              / best_w[order].sum()))
    return LagrangianCertificate(
        value=float(best_p),
        witness=witness,
        kkt_max_residual=res,
        iterations=best_iters,
        starts_used=len(starts),
        converged=bool(converged),
    )


# ---------------------------------------------------------------------------
# exact r = 2 value via Motzkin-Straus
# ---------------------------------------------------------------------------

def _max_clique_size(adj: list[int], n: int) -> int:
    """Bitset branch-and-bound maximum clique on n <= 30 vertices."""
    best = 0

    def expand(cand: int, size: int):
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            if size + bin(cand).count("1") <= best:
                return
            cand &= cand - 1
            expand(cand & adj[v], size + 1)

    expand((1 << n) - 1, 0)
    return best


def motzkin_straus_exact(G: RGraph) -> float:
    """(1/2)(1 - 1/omega(G)) for graphs; 0 when G has no edges."""
    if G.r != 2:
        raise ValueError("motzkin_straus_exact requires r = 2")
    if G.t > 30:
        raise ValueError("exact clique search capped at t <= 30")
    if G.m == 0:
        return 0.0
    adj = [0] * G.t
    for (x, y) in G.edges:
        adj[x - 1] |= 1 << (y - 1)
        adj[y - 1] |= 1 << (x - 1)
    omega = _max_clique_size(adj, G.t)
    return 0.5 * (1.0 - 1.0 / omega)
