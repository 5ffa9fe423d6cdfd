"""Closed-form and asymptotic oracles for near-complete r-graphs.

The four-term Lagrangian expansion for left-compressed graphs with few
non-edges, the real-binomial-root upper bound, and the constructive
lower-bound weightings used to certify colex-tail values.  Big-O content
is split into assertable constant-free inequalities plus measured
diagnostics; hidden constants are never asserted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .hypergraph import RGraph, clique, colex_segment, complement
from .solver import (LagrangianCertificate, SolverConfig, Weighting,
                     maximize_lagrangian, weight_of)


def mu(i: int, t: int, r: int) -> float:
    """C(t-i, r-i) / t^(r-i)."""
    if not 0 <= i <= r <= t:
        raise ValueError("need 0 <= i <= r <= t")
    return math.comb(t - i, r - i) / t ** (r - i)


@dataclass(frozen=True)
class ExpansionInput:
    t: int
    r: int
    a: int                # non-edge count
    sum_e_sq: int         # sum over vertices of e(x)^2

    def __post_init__(self):
        if not 0 <= self.a <= math.comb(self.t - 2, self.r - 2):
            raise ValueError("need 0 <= a <= C(t-2, r-2)")
        if self.sum_e_sq < 0 or self.sum_e_sq > self.r * self.a * self.a:
            raise ValueError("sum_e_sq out of range (each e(x) <= a)")


def expansion_input_for(G: RGraph) -> ExpansionInput:
    Gbar = complement(G)
    a = Gbar.m
    sum_e_sq = sum(d * d for d in Gbar.degrees())
    return ExpansionInput(G.t, G.r, a, sum_e_sq)


def eval_lag_expansion(inp: ExpansionInput) -> tuple[float, float]:
    """Four explicit expansion terms and the scale of the neglected term.

    value = mu0 - a/t^r + sum_e_sq / (2 mu2 t^(2(r-1))) - r^2 a^2 / (2 mu2 t^(2r-1));
    error_scale = a^3 t^(-3r+4).
    """
    t, r, a = inp.t, inp.r, inp.a
    mu0 = mu(0, t, r)
    mu2 = mu(2, t, r)
    value = (mu0
             - a / t ** r
             + inp.sum_e_sq / (2 * mu2 * t ** (2 * (r - 1)))
             - r ** 2 * a ** 2 / (2 * mu2 * t ** (2 * r - 1)))
    error_scale = a ** 3 * float(t) ** (-3 * r + 4)
    return value, error_scale


# ---------------------------------------------------------------------------
# real binomial root bound
# ---------------------------------------------------------------------------

def _falling_binomial(x: float, r: int) -> float:
    # product form keeps the r-term product exact near integer roots
    prod = 1.0
    for i in range(r):
        prod *= (x - i)
    return prod / math.factorial(r)


def nikiforov_x(m: float, r: int) -> float:
    """The unique real x >= r-1 with C(x, r) = m (strictly increasing)."""
    if m < 0:
        raise ValueError("need m >= 0")
    if m == 0:
        return float(r - 1)
    lo, hi = float(r - 1), float(r + m)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _falling_binomial(mid, r) < m:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    # Newton polish
    for _ in range(50):
        f = _falling_binomial(x, r) - m
        df = 0.0
        for j in range(r):
            term = 1.0
            for i in range(r):
                if i != j:
                    term *= (x - i)
            df += term
        df /= math.factorial(r)
        if df == 0:
            break
        step = f / df
        x -= step
        if abs(step) <= 1e-12 * max(1.0, abs(x)):
            break
    return x


def nikiforov_bound(m: int, r: int) -> float:
    """m * x^(-r) with x the real binomial root; upper bound for Lambda(m, r)."""
    if m < 1:
        raise ValueError("need m >= 1")
    return m * nikiforov_x(m, r) ** (-r)


def check_nikiforov(value: float, m: int, r: int, tol: float = 1e-8) -> dict:
    x = nikiforov_x(m, r)
    bound = m * x ** (-r)
    return {
        "m": m,
        "r": r,
        "x": x,
        "bound": bound,
        "value": value,
        "holds": value <= bound + tol,
        "equality": abs(value - bound) <= tol,
        "x_is_integer": abs(x - round(x)) <= 1e-9,
    }


# ---------------------------------------------------------------------------
# constructive lower bounds (colex tails)
# ---------------------------------------------------------------------------

def claim_weighting(t: int) -> Weighting:
    """Halve the last two weights: w(t) = w(t-1) = 1/(2(t-1)), else 1/(t-1)."""
    return Weighting(tuple(float(f) for f in claim_weighting_exact(t)))


def claim_weighting_exact(t: int) -> list[Fraction]:
    if t < 3:
        raise ValueError("need t >= 3")
    half = Fraction(1, 2 * (t - 1))
    full = Fraction(1, t - 1)
    return [full] * (t - 2) + [half, half]


def lower_bound_Hb(t: int, r: int, b: int,
                   config: SolverConfig = SolverConfig()) -> dict:
    """Colex graph with C(t,r) - C(t-2,r-2) + b edges beats the smaller
    clique by at least b / (4 (t-1)^r)."""
    if not 0 <= b <= math.comb(t - 2, r - 2):
        raise ValueError("need 0 <= b <= C(t-2, r-2)")
    m = math.comb(t, r) - math.comb(t - 2, r - 2) + b
    Hb = colex_segment(m, r).with_t(t)
    cert = maximize_lagrangian(Hb, config)
    clique_val = math.comb(t - 1, r) / (t - 1) ** r
    bound = clique_val + b / (4 * (t - 1) ** r)
    constructive = weight_of(Hb, claim_weighting(t))
    return {
        "t": t, "r": r, "b": b,
        "lambda": cert.value,
        "bound": bound,
        "holds": cert.value >= bound - 1e-8,
        "constructive_weight": constructive,
        "constructive_matches": abs(constructive - bound) <= 1e-12,
        "converged": cert.converged,
    }


def lower_bound_Fa(t: int, r: int, a: int,
                   config: SolverConfig = SolverConfig()) -> dict:
    """Colex graph with C(t,r) - a edges loses at most a/t^r on the clique;
    the measured surplus is the (unasserted) quadratic gain."""
    if not 0 <= a <= math.comb(t - 2, r - 2):
        raise ValueError("need 0 <= a <= C(t-2, r-2)")
    Fa = colex_segment(math.comb(t, r) - a, r).with_t(t)
    cert = maximize_lagrangian(Fa, config)
    clique_val = math.comb(t, r) / t ** r
    floor = clique_val - a / t ** r
    return {
        "t": t, "r": r, "a": a,
        "lambda": cert.value,
        "floor": floor,
        "holds": cert.value >= floor - 1e-8,
        "surplus": cert.value - floor,
        "converged": cert.converged,
    }


def weight_one_bound(t: int, r: int, a: int, w1: float) -> dict:
    """Largest-weight bound for a maximizer with a non-edges:
    w(1) <= 1 - (1 - 1/t)(1 - a/C(t,r))^(1/(r-1))."""
    bound = 1 - (1 - 1 / t) * (1 - a / math.comb(t, r)) ** (1 / (r - 1))
    return {"t": t, "r": r, "a": a, "w1": w1, "bound": bound,
            "holds": w1 <= bound + 1e-10}


def missing_edge_bound(G: RGraph, a: int | None = None) -> dict:
    """For left-compressed maximizers: e(1) <= r a / t."""
    if a is None:
        a = complement(G).m
    e1 = G.nonedge_degree(1)
    bound = G.r * a / G.t
    return {"t": G.t, "r": G.r, "a": a, "e1": e1, "bound": bound,
            "holds": e1 <= bound}
