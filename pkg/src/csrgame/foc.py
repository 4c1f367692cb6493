"""First-order conditions of the two Stackelberg levels.

Level one: manufacturer (leader) against retailer (follower).
Level two: supplier (leader) against the manufacturer/retailer pair.
All functions are affine in their non-parameter arguments.
"""
from __future__ import annotations

from typing import NamedTuple

from .model import ModelParams


class PeriodDecision(NamedTuple):
    i_s: float
    i_m: float
    i_r: float


class CostateTriple(NamedTuple):
    p_s: float
    p_m: float
    p_r: float


class MultiplierPair(NamedTuple):
    """Supplier's multiplier on the manufacturer costate (mu) and the
    multiplier on the retailer costate (u). Both start at zero."""

    mu: float
    u: float


def retailer_reaction(i_s, i_m, p_r_next, params: ModelParams):
    tt = params.tt
    return (1 - p_r_next * params.beta3 - tt * (i_m + i_s) - params.tau) / (2 * tt)


def manufacturer_reaction(i_s, p_m_next, p_r_next, params: ModelParams):
    # Retailer's reaction already substituted into the manufacturer's Hamiltonian.
    tt = params.tt
    b3 = params.beta3
    return ((-tt * i_s + b3 * p_r_next + (1 + params.d_hat - params.tau)) / (2 * tt)
            - (params.beta2 - b3 / 2) * p_m_next / tt)


def supplier_reaction(p_s_next, p_m_next, p_r_next, params: ModelParams):
    tt = params.tt
    b1, b2, b3 = params.beta1, params.beta2, params.beta3
    return ((b3 / 2 + b2 - 2 * b1) / tt * p_s_next
            + (b2 - b3 / 2) / tt * p_m_next
            + b3 / (2 * tt) * p_r_next
            + (3 - 3 * params.tau - params.d_hat + 2 * params.d) / (2 * tt))


def reaction_chain(p_next: CostateTriple, params: ModelParams) -> PeriodDecision:
    """Leader first, then each follower's best response to those above it."""
    p_s, p_m, p_r = p_next
    i_s = supplier_reaction(p_s, p_m, p_r, params)
    i_m = manufacturer_reaction(i_s, p_m, p_r, params)
    i_r = retailer_reaction(i_s, i_m, p_r, params)
    return PeriodDecision(i_s, i_m, i_r)


def state_step(x, dec: PeriodDecision, params: ModelParams):
    return (params.alpha * x + params.beta1 * dec.i_s + params.beta2 * dec.i_m
            + params.beta3 * dec.i_r)


def adjoint_step(x, mul: MultiplierPair, p_next: CostateTriple,
                 params: ModelParams) -> CostateTriple:
    """One step backward of the three costates (derivatives of each
    Hamiltonian with respect to the state)."""
    alpha = params.alpha
    p_r = 2 * params.delta_hathat * x + alpha * p_next.p_r
    p_m = 2 * params.delta_hat * x + alpha * p_next.p_m + 2 * params.delta_hathat * mul.u
    p_s = (2 * params.delta * x + alpha * p_next.p_s
           + 2 * params.delta_hat * mul.mu + 2 * params.delta_hathat * mul.u)
    return CostateTriple(p_s, p_m, p_r)


def multiplier_step(mul: MultiplierPair, dec: PeriodDecision, p_next: CostateTriple,
                    params: ModelParams) -> MultiplierPair:
    tt = params.tt
    alpha = params.alpha
    b2, b3 = params.beta2, params.beta3
    k = b2 - b3 / 2
    u = (-(b3 / 2) * dec.i_m - params.d_hat * b3 / (2 * tt)
         - p_next.p_m * b3 ** 2 / (2 * tt) + alpha * mul.u)
    mu = (alpha * mul.mu - (k / 2) * dec.i_s + k * (b3 - 2 * b2) / (2 * tt) * p_next.p_s
          - k * params.d / tt)
    return MultiplierPair(mu, u)


def own_curvatures(params: ModelParams) -> tuple[float, float, float]:
    """Second derivative of each member's Hamiltonian in its own investment
    (supplier, manufacturer, retailer), followers' reactions substituted.

    All three are positive for tau*theta > 0, so the stationary points are
    minima of the per-period Hamiltonians, not maxima.
    """
    tt = params.tt
    return tt / 2, tt, 2 * tt


def stationarity_residuals(x, dec: PeriodDecision, mul: MultiplierPair,
                           p_next: CostateTriple, params: ModelParams):
    """dH/dI for supplier, manufacturer and retailer at the given point.

    Each residual vanishes exactly where the matching reaction function
    holds. ``x`` and ``mul`` enter the Hamiltonians only through terms that
    do not involve the investments; they are accepted for a uniform
    signature.
    """
    tt = params.tt
    tau = params.tau
    b3 = params.beta3
    i_s, i_m, i_r = dec
    r_ret = (tau * (1 + params.theta * (i_s + i_m + i_r)) + tt * i_r - 1
             + b3 * p_next.p_r)
    r_man = (tt * i_m + tt * i_s / 2 + (tau - 1 - params.d_hat) / 2
             - b3 * p_next.p_r / 2 + (params.beta2 - b3 / 2) * p_next.p_m)
    r_sup = tt / 2 * (i_s - supplier_reaction(*p_next, params))
    return r_sup, r_man, r_ret


def residual_scales(dec: PeriodDecision, p_next: CostateTriple, params: ModelParams):
    """Magnitude of the terms summed in each residual, for relative checks."""
    tt = params.tt
    b1, b2, b3 = params.beta1, params.beta2, params.beta3
    i_s, i_m, i_r = (abs(v) for v in dec)
    p_s, p_m, p_r = (abs(v) for v in p_next)
    s_ret = params.tau + tt * (i_s + i_m + 2 * i_r) + 1 + b3 * p_r
    s_man = tt * (i_m + i_s / 2) + (params.tau + 1 + abs(params.d_hat)) / 2 \
        + b3 * p_r / 2 + abs(b2 - b3 / 2) * p_m
    s_sup = tt / 2 * i_s + 0.5 * (abs(b3 / 2 + b2 - 2 * b1) * p_s + abs(b2 - b3 / 2) * p_m
                                    + b3 * p_r / 2) \
        + abs(3 - 3 * params.tau - params.d_hat + 2 * params.d) / 4
    return s_sup, s_man, s_ret
