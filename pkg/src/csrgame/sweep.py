"""Sweep solution of the two-point boundary value problem.

With the linear ansatz ps[k] = S[k] @ xs[k] - g[k], substituting into

    xs[k+1] = A xs[k] + B ps[k+1] + D,    ps[k] = C xs[k] + A ps[k+1] + E

gives, with M = I - B S[k+1],

    S[k] = C + A S[k+1] M^-1 A
    g[k] = A S[k+1] M^-1 (B g[k+1] - D) + A g[k+1] - E
    xs[k+1] = M^-1 (A xs[k] - B g[k+1] + D)

seeded by S[T+1] = 0, g[T+1] = 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import foc
from .hmatrix import GameMatrices, derive_matrices
from .model import ModelParams, validate

SINGULAR_RTOL = 1e-12


class SingularSweep(ArithmeticError):
    def __init__(self, k, det=None):
        self.k = k
        self.det = det
        super().__init__(f"I - B S[{k + 1}] is singular at k={k} (det={det})")


@dataclass(frozen=True)
class SweepState:
    S: np.ndarray
    g: np.ndarray
    k: int


@dataclass
class Trajectory:
    """Equilibrium path. Row ``t - 1`` holds period ``t``.

    ``xs`` and ``ps`` have T+1 rows (stacked state (x, mu, u) and costates
    (P^S, P^M, P^R)); ``inv`` has T rows (I^S, I^M, I^R).
    """

    xs: np.ndarray
    ps: np.ndarray
    inv: np.ndarray
    params: ModelParams

    @property
    def T(self) -> int:
        return self.inv.shape[0]

    @property
    def x(self):
        return self.xs[:, 0]

    @property
    def mu(self):
        return self.xs[:, 1]

    @property
    def u(self):
        return self.xs[:, 2]

    @property
    def p_s(self):
        return self.ps[:, 0]

    @property
    def p_m(self):
        return self.ps[:, 1]

    @property
    def p_r(self):
        return self.ps[:, 2]

    @property
    def i_s(self):
        return self.inv[:, 0]

    @property
    def i_m(self):
        return self.inv[:, 1]

    @property
    def i_r(self):
        return self.inv[:, 2]

    def decision(self, t: int) -> foc.PeriodDecision:
        return foc.PeriodDecision(*self.inv[t - 1])


def investments_from_costates(ps: np.ndarray, params: ModelParams) -> np.ndarray:
    """Reaction chain at every period, driven by next-period costates."""
    return np.array([foc.reaction_chain(foc.CostateTriple(*p), params) for p in ps[1:]],
                    dtype=float).reshape(-1, 3)


def _check_invertible(M, k):
    scale = np.prod(np.linalg.norm(M, axis=1))
    det = np.linalg.det(M)
    if not abs(det) > SINGULAR_RTOL * scale:
        raise SingularSweep(k, det)


def backward_pass(m: GameMatrices, T: int) -> list[SweepState]:
    """Riccati pairs for k = T+1 down to 1 (in that order)."""
    eye = np.eye(3)
    S = np.zeros((3, 3))
    g = np.zeros(3)
    states = [SweepState(S, g, T + 1)]
    for k in range(T, 0, -1):
        M = eye - m.B @ S
        _check_invertible(M, k)
        AS = m.A @ S
        S_new = m.C + AS @ np.linalg.solve(M, m.A)
        g = AS @ np.linalg.solve(M, m.B @ g - m.D) + m.A @ g - m.E
        S = S_new
        states.append(SweepState(S, g, k))
    return states


def forward_pass(m: GameMatrices, states: list[SweepState], x1: float,
                 params: ModelParams) -> Trajectory:
    by_k = {s.k: s for s in states}
    T = max(by_k) - 1
    eye = np.eye(3)
    xs = np.zeros((T + 1, 3))
    ps = np.zeros((T + 1, 3))
    xs[0] = (x1, 0.0, 0.0)
    for k in range(1, T + 1):
        nxt = by_k[k + 1]
        M = eye - m.B @ nxt.S
        _check_invertible(M, k)
        xs[k] = np.linalg.solve(M, m.A @ xs[k - 1] - m.B @ nxt.g + m.D)
        cur = by_k[k]
        ps[k - 1] = cur.S @ xs[k - 1] - cur.g
    # ps[T] (period T+1) stays at the terminal zero.
    return Trajectory(xs=xs, ps=ps, inv=investments_from_costates(ps, params), params=params)


def solve(params: ModelParams, m: GameMatrices | None = None) -> Trajectory:
    validate(params)
    if m is None:
        m = derive_matrices(params)
    states = backward_pass(m, params.T)
    return forward_pass(m, states, params.x1, params)


def defects(traj: Trajectory, m: GameMatrices) -> dict[str, np.ndarray]:
    """Absolute defects of every equation the equilibrium must satisfy,
    together with the magnitude of the terms entering each one."""
    xs, ps, params = traj.xs, traj.ps, traj.params
    fwd_terms = (np.abs(xs[:-1]) @ np.abs(m.A).T + np.abs(ps[1:]) @ np.abs(m.B).T
                 + np.abs(m.D))
    bwd_terms = (np.abs(xs[:-1]) @ np.abs(m.C).T + np.abs(ps[1:]) @ np.abs(m.A).T
                 + np.abs(m.E))
    state = xs[1:] - (xs[:-1] @ m.A.T + ps[1:] @ m.B.T + m.D)
    costate = ps[:-1] - (xs[:-1] @ m.C.T + ps[1:] @ m.A.T + m.E)

    stat = np.zeros((traj.T, 3))
    stat_terms = np.zeros((traj.T, 3))
    for t in range(traj.T):
        dec = foc.PeriodDecision(*traj.inv[t])
        p_next = foc.CostateTriple(*ps[t + 1])
        mul = foc.MultiplierPair(*xs[t, 1:])
        stat[t] = foc.stationarity_residuals(xs[t, 0], dec, mul, p_next, params)
        stat_terms[t] = foc.residual_scales(dec, p_next, params)

    boundary = np.concatenate([xs[0] - (params.x1, 0.0, 0.0), ps[-1]])
    return {
        "state": state, "state_scale": np.abs(xs[1:]) + fwd_terms,
        "costate": costate, "costate_scale": np.abs(ps[:-1]) + bwd_terms,
        "stationarity": stat, "stationarity_scale": stat_terms,
        "boundary": boundary,
    }


def residual_norm(traj: Trajectory, m: GameMatrices) -> float:
    """Largest absolute defect over dynamics, costates, FOCs and boundaries."""
    parts = defects(traj, m)
    return float(max(np.max(np.abs(parts[k]), initial=0.0)
                     for k in ("state", "costate", "stationarity", "boundary")))


def relative_residual(traj: Trajectory, m: GameMatrices) -> float:
    """Like ``residual_norm`` but each defect is divided by 1 + the magnitude
    of the terms in its equation; boundary defects stay absolute."""
    parts = defects(traj, m)
    worst = float(np.max(np.abs(parts["boundary"])))
    for k in ("state", "costate", "stationarity"):
        ratio = np.abs(parts[k]) / (1.0 + parts[k + "_scale"])
        worst = max(worst, float(np.max(ratio, initial=0.0)))
    return worst


def recompute_costates(traj: Trajectory, m: GameMatrices) -> np.ndarray:
    """Run ps[k] = C xs[k] + A ps[k+1] + E backward from the terminal zero,
    using only the forward-pass states."""
    ps = np.zeros_like(traj.ps)
    for k in range(traj.T - 1, -1, -1):
        ps[k] = m.C @ traj.xs[k] + m.A @ ps[k + 1] + m.E
    return ps
