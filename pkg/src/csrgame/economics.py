"""Per-period and cumulative profits, with and without the game."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import foc
from .model import ModelParams
from .oracle import DimensionMismatch
from .sweep import Trajectory, solve


@dataclass(frozen=True)
class ProfitSeries:
    """Rows are periods 1..T, columns supplier, manufacturer, retailer."""

    per_period: np.ndarray

    @property
    def cumulative(self) -> np.ndarray:
        # Running sums in ascending t.
        return np.cumsum(self.per_period, axis=0)

    @property
    def totals(self) -> np.ndarray:
        return self.cumulative[-1]

    @property
    def js(self):
        return self.per_period[:, 0]

    @property
    def jm(self):
        return self.per_period[:, 1]

    @property
    def jr(self):
        return self.per_period[:, 2]


@dataclass(frozen=True)
class ScenarioComparison:
    game: ProfitSeries
    baseline: ProfitSeries

    @property
    def gain(self) -> np.ndarray:
        return self.game.per_period - self.baseline.per_period

    @property
    def cumulative_gain(self) -> np.ndarray:
        return self.game.cumulative - self.baseline.cumulative


def period_profits(x, dec: foc.PeriodDecision, params: ModelParams):
    p = params
    i_s, i_m, i_r = dec
    total = i_s + i_m + i_r
    retail_price = p.a - p.b * p.q

    def tax_return(i):
        return p.tau * i * (1 + p.theta * total)

    js = p.w * p.q - p.c * p.q + p.delta * x ** 2 + tax_return(i_s) - i_s + p.d * i_m
    jm = (retail_price * p.q - p.w * p.q + p.delta_hat * x ** 2 + tax_return(i_m) - i_m
          + p.d_hat * i_r)
    jr = p.z * p.q - retail_price * p.q + p.delta_hathat * x ** 2 + tax_return(i_r) - i_r
    return js, jm, jr


def evaluate(traj: Trajectory, params: ModelParams) -> ProfitSeries:
    if traj.T != params.T:
        raise DimensionMismatch(f"trajectory has T={traj.T}, params T={params.T}")
    rows = [period_profits(traj.x[t], foc.PeriodDecision(*traj.inv[t]), params)
            for t in range(traj.T)]
    return ProfitSeries(np.array(rows, dtype=float))


def no_game_trajectory(params: ModelParams) -> Trajectory:
    """Nobody invests; the CSR level just decays from x1."""
    T = params.T
    xs = np.zeros((T + 1, 3))
    xs[0, 0] = params.x1
    for t in range(T):
        xs[t + 1, 0] = params.alpha * xs[t, 0]
    return Trajectory(xs=xs, ps=np.zeros((T + 1, 3)), inv=np.zeros((T, 3)), params=params)


def baseline_no_game(params: ModelParams) -> ProfitSeries:
    return evaluate(no_game_trajectory(params), params)


def compare_scenarios(params: ModelParams, traj: Trajectory | None = None) -> ScenarioComparison:
    if traj is None:
        traj = solve(params)
    return ScenarioComparison(game=evaluate(traj, params), baseline=baseline_no_game(params))
