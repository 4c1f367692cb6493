"""Open-loop Stackelberg equilibrium of a supplier/manufacturer/retailer
CSR investment game, solved by a Riccati sweep and checked by a direct
whole-horizon linear solve."""
from .economics import (ProfitSeries, ScenarioComparison, baseline_no_game,
                        compare_scenarios, evaluate, period_profits)
from .foc import CostateTriple, MultiplierPair, PeriodDecision
from .hmatrix import AnsatzError, GameMatrices, derive_matrices, discrepancy_report, printed_matrices
from .model import DomainError, ModelParams, example_params, params_from_dict, validate
from .oracle import DimensionMismatch, SingularSystem, solve_direct
from .sweep import SingularSweep, SweepState, Trajectory, residual_norm, solve

__version__ = "0.1.0"
