"""Check the sweep against a single dense solve of the whole horizon.

Run:  python demos/02_verify_against_direct_solve.py
"""
import numpy as np

from csrgame import derive_matrices, example_params, solve, solve_direct
from csrgame.oracle import assemble, compare
from csrgame.sweep import recompute_costates

params = example_params()
m = derive_matrices(params)

sys_ = assemble(m, params)
print(f"stacked system is {sys_.dim} x {sys_.dim}")

a = solve(params, m)
b = solve_direct(params, m)
print(f"max relative difference sweep vs direct: {compare(a, b):.2e}")

# %% The costates can also be rebuilt from the forward states alone.
again = recompute_costates(a, m)
print(f"costate recursion defect: {np.abs(again - a.ps).max():.2e}")

# %% Random parameter draws
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(100):
    p = params.replace(alpha=rng.uniform(0.1, 0.95), beta3=rng.uniform(0, 1),
                       tau=rng.uniform(0.05, 0.5), T=int(rng.integers(1, 51)))
    worst = max(worst, compare(solve(p), solve_direct(p)))
print(f"worst over 100 random draws: {worst:.2e}")
