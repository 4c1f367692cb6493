"""Solve the shipped three-tier example and look at the equilibrium path.

Run:  python demos/01_solve_example.py
"""
import numpy as np

from csrgame import derive_matrices, example_params, residual_norm, solve

np.set_printoptions(precision=4, suppress=True, linewidth=120)

params = example_params()
m = derive_matrices(params)
traj = solve(params, m)

# %% Stacked state (x, mu, u) per period, t = 1..T+1
print("state x, mu, u")
print(traj.xs)

# %% Costates P^S, P^M, P^R; the last row is the terminal zero
print("costates")
print(traj.ps)

# %% Investments. The retailer's equilibrium investment is negative here;
# nothing is clamped.
print("investments I^S, I^M, I^R")
print(traj.inv)

print(f"residual norm {residual_norm(traj, m):.3e}")
