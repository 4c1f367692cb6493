"""Profits with and without the game (the series behind the profit figures).

The no-game baseline has nobody investing and the CSR level decaying.

Run:  python demos/03_game_vs_no_game.py
"""
import numpy as np

from csrgame import compare_scenarios, example_params

params = example_params()
comp = compare_scenarios(params)

print(" t        JS          JSO         JM          JMO         JR          JRO")
for t in range(params.T):
    g, b = comp.game.per_period[t], comp.baseline.per_period[t]
    print(f"{t + 1:2d} " + " ".join(f"{v:11.2f}" for pair in zip(g, b) for v in pair))

# %% Cumulative gain of each member
gain = comp.cumulative_gain[-1]
for name, v in zip(("supplier", "manufacturer", "retailer"), gain):
    print(f"{name:>12s} cumulative gain {v:10.2f}")

# The manufacturer loses with these parameters: its share of the retailer's
# (negative) investment outweighs its tax return.
print("all members gain:", bool(np.all(gain > 0)))
