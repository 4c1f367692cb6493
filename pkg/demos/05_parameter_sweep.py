"""How the cumulative gains move with the retailer's conversion rate beta3.

Same computation as ``csrgame sweep --param beta3``.

Run:  python demos/05_parameter_sweep.py
"""
import numpy as np

from csrgame import SingularSweep, compare_scenarios, example_params

params = example_params()
print(" beta3    gainS       gainM       gainR")
for beta3 in np.linspace(0.0, 0.8, 9):
    try:
        gain = compare_scenarios(params.replace(beta3=float(beta3))).cumulative_gain[-1]
    except SingularSweep:
        print(f"{beta3:5.2f}  singular")
        continue
    print(f"{beta3:5.2f} " + " ".join(f"{g:11.2f}" for g in gain))
