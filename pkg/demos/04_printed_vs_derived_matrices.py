"""Compare the Hamiltonian blocks derived from the reaction functions with the
reference closed-form entries.

Run:  python demos/04_printed_vs_derived_matrices.py
"""
import numpy as np

from csrgame import derive_matrices, discrepancy_report, example_params, printed_matrices

np.set_printoptions(precision=4, suppress=True)
params = example_params()

derived = derive_matrices(params)
printed = printed_matrices(params)
print("B derived\n", derived.B)
print("B printed\n", printed.B)
print("D derived", derived.D, " printed", printed.D)

for name, d, p, diff in discrepancy_report(params):
    print(f"{name}: derived {d:10.4f}  printed {p:10.4f}  |diff| {diff:.4f}")

# %% With no conversion of investment into CSR both versions agree.
print(discrepancy_report(params.replace(beta1=0.0, beta2=0.0, beta3=0.0)))
