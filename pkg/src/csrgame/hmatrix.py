"""Augmented discrete Hamiltonian system.

The stacked state is (x, mu, u) and the stacked costate (P^S, P^M, P^R):

    xs[t+1] = A @ xs[t] + B @ ps[t+1] + D
    ps[t]   = C @ xs[t] + A @ ps[t+1] + E

``derive_matrices`` obtains the blocks by probing the FOC composition,
``printed_matrices`` evaluates reference closed-form entry formulas.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import foc
from .model import ModelParams


class AnsatzError(RuntimeError):
    pass


@dataclass(frozen=True)
class GameMatrices:
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    E: np.ndarray

    def entries(self) -> dict[str, float]:
        """Flat mapping such as ``{"b13": ..., "d1": ...}`` (1-based)."""
        out = {}
        for name in "ABC":
            mat = getattr(self, name)
            for i in range(3):
                for j in range(3):
                    out[f"{name.lower()}{i + 1}{j + 1}"] = float(mat[i, j])
        for name in "DE":
            vec = getattr(self, name)
            for i in range(3):
                out[f"{name.lower()}{i + 1}"] = float(vec[i])
        return out

    def to_dict(self) -> dict:
        return {name: getattr(self, name).tolist() for name in "ABCDE"}


def forward_map(xs, ps_next, params: ModelParams) -> tuple:
    """(xs[t], ps[t+1]) -> xs[t+1] through the reaction chain."""
    x, mu, u = xs
    p_next = foc.CostateTriple(*ps_next)
    dec = foc.reaction_chain(p_next, params)
    x_new = foc.state_step(x, dec, params)
    mul = foc.multiplier_step(foc.MultiplierPair(mu, u), dec, p_next, params)
    return x_new, mul.mu, mul.u


def backward_map(xs, ps_next, params: ModelParams) -> tuple:
    """(xs[t], ps[t+1]) -> ps[t]."""
    x, mu, u = xs
    return tuple(foc.adjoint_step(x, foc.MultiplierPair(mu, u),
                                  foc.CostateTriple(*ps_next), params))


def _exact(params: ModelParams) -> ModelParams:
    return params.replace(**{k: Fraction(v) for k, v in params.to_dict().items()})


def _extract(fn, params):
    # Probing in rational arithmetic makes the extraction exact; each entry
    # is rounded to float once.
    zero = (Fraction(0),) * 3
    offset = fn(zero, zero, params)
    left = np.empty((3, 3))
    right = np.empty((3, 3))
    for j in range(3):
        e = tuple(Fraction(int(i == j)) for i in range(3))
        left[:, j] = [float(a - b) for a, b in zip(fn(e, zero, params), offset)]
        right[:, j] = [float(a - b) for a, b in zip(fn(zero, e, params), offset)]
    return left, right, np.array([float(v) for v in offset])


def derive_matrices(params: ModelParams, atol: float = 1e-12) -> GameMatrices:
    exact = _exact(params)
    A_fwd, B, D = _extract(forward_map, exact)
    C, A_bwd, E = _extract(backward_map, exact)
    if not np.allclose(A_fwd, A_bwd, rtol=0.0, atol=atol):
        raise AnsatzError(
            f"forward and backward maps disagree on A:\n{A_fwd}\nvs\n{A_bwd}")
    return GameMatrices(A=A_fwd, B=B, C=C, D=D, E=E)


def printed_matrices(params: ModelParams) -> GameMatrices:
    """Reference closed-form entries, evaluated as written (typos included)."""
    p = params
    tt = p.tt
    b1, b2, b3 = p.beta1, p.beta2, p.beta3
    d, dh, tau = p.d, p.d_hat, p.tau
    s = b1 - b2 / 2 - b3 / 4
    k = b2 - b3 / 2

    B = np.array([
        [s * (-2 * b1 + b2 + b3 / 2) / tt,
         s * k / tt + k * (-2 * b2 + b3) / (2 * tt),
         s * b3 / (2 * tt) + (2 * b2 * b3) * (-3 * b3 ** 2) / (4 * tt)],
        [k * (2 * b1 - 3 * b2 + b3 / 2) / (2 * tt),
         -k ** 2 / (2 * tt),
         -b3 * k / (4 * tt)],
        [-b3 * (-2 * b1 + b2 + b3 / 2) / (4 * tt),
         (-b3 ** 2 + 1.5 * b3 * k) / (2 * tt),
         -b3 ** 2 / (8 * tt)],
    ])
    D = np.array([
        s * (3 - 3 * tau - dh + 2 * d) / (2 * tt)
        + ((2 * b2 - b3) * (1 - tau + dh) + 2 * b3 * (1 - tau)) / (4 * tt),
        (-b2 - b3 / 2) * (6 * d - dh - 3 * tau + 3) / (4 * tt),
        -b3 * (-7 * dh + 2 * d - tau + 1) / (8 * tt),
    ])
    C = 2.0 * np.array([
        [p.delta, p.delta_hat, p.delta_hathat],
        [p.delta_hat, 0.0, p.delta_hathat],
        [p.delta_hathat, 0.0, 0.0],
    ])
    return GameMatrices(A=p.alpha * np.eye(3), B=B, C=C, D=D, E=np.zeros(3))


def discrepancy_report(params: ModelParams, tol: float = 1e-9):
    """Entries where derived and printed values differ by more than ``tol``.

    Returns ``(name, derived, printed, abs_diff)`` tuples sorted by name.
    """
    derived = derive_matrices(params).entries()
    printed = printed_matrices(params).entries()
    rows = []
    for name in sorted(derived):
        diff = abs(derived[name] - printed[name])
        if diff > tol:
            rows.append((name, derived[name], printed[name], diff))
    return rows
