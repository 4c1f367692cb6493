"""Direct solve of the whole-horizon affine system, independent of the sweep."""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .hmatrix import GameMatrices, derive_matrices
from .model import ModelParams, validate
from .sweep import Trajectory, investments_from_costates

PIVOT_RTOL = 1e-12


class SingularSystem(ArithmeticError):
    pass


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class StackedSystem:
    """Unknowns ordered as xs[1..T+1] then ps[1..T+1], three each."""

    M: np.ndarray
    r: np.ndarray
    T: int

    @property
    def dim(self) -> int:
        return self.M.shape[0]

    def index(self, kind: str, t: int, i: int = 0) -> int:
        """Column of component ``i`` of ``kind`` ('x' or 'p') at period ``t``."""
        base = 0 if kind == "x" else 3 * (self.T + 1)
        return base + 3 * (t - 1) + i


def assemble(m: GameMatrices, params: ModelParams) -> StackedSystem:
    T = params.T
    n = 6 * (T + 1)
    M = np.zeros((n, n))
    r = np.zeros(n)
    sys = StackedSystem(M, r, T)
    eye = np.eye(3)

    def blk(kind, t):
        c = sys.index(kind, t)
        return slice(c, c + 3)

    row = 0
    M[row:row + 3, blk("x", 1)] = eye
    r[row:row + 3] = (params.x1, 0.0, 0.0)
    row += 3
    for t in range(1, T + 1):
        rows = slice(row, row + 3)
        M[rows, blk("x", t + 1)] = eye
        M[rows, blk("x", t)] = -m.A
        M[rows, blk("p", t + 1)] = -m.B
        r[rows] = m.D
        row += 3
    for t in range(1, T + 1):
        rows = slice(row, row + 3)
        M[rows, blk("p", t)] = eye
        M[rows, blk("x", t)] = -m.C
        M[rows, blk("p", t + 1)] = -m.A
        r[rows] = m.E
        row += 3
    M[row:row + 3, blk("p", T + 1)] = eye
    return sys


def solve_direct(params: ModelParams, m: GameMatrices | None = None) -> Trajectory:
    validate(params)
    if m is None:
        m = derive_matrices(params)
    sys = assemble(m, params)
    # Row scaling so the pivot test is relative to each row's size.
    row_scale = np.max(np.abs(sys.M), axis=1)
    Ms = sys.M / row_scale[:, None]
    rs = sys.r / row_scale
    with warnings.catch_warnings():
        # Singularity is reported through the pivot test below.
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(Ms, check_finite=True)
    pivots = np.abs(np.diag(lu))
    if np.min(pivots) < PIVOT_RTOL:
        raise SingularSystem(f"pivot {np.min(pivots):.3e} below {PIVOT_RTOL:g}")
    v = scipy.linalg.lu_solve((lu, piv), rs)
    half = 3 * (params.T + 1)
    xs = v[:half].reshape(-1, 3)
    ps = v[half:].reshape(-1, 3)
    return Trajectory(xs=xs, ps=ps, inv=investments_from_costates(ps, params), params=params)


def compare(a: Trajectory, b: Trajectory) -> float:
    if a.T != b.T:
        raise DimensionMismatch(f"horizons differ: {a.T} vs {b.T}")
    worst = 0.0
    for name in ("xs", "ps", "inv"):
        va, vb = getattr(a, name), getattr(b, name)
        err = np.abs(va - vb) / (1.0 + np.abs(va) + np.abs(vb))
        worst = max(worst, float(np.max(err, initial=0.0)))
    return worst
