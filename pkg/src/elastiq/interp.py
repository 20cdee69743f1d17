"""Order-preserving interpolation/restriction across a 1:2 interface.

P maps coarse interface values to fine ones.  Interior fine nodes that
coincide with coarse nodes are injected, the others use the centered
2q-point formula.  A block of rows and columns at each edge is replaced by
boundary-modified coefficients.  R is not stored independently.  It is
defined by the norm compatibility relation h P^T W_h = 2h W_2h R, which
therefore holds to rounding.
"""
from dataclasses import dataclass

import numpy as np

from . import _tables
from .errors import GridTooSmall, NonPositiveScaling
from .sbp_core import make_norm


def min_coarse_points(q):
    mf, mc = getattr(_tables, f"P_EDGE_{2 * q}").shape
    return 2 * mc + q


@dataclass
class InterpOp:
    q: int
    matrix: np.ndarray      # n_fine x n_coarse

    def apply(self, v, axis=-1):
        return np.moveaxis(np.tensordot(self.matrix, np.moveaxis(v, axis, 0), axes=(1, 0)), 0, axis)


@dataclass
class RestrictOp:
    q: int
    matrix: np.ndarray      # n_coarse x n_fine

    def apply(self, v, axis=-1):
        return np.moveaxis(np.tensordot(self.matrix, np.moveaxis(v, axis, 0), axes=(1, 0)), 0, axis)


def _interp_matrix(q, nc):
    nf = 2 * nc - 1
    edge = getattr(_tables, f"P_EDGE_{2 * q}")
    st = getattr(_tables, f"P_INTERIOR_{2 * q}")
    P = np.zeros((nf, nc))
    for j in range(nf):
        if j % 2 == 0:
            P[j, j // 2] = 1.0
        else:
            k = j // 2
            for t, c in enumerate(st):
                col = k - q + 1 + t
                if 0 <= col < nc:
                    P[j, col] = c
    mf, mc = edge.shape
    P[:mf, :mc] = edge
    P[nf - mf:, nc - mc:] = edge[::-1, ::-1]
    return P


def build_op_pair(q, n1_coarse):
    """OP interpolation (edge-exact to degree q) and the compatible restriction."""
    if q not in (2, 3):
        raise ValueError(f"q must be 2 or 3, got {q}")
    if n1_coarse < min_coarse_points(q):
        raise GridTooSmall(f"q = {q} needs n1_coarse >= {min_coarse_points(q)}, got {n1_coarse}")
    nc = n1_coarse
    nf = 2 * nc - 1
    P = _interp_matrix(q, nc)
    wc = make_norm(2 * q, nc).w
    wf = make_norm(2 * q, nf).w
    R = 0.5 * (P.T * wf[None, :]) / wc[:, None]
    return InterpOp(q, P), RestrictOp(q, R)


def check_compatibility(P, R, w_fine, w_coarse, h=1.0, probes=0, rng=None):
    """Max residual of h P^T W_h - 2h W_2h R, optionally over random probes too."""
    Pm = P.matrix if hasattr(P, "matrix") else np.asarray(P)
    Rm = R.matrix if hasattr(R, "matrix") else np.asarray(R)
    res = np.abs(h * Pm.T * w_fine[None, :] - 2 * h * w_coarse[:, None] * Rm).max()
    if probes:
        rng = np.random.default_rng(0) if rng is None else rng
        for _ in range(probes):
            vc = rng.standard_normal(Pm.shape[1])
            vf = rng.standard_normal(Pm.shape[0])
            lhs = h * np.sum(w_fine * vf * (Pm @ vc))
            rhs = 2 * h * np.sum(w_coarse * vc * (Rm @ vf))
            res = max(res, abs(lhs - rhs))
    return float(res)


@dataclass
class ScaledCoupling:
    """Geometry-scaled P and R acting on (2, n) interface arrays."""
    P: InterpOp
    R: RestrictOp
    jl_fine: np.ndarray
    jl_coarse: np.ndarray

    def __post_init__(self):
        if np.any(self.jl_fine <= 0) or np.any(self.jl_coarse <= 0):
            raise NonPositiveScaling("interface scaling J*Lambda must be positive")
        sf, sc = np.sqrt(self.jl_fine), np.sqrt(self.jl_coarse)
        self.Ps = (self.P.matrix / sf[:, None]) * sc[None, :]
        self.Rs = (self.R.matrix / sc[:, None]) * sf[None, :]

    def interp(self, uc):
        """Scaled interpolation of coarse interface data, components first."""
        return np.asarray(uc) @ self.Ps.T

    def restrict(self, uf):
        return np.asarray(uf) @ self.Rs.T

    def interleaved(self, which="P"):
        """Operator on node-major, component-interleaved vectors (A kron I2)."""
        A = self.Ps if which == "P" else self.Rs
        return np.kron(A, np.eye(2))


def build_scaled(P, R, fine_block, coarse_block):
    mf = fine_block.metrics
    mc = coarse_block.metrics
    jl_f = mf.J[:, fine_block.interface_row] * mf.lam_interface
    jl_c = mc.J[:, coarse_block.interface_row] * mc.lam_interface
    return ScaledCoupling(P, R, jl_f, jl_c)


def adjoint_residual(coupling, h1_fine, w_fine, w_coarse, u_coarse, u_fine):
    """<Pu, v>_hw - <u, Rv>_2hw for (2, n) arrays."""
    lhs = h1_fine * np.sum(w_fine * coupling.jl_fine * coupling.interp(u_coarse) * u_fine)
    rhs = 2 * h1_fine * np.sum(w_coarse * coupling.jl_coarse * u_coarse * coupling.restrict(u_fine))
    return float(lhs - rhs)
