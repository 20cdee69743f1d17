"""One-dimensional summation-by-parts building blocks.

Everything here works on a uniform grid x_j = x_0 + j*h, j = 0..n-1, with a
diagonal norm H = h*diag(w).  Operators act along a chosen axis of an array so
the same objects serve 1D tests and the 2D block operators.

The variable-coefficient second derivative is stored in "stiffness" form,

    G(g) v = (1/h^2) W^-1 ( -M(g) v - g_0 e_0 (b.v) + g_n e_n (b_n.v) ),

with M(g) = sum_k g_k M_k and each M_k symmetric positive semidefinite.  The
SBP identity then holds by construction with S_g(u, v) = u^T M(g) v / h.
"""
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sps

from . import _tables
from .errors import GridTooSmall, LengthMismatch, WrongOrder

# ghost conversion weight: removes the dependence of the converted
# boundary derivative on the sixth grid point
BETA = 0.25
# fifth difference (ghost, v0, ..., v4) used by the conversion
_D5 = np.array([-1.0, 5.0, -10.0, 10.0, -5.0, 1.0])


def _q(order):
    if order not in (4, 6):
        raise WrongOrder(f"order must be 4 or 6, got {order}")
    return order // 2


def closure_width(order):
    """Smallest admissible number of grid points for an operator family."""
    return {4: 8, 6: 12}[order]


def _check_n(order, n):
    if n < closure_width(order):
        raise GridTooSmall(f"order {order} needs n >= {closure_width(order)}, got {n}")


@dataclass(frozen=True)
class NormWeights:
    order: int
    n: int
    h: float
    w: np.ndarray

    def inner(self, u, v):
        return self.h * np.sum(self.w * u * v)


def make_norm(order, n, h=None):
    """Diagonal SBP norm weights; interior weights are exactly one."""
    _q(order)
    _check_n(order, n)
    h = 1.0 / (n - 1) if h is None else float(h)
    bw = getattr(_tables, f"NORM_{order}")
    w = np.ones(n)
    w[:len(bw)] = bw
    w[n - len(bw):] = bw[::-1]
    return NormWeights(order, n, h, w)


def _along(fn, v, axis):
    """Apply fn to v with `axis` moved to the front, then move it back."""
    v = np.moveaxis(np.asarray(v, dtype=float), axis, 0)
    return np.moveaxis(fn(v), 0, axis)


class FirstDerivOp:
    """Diagonal-norm first derivative D = H^-1 Q."""

    def __init__(self, order, n, h=None):
        self.order = order
        self.q = _q(order)
        _check_n(order, n)
        self.n = n
        self.h = 1.0 / (n - 1) if h is None else float(h)
        self.norm = make_norm(order, n, self.h)
        B = getattr(_tables, f"D1_BOUNDARY_{order}")
        st = getattr(_tables, f"D1_INTERIOR_{order}")
        s = len(st) // 2
        r, c = B.shape
        A = sps.lil_matrix((n, n))
        for i in range(r, n - r):
            for k, a in enumerate(st):
                if a != 0.0:
                    A[i, i - s + k] = a
        for i in range(r):
            for j in range(c):
                if B[i, j] != 0.0:
                    A[i, j] = B[i, j]
                    A[n - 1 - i, n - 1 - j] = -B[i, j]
        self.matrix = (A.tocsr() / self.h)
        self.boundary_rows = r

    def apply(self, v, axis=0):
        v = np.asarray(v, dtype=float)
        if v.shape[axis] != self.n:
            raise LengthMismatch(f"expected {self.n} points along axis {axis}, got {v.shape[axis]}")

        def f(x):
            sh = x.shape
            return (self.matrix @ x.reshape(sh[0], -1)).reshape(sh)
        return _along(f, v, axis)

    def apply_transpose(self, v, axis=0):
        def f(x):
            sh = x.shape
            return (self.matrix.T @ x.reshape(sh[0], -1)).reshape(sh)
        return _along(f, v, axis)

    def dense(self):
        return self.matrix.toarray()


class SecondDerivOp:
    """Variable-coefficient second derivative, optionally with ghost points.

    ghost = (left, right) says which ends carry one ghost value; the input
    vector then has n + left + right entries, ghosts first/last.  The ghost
    ends use the converted boundary derivative b~ = b + BETA h^4 d5.
    """

    def __init__(self, order, n, h=None, ghost=(False, False)):
        self.order = order
        self.q = _q(order)
        _check_n(order, n)
        self.n = n
        self.h = 1.0 / (n - 1) if h is None else float(h)
        self.norm = make_norm(order, n, self.h)
        self.ghost = (bool(ghost[0]), bool(ghost[1]))
        self.blocks = getattr(_tables, f"G_BOUNDARY_{order}")
        self.template = getattr(_tables, f"G_INTERIOR_{order}")
        self.b = _tables.BOUNDARY_DERIV
        self.K, self.m = self.blocks.shape[0], self.blocks.shape[1]
        self.s = self.template.shape[0] // 2

    @property
    def n_ext(self):
        return self.n + self.ghost[0] + self.ghost[1]

    # -- pieces ---------------------------------------------------------
    def stiffness(self, g, v):
        """M(g) v in index units (no h scaling); g, v have length n on axis 0."""
        n, K, m, s = self.n, self.K, self.m, self.s
        g = np.asarray(g, dtype=float)
        v = np.asarray(v, dtype=float)
        shape = np.broadcast_shapes(g.shape[1:], v.shape[1:])
        out = np.zeros((n,) + shape)
        B = self.blocks
        Bv = np.tensordot(B, v[:m], axes=([2], [0]))
        out[:m] += np.sum(g[:K, None] * Bv, axis=0)
        Bv = np.tensordot(B, v[::-1][:m], axes=([2], [0]))
        out[n - m:] += np.sum(g[::-1][:K, None] * Bv, axis=0)[::-1]
        c = n - 2 * K
        if c > 0:
            T = self.template
            gi = g[K:n - K]
            for a in range(2 * s + 1):
                acc = 0.0
                for bb in range(2 * s + 1):
                    if T[a, bb] != 0.0:
                        acc = acc + T[a, bb] * v[K - s + bb:K - s + bb + c]
                out[K - s + a:K - s + a + c] += gi * acc
        return out

    def split(self, v):
        """Return (left ghost, interior values, right ghost); ghosts may be None."""
        lo = 1 if self.ghost[0] else 0
        gl = v[0] if self.ghost[0] else None
        gr = v[-1] if self.ghost[1] else None
        return gl, v[lo:lo + self.n], gr

    def boundary_derivative(self, v, side, axis=0):
        """b_1 v (side='left') or b_n v (side='right'), ghost-aware."""
        v = np.moveaxis(np.asarray(v, dtype=float), axis, 0)
        if v.shape[0] != self.n_ext:
            raise LengthMismatch(f"expected {self.n_ext} values, got {v.shape[0]}")
        gl, vi, gr = self.split(v)
        b = self.b
        if side == "left":
            d = np.tensordot(b, vi[:5], axes=(0, 0))
            if gl is not None:
                d = d + BETA * (_D5[0] * gl + np.tensordot(_D5[1:], vi[:5], axes=(0, 0)))
            return d / self.h
        d = -np.tensordot(b, vi[::-1][:5], axes=(0, 0))
        if gr is not None:
            d = d - BETA * (_D5[0] * gr + np.tensordot(_D5[1:], vi[::-1][:5], axes=(0, 0)))
        return d / self.h

    def apply(self, g, v, axis=0):
        """(G(g) v) along `axis`; g has n entries there, v has n_ext."""
        g = np.moveaxis(np.asarray(g, dtype=float), axis, 0)
        v = np.moveaxis(np.asarray(v, dtype=float), axis, 0)
        if g.shape[0] != self.n:
            raise LengthMismatch(f"coefficient needs {self.n} values, got {g.shape[0]}")
        if v.shape[0] != self.n_ext:
            raise LengthMismatch(f"expected {self.n_ext} values, got {v.shape[0]}")
        _, vi, _ = self.split(v)
        out = -self.stiffness(g, vi)
        out[0] = out[0] - g[0] * self.boundary_derivative(v, "left") * self.h
        out[-1] = out[-1] + g[-1] * self.boundary_derivative(v, "right") * self.h
        w = self.norm.w.reshape((-1,) + (1,) * (out.ndim - 1))
        out = out / (w * self.h ** 2)
        return np.moveaxis(out, 0, axis)

    def triplets(self):
        """(i, l, k, val) with (G(g) v)_i = sum val * g_k * v_l, l indexing v_ext.

        Found by probing G(e_k) on the columns that can reach row i: a band
        around k plus the boundary closures.
        """
        n, ne = self.n, self.n_ext
        lo = 1 if self.ghost[0] else 0
        w = 2 * self.s + 1
        edge = self.m + 2
        out = []
        E = np.eye(ne)
        for k in range(n):
            cols = set(range(max(0, k + lo - w), min(ne, k + lo + w + 1)))
            if k < self.K + w or k >= n - self.K - w:
                cols |= set(range(min(ne, edge))) | set(range(max(0, ne - edge), ne))
            cols = np.array(sorted(cols))
            g = np.zeros(n)
            g[k] = 1.0
            blk = self.apply(g[:, None], E[:, cols])
            i, j = np.nonzero(blk)
            out.append(np.column_stack([i, cols[j], np.full(len(i), k), blk[i, j]]))
        t = np.vstack(out)
        return t[:, 0].astype(int), t[:, 1].astype(int), t[:, 2].astype(int), t[:, 3]

    def ghost_coefficient(self, side):
        """Weight of the ghost value in the boundary row, per unit coefficient."""
        return BETA / (self.norm.w[0] * self.h ** 2)

    def bilinear(self, g, u, v):
        """S_g(u, v) = u^T M(g) v / h for non-ghost vectors u, v."""
        return float(np.sum(u * self.stiffness(g, v)) / self.h)

    def dense(self, g):
        """Dense matrix of v_ext -> G(g) v (diagnostic sizes only)."""
        E = np.eye(self.n_ext)
        return np.column_stack([self.apply(g, E[:, j]) for j in range(self.n_ext)])

    def stiffness_dense(self, g):
        E = np.eye(self.n)
        return np.column_stack([self.stiffness(g, E[:, j]) for j in range(self.n)])


def convert_to_ghost(G, order=6, ends=(True, True)):
    """Ghost-point variant of a non-ghost operator.

    Only the boundary rows change: row 1 becomes
    (G v)_1 - (BETA h^4 / (w_1 h)) g_1 d5 v, mirrored at the right end.
    """
    if G.order != order:
        raise WrongOrder(f"conversion requested for order {order}, operator has order {G.order}")
    if any(G.ghost):
        raise WrongOrder("operator already uses ghost points")
    return SecondDerivOp(G.order, G.n, G.h, ghost=ends)


def boundary_derivative(op, v, side="left"):
    """Boundary derivative of op's family applied to v."""
    return op.boundary_derivative(v, side)


def operator_set(order, n, h=None):
    """Convenience bundle (norm, D, G, G~) for one order and size."""
    G = SecondDerivOp(order, n, h)
    return {
        "norm": make_norm(order, n, h),
        "D": FirstDerivOp(order, n, h),
        "G": G,
        "G_ghost": convert_to_ghost(G, order),
    }
