"""Spatial semidiscretization of the two-block elastic problem.

The coarse block (spacing 2h) sits below the interface and carries one ghost
row above its top edge.  The fine block (spacing h) has no interface ghost
row; its interface values come from the coarse ones through the scaled
interpolation, and the coarse ghost row is fixed by continuity of traction.
A second, independent ghost row on the fine top edge is used only when that
edge is a free surface / traction boundary.

Field arrays have shape (2, n1, n2 + g) with g = 1 when the block carries a
top ghost row.  Index order is (component, r, s).
"""
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sps

from .errors import GhostRowMissing, SingularInterfaceMatrix
from .interp import build_op_pair, build_scaled
from .material import assemble_tensors
from .sbp_core import FirstDerivOp, SecondDerivOp, make_norm

# largest block (rows of L) that is assembled as a sparse matrix
SPARSE_ROWS = 500_000


@dataclass
class Problem:
    """Data of one simulation.

    displacement(side, x, y, t) gives Dirichlet data (None: homogeneous);
    forcing(side, x, y, t) is the volume force per unit volume (None: none);
    top_traction(x, y, t, nx, ny) returns sigma n on the fine top edge and
    turns that edge into a traction boundary (None: Dirichlet).
    """
    displacement: object = None
    forcing: object = None
    top_traction: object = None
    velocity: object = None


class Block:
    """Operators, tensors and bookkeeping for one block."""

    def __init__(self, grid, material, order, ghost_top):
        self.grid = grid
        self.side = grid.side
        self.order = order
        self.ghost_top = bool(ghost_top)
        n1, n2 = grid.shape
        self.n1, self.n2 = n1, n2
        self.h1, self.h2 = grid.h1, grid.h2
        self.tensors = assemble_tensors(material, grid)
        self.N = self.tensors.N
        self.nz = np.array([[[[np.any(self.N[j, k, a, b] != 0) for b in (0, 1)] for a in (0, 1)]
                             for k in (0, 1)] for j in (0, 1)])
        self.D1 = FirstDerivOp(order, n1, self.h1)
        self.D2 = FirstDerivOp(order, n2, self.h2)
        self.G1 = SecondDerivOp(order, n1, self.h1)
        self.G2 = SecondDerivOp(order, n2, self.h2, ghost=(False, self.ghost_top))
        self.wx = make_norm(order, n1).w
        self.wy = make_norm(order, n2).w
        self.J = self.tensors.J
        self.rhoJ = self.tensors.rhoJ
        self.lam = grid.metrics.lam
        # thin strip next to the interface for cheap interface-row evaluation
        w = 2 * self.G2.m
        self.strip = w if n2 >= w + 2 else None
        if self.strip:
            gh = self.ghost_top and self.side == "coarse"
            self.D2s = FirstDerivOp(order, w, self.h2)
            self.G2s = SecondDerivOp(order, w, self.h2, ghost=(False, gh))
        # small blocks get L as one sparse matrix: far less per-call overhead
        self.Lmat = self.assemble_L() if 2 * n1 * n2 <= SPARSE_ROWS else None
        self._iface_rows()
        self.dirichlet_mask = np.zeros((n1, n2), dtype=bool)
        self.dirichlet_mask[0, :] = True
        self.dirichlet_mask[-1, :] = True
        if self.side == "coarse":
            self.dirichlet_mask[:, 0] = True
        elif not self.ghost_top:
            self.dirichlet_mask[:, -1] = True

    @property
    def interface_row(self):
        return self.grid.interface_row

    @property
    def field_shape(self):
        return (2, self.n1, self.n2 + int(self.ghost_top))

    def zeros(self):
        return np.zeros(self.field_shape)

    def _L(self, u, N, G2, D2, n2):
        """Four-term operator on a (2, n1, n2 [+ghost]) array with tensors N."""
        ui = u[:, :, :n2]
        out = np.zeros((2, self.n1, n2))
        nz = self.nz
        for a in (0, 1):
            for b in (0, 1):
                if nz[0, 0, a, b]:
                    out[a] += self.G1.apply(N[0, 0, a, b], ui[b], axis=0)
                if nz[1, 1, a, b]:
                    out[a] += G2.apply(N[1, 1, a, b], u[b], axis=1)
        d1 = self.D1.apply(ui, axis=1)
        d2 = D2.apply(ui, axis=2)
        f12 = np.zeros_like(ui)
        f21 = np.zeros_like(ui)
        for a in (0, 1):
            for b in (0, 1):
                if nz[0, 1, a, b]:
                    f12[a] += N[0, 1, a, b] * d2[b]
                if nz[1, 0, a, b]:
                    f21[a] += N[1, 0, a, b] * d1[b]
        out += self.D1.apply(f12, axis=1)
        out += D2.apply(f21, axis=2)
        return out

    def assemble_L(self, N=None, G2=None, D2=None):
        """CSR matrix of u.ravel() -> (L u).ravel() for (2, n1, n2 [+ghost]) fields.

        With N, G2, D2 given, the same for a strip of the block (see _L).
        """
        if N is None:
            N, G2, D2 = self.N, self.G2, self.D2
        n1, n2 = self.n1, G2.n
        ne = G2.n_ext
        rows, cols, vals = [], [], []
        j = np.arange(n2)
        i = np.arange(n1)
        t1 = self.G1.triplets()
        t2 = G2.triplets()
        for a in (0, 1):
            for b in (0, 1):
                if self.nz[0, 0, a, b]:
                    r, l, k, v = t1
                    g = N[0, 0, a, b]
                    rows.append((a * n1 + r[:, None]) * n2 + j)
                    cols.append((b * n1 + l[:, None]) * ne + j)
                    vals.append(v[:, None] * g[k, :])
                if self.nz[1, 1, a, b]:
                    r, l, k, v = t2
                    g = N[1, 1, a, b]
                    rows.append((a * n1 + i[:, None]) * n2 + r)
                    cols.append((b * n1 + i[:, None]) * ne + l)
                    vals.append(v * g[:, k])
        L = sps.coo_matrix((np.concatenate([x.ravel() for x in vals]),
                            (np.concatenate([x.ravel() for x in rows]),
                             np.concatenate([x.ravel() for x in cols]))),
                           shape=(2 * n1 * n2, 2 * n1 * ne)).tocsr()
        # mixed terms D1 N01 D2 and D2 N10 D1
        D1 = sps.kron(self.D1.matrix, sps.identity(n2), format="csr")
        D2 = sps.kron(sps.identity(n1), D2.matrix, format="csr")
        keep = sps.identity(n1 * ne, format="csr")[(i[:, None] * ne + j).ravel()]
        blocks = [[None, None], [None, None]]
        for a in (0, 1):
            for b in (0, 1):
                acc = sps.csr_matrix((n1 * n2, n1 * n2))
                if self.nz[0, 1, a, b]:
                    acc = acc + D1 @ sps.diags(N[0, 1, a, b].ravel()) @ D2
                if self.nz[1, 0, a, b]:
                    acc = acc + D2 @ sps.diags(N[1, 0, a, b].ravel()) @ D1
                blocks[a][b] = acc @ keep
        return (L + sps.bmat(blocks, format="csr")).tocsr()

    def check_field(self, u):
        if u.shape != self.field_shape:
            if self.ghost_top and u.shape == (2, self.n1, self.n2):
                raise GhostRowMissing(f"{self.side} field lacks its ghost row")
            raise ValueError(f"{self.side} field has shape {u.shape}, expected {self.field_shape}")

    def apply_L(self, u):
        self.check_field(u)
        if self.Lmat is not None:
            return (self.Lmat @ u.reshape(-1)).reshape(2, self.n1, self.n2)
        return self._L(u, self.N, self.G2, self.D2, self.n2)

    def _iface_rows(self):
        """Sparse rows of L on the interface, acting on the strip next to it."""
        n1, n2 = self.n1, self.n2
        if self.strip is None:
            self._Lif = None
            return
        w = self.strip
        if self.side == "coarse":
            self._strip_cols = slice(n2 - w, None)
            A = self.assemble_L(self.N[..., n2 - w:], self.G2s, self.D2s)
            j = w - 1
        else:
            self._strip_cols = slice(0, w)
            A = self.assemble_L(self.N[..., :w], self.G2s, self.D2s)
            j = 0
        pick = (np.arange(2)[:, None] * n1 + np.arange(n1)) * w + j
        self._Lif = A[pick.ravel()]

    def L_interface(self, u):
        """L u restricted to the interface row, evaluated on a thin strip."""
        self.check_field(u)
        if self._Lif is not None:
            v = np.ascontiguousarray(u[:, :, self._strip_cols]).reshape(-1)
            return (self._Lif @ v).reshape(2, self.n1)
        if self.strip is None:
            return self.apply_L(u)[:, :, self.interface_row]
        w = self.strip
        if self.side == "coarse":
            sl = slice(self.n2 - w, None)
            out = self._L(u[:, :, sl], self.N[..., self.n2 - w:], self.G2s, self.D2s, w)
            return out[:, :, -1]
        out = self._L(u[:, :, :w], self.N[..., :w], self.G2s, self.D2s, w)
        return out[:, :, 0]

    def traction(self, u, edge):
        """N21 D1 u + N22 b u on the top ('top') or bottom ('bottom') edge."""
        self.check_field(u)
        j = self.n2 - 1 if edge == "top" else 0
        side = "right" if edge == "top" else "left"
        d1 = self.D1.apply(u[:, :, j], axis=1)
        bd = self.G2.boundary_derivative(u, side, axis=2)
        A = np.zeros((2, self.n1))
        for a in (0, 1):
            for b in (0, 1):
                A[a] += self.N[1, 0, a, b, :, j] * d1[b] + self.N[1, 1, a, b, :, j] * bd[b]
        return A

    def top_ghost_weight(self):
        """Coefficient of the top ghost value in the top boundary derivative."""
        E = np.zeros(self.n2 + 1)
        E[-1] = 1.0
        return float(self.G2.boundary_derivative(E, "right"))

    def S_apply(self, u):
        """g with S(v, u) = sum(v * g) for every v; S is the block's symmetric form."""
        ui = u[:, :, :self.n2]
        N = self.N
        h1, h2 = self.h1, self.h2
        W = self.wx[:, None] * self.wy[None, :]
        g = np.zeros((2, self.n1, self.n2))
        d1u, d2u = self.D1.apply(ui, axis=1), self.D2.apply(ui, axis=2)
        f12 = np.zeros_like(g)
        f21 = np.zeros_like(g)
        for a in (0, 1):
            for b in (0, 1):
                if self.nz[0, 0, a, b]:
                    g[a] += (h2 / h1) * self.wy[None, :] * self.G1.stiffness(N[0, 0, a, b], ui[b])
                if self.nz[1, 1, a, b]:
                    g[a] += (h1 / h2) * self.wx[:, None] * self.G2.stiffness(N[1, 1, a, b].T, ui[b].T).T
                if self.nz[0, 1, a, b]:
                    f12[a] += N[0, 1, a, b] * d2u[b]
                if self.nz[1, 0, a, b]:
                    f21[a] += N[1, 0, a, b] * d1u[b]
        g += h1 * h2 * (self.D1.apply_transpose(W * f12, axis=1) + self.D2.apply_transpose(W * f21, axis=2))
        return g

    def bilinear_S(self, v, u):
        """Symmetric positive semidefinite form S(v, u) of the block (no ghosts)."""
        return float(np.sum(v[:, :, :self.n2] * self.S_apply(u)))

    def inner(self, v, u):
        """(v, u) weighted by h1 h2 W J, no ghosts."""
        W = self.wx[:, None] * self.wy[None, :]
        return float(self.h1 * self.h2 * np.sum(W * self.J * v[:, :, :self.n2] * u[:, :, :self.n2]))


@dataclass
class InterfaceSystem:
    matrix: np.ndarray        # scaled, node-major component-interleaved
    lu: tuple
    scale: float

    def solve(self, rhs):
        # non-finite input passes through; the time loop's detector reports it
        return sla.lu_solve(self.lu, rhs, check_finite=False)


class TwoBlock:
    """Coupled coarse/fine semidiscretization."""

    def __init__(self, coarse_grid, fine_grid, mat_coarse, mat_fine, order, problem=None):
        if order not in (4, 6):
            raise ValueError(f"order must be 4 or 6, got {order}")
        if fine_grid.grid.n1 != 2 * coarse_grid.grid.n1 - 1:
            raise ValueError("fine interface must have 2*n1_coarse - 1 points")
        self.order = order
        self.q = order // 2
        self.problem = problem or Problem()
        traction_top = self.problem.top_traction is not None
        self.coarse = Block(coarse_grid, mat_coarse, order, ghost_top=True)
        self.fine = Block(fine_grid, mat_fine, order, ghost_top=traction_top)
        P, R = build_op_pair(self.q, coarse_grid.grid.n1)
        self.P, self.R = P, R
        self.coupling = build_scaled(P, R, fine_grid, coarse_grid)
        self.w1_fine = self.fine.wy[0]
        c, f = self.coarse, self.fine
        self._rhoJc = c.rhoJ[:, -1]
        self._rhoJf = f.rhoJ[:, 0]
        self._Jc = c.J[:, -1]
        self._Jf = f.J[:, 0]
        self._dir_iface = c.dirichlet_mask[:, -1]
        self._cache_boundary_coords()
        self.system = self.assemble_interface_system()

    # -- data helpers -------------------------------------------------------
    def _cache_boundary_coords(self):
        self._bnd = {}
        for blk in (self.coarse, self.fine):
            m = blk.dirichlet_mask
            self._bnd[blk.side] = (m, blk.grid.x[m], blk.grid.y[m])
        f = self.fine
        xi = f.grid.metrics.xi
        lam = f.lam[:, -1]
        self._top_normal = (xi[0, 1, :, -1] / lam, xi[1, 1, :, -1] / lam)
        self._top_jl = f.J[:, -1] * lam

    def forcing(self, side, t):
        if self.problem.forcing is None:
            return None
        blk = self.coarse if side == "coarse" else self.fine
        return self.problem.forcing(side, blk.grid.x, blk.grid.y, t)

    def exact(self, side, t):
        blk = self.coarse if side == "coarse" else self.fine
        return self.problem.displacement(side, blk.grid.x, blk.grid.y, t)

    # -- operators ------------------------------------------------------------
    def apply_L_coarse(self, c):
        return self.coarse.apply_L(c)

    def apply_L_fine(self, f):
        return self.fine.apply_L(f)

    def traction_coarse(self, c):
        return self.coarse.traction(c, "top")

    def traction_fine(self, f):
        return self.fine.traction(f, "bottom")

    def compute_eta(self, c, f, Fc=None, Ff=None):
        """eta = J_rho^f P((J_rho^c)^-1 (L~c + J F)|G) - (L f + J F)|G."""
        Lc = self.coarse.L_interface(c)
        Lf = self.fine.L_interface(f)
        if Fc is not None:
            Lc = Lc + self._Jc * Fc[:, :, -1]
        if Ff is not None:
            Lf = Lf + self._Jf * Ff[:, :, 0]
        ac = Lc / self._rhoJc
        if self.problem.displacement is None:
            # homogeneous Dirichlet nodes on the interface do not accelerate
            ac[:, self._dir_iface] = 0.0
        return self._rhoJf * self.coupling.interp(ac) - Lf

    def interface_residual(self, c, f, Fc=None, Ff=None):
        """Traction continuity residual at the coarse interface nodes."""
        eta = self.compute_eta(c, f, Fc, Ff)
        A2c = self.traction_coarse(c)
        A2f = self.traction_fine(f)
        cp = self.coupling
        h2w = self.fine.h2 * self.w1_fine
        return A2c / cp.jl_coarse - cp.restrict((A2f - h2w * eta) / cp.jl_fine)

    # -- interface system -----------------------------------------------------
    def _ghost_response(self, x):
        """Residual produced by ghost values x (2, n1c) with all else zero."""
        c = self.coarse.zeros()
        c[:, :, -1] = x
        return self.interface_residual(c, self.fine.zeros())

    def assemble_interface_system(self):
        """Probe the affine residual map with colored unit ghost vectors."""
        n = self.coarse.n1
        cp = self.coupling
        # columns i and k interact iff some residual row sees both
        foot = (np.abs(cp.Rs) @ np.abs(cp.Ps) > 0) | np.eye(n, dtype=bool)
        reach = (foot.astype(int) @ foot.T.astype(int)) > 0
        color = -np.ones(n, dtype=int)
        for i in range(n):
            used = set(color[reach[i]]) - {-1}
            k = 0
            while k in used:
                k += 1
            color[i] = k
        M = np.zeros((2 * n, 2 * n))
        for k in range(color.max() + 1):
            cols = np.nonzero(color == k)[0]
            for b in (0, 1):
                x = np.zeros((2, n))
                x[b, cols] = 1.0
                r = self._ghost_response(x)
                for i in cols:
                    rows = np.nonzero(foot[:, i])[0]
                    M[2 * rows, 2 * i + b] = r[0, rows]
                    M[2 * rows + 1, 2 * i + b] = r[1, rows]
        scale = self.coarse.h2
        M *= scale
        if np.any(np.diag(M) <= 0):
            raise SingularInterfaceMatrix("interface matrix has a non-positive diagonal entry")
        lu, piv = sla.lu_factor(M, check_finite=True)
        if np.min(np.abs(np.diag(lu))) <= 1e-12 * np.abs(M).max():
            raise SingularInterfaceMatrix("interface matrix is numerically singular")
        return InterfaceSystem(M, (lu, piv), scale)

    def solve_ghost(self, c, f, Fc=None, Ff=None):
        """Overwrite the coarse ghost row so traction continuity holds."""
        c[:, :, -1] = 0.0
        r0 = self.interface_residual(c, f, Fc, Ff)
        rhs = -self.system.scale * r0.T.reshape(-1)
        x = self.system.solve(rhs)
        c[:, :, -1] = x.reshape(-1, 2).T
        return c

    def enforce_interface_injection(self, c, f):
        f[:, :, 0] = self.coupling.interp(c[:, :, self.coarse.n2 - 1])
        return f

    # -- physical boundaries --------------------------------------------------
    def apply_dirichlet(self, u, side, t):
        m, x, y = self._bnd[side]
        view = u[:, :, :m.shape[1]]
        if self.problem.displacement is None:
            view[:, m] = 0.0
        else:
            view[:, m] = self.problem.displacement(side, x, y, t)
        return u

    def apply_traction_bc(self, f, t):
        """Fill the fine top ghost row from the traction condition at time t."""
        if not self.fine.ghost_top:
            return f
        blk = self.fine
        nx, ny = self._top_normal
        g = self.problem.top_traction(blk.grid.x[:, -1], blk.grid.y[:, -1], t, nx, ny) * self._top_jl
        f[:, :, -1] = 0.0
        A0 = blk.traction(f, "top")
        wgt = blk.top_ghost_weight()
        N22 = np.moveaxis(blk.N[1, 1, :, :, :, -1], -1, 0) * wgt      # (n1, 2, 2)
        f[:, :, -1] = np.linalg.solve(N22, (g - A0).T[:, :, None])[:, :, 0].T
        return f

    def enforce_all(self, c, f, t, Fc=None, Ff=None):
        """Dirichlet data, interface injection, top ghost and coarse ghost at time t."""
        self.apply_dirichlet(c, "coarse", t)
        self.enforce_interface_injection(c, f)
        self.apply_dirichlet(f, "fine", t)
        self.apply_traction_bc(f, t)
        self.solve_ghost(c, f, Fc, Ff)
        return c, f

    # -- L-hat for the energy and the scheme --------------------------------------
    def L_hat(self, c, f, Fc=None, Ff=None):
        """(L~c, L^f) with eta on the fine interface row, zero at Dirichlet nodes."""
        Lc = self.coarse.apply_L(c)
        Lf = self.fine.apply_L(f)
        Lf[:, :, 0] += self.compute_eta(c, f, Fc, Ff) + (0 if Ff is None else self._Jf * Ff[:, :, 0])
        if Fc is not None:
            Lc = Lc + self.coarse.J * Fc
        if Ff is not None:
            Lf[:, :, 1:] += self.fine.J[:, 1:] * Ff[:, :, 1:]
        Lc[:, self.coarse.dirichlet_mask] = 0.0
        Lf[:, self.fine.dirichlet_mask] = 0.0
        return Lc, Lf


# module-level function aliases ----------------------------------------------

def apply_L_coarse(disc, c):
    return disc.apply_L_coarse(c)


def apply_L_fine(disc, f):
    return disc.apply_L_fine(f)


def traction_coarse(disc, c):
    return disc.traction_coarse(c)


def traction_fine(disc, f):
    return disc.traction_fine(f)


def compute_eta(disc, c, f, Fc=None, Ff=None):
    return disc.compute_eta(c, f, Fc, Ff)


def assemble_interface_system(disc):
    return disc.assemble_interface_system()


def solve_ghost(disc, c, f, Fc=None, Ff=None):
    return disc.solve_ghost(c, f, Fc, Ff)


def enforce_interface_injection(disc, c, f):
    return disc.enforce_interface_injection(c, f)


def apply_dirichlet(disc, u, side, t):
    return disc.apply_dirichlet(u, side, t)


def apply_traction_bc(disc, f, t):
    return disc.apply_traction_bc(f, t)
