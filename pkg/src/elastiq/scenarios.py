"""Builders for the shipped two-block configurations."""
import numpy as np

from . import material as mat
from .analytic import ManufacturedCase, stoneley_field
from .discretization import Problem, TwoBlock
from .grid import BlockGrid, ReferenceGrid, rectangle, stoneley_coarse, stoneley_fine, topography_coarse, topography_fine


def topography_grids(n1c):
    """Coarse n1c x (n1c+1)/2 and fine (2 n1c - 1) x n1c blocks (1:2 in both directions)."""
    if n1c % 2 == 0:
        raise ValueError(f"n1_coarse must be odd for the topography grids, got {n1c}")
    n2c = (n1c + 1) // 2
    cg = BlockGrid(ReferenceGrid(n1c, n2c), topography_coarse(), "coarse")
    fg = BlockGrid(ReferenceGrid(2 * n1c - 1, 2 * n2c - 1), topography_fine(), "fine")
    return cg, fg


def manufactured(order, n1c):
    case = ManufacturedCase()
    cg, fg = topography_grids(n1c)
    cached = {g.side: (g.x, g.y, case.forcing_on(g.x, g.y)) for g in (cg, fg)}

    def forcing(side, x, y, t):
        cx, cy, F = cached[side]
        if x is cx and y is cy:
            return F(t)
        return case.forcing(x, y, t)

    prob = Problem(
        displacement=lambda side, x, y, t: case.displacement(x, y, t),
        forcing=forcing,
        top_traction=case.traction,
        velocity=lambda side, x, y, t: case.velocity(x, y, t),
    )
    return TwoBlock(cg, fg, case.material, case.material, order, prob), case


def stoneley(order, n, mode):
    """Flat half-planes, one wavelength wide, exact Dirichlet data everywhere."""
    cg = BlockGrid(ReferenceGrid(n, n), stoneley_coarse(), "coarse")
    fg = BlockGrid(ReferenceGrid(2 * n - 1, 2 * n - 1), stoneley_fine(), "fine")
    p = mode.params
    mc = mat.constant(p.rho_c, p.mu_c, p.lam_c)
    mf = mat.constant(p.rho_f, p.mu_f, p.lam_f)

    def vel(side, x, y, t, d=1e-4):
        # only used for diagnostics; centered difference of the exact field
        return (stoneley_field(mode, x, y, t + d, side) - stoneley_field(mode, x, y, t - d, side)) / (2 * d)
    prob = Problem(displacement=lambda side, x, y, t: stoneley_field(mode, x, y, t, side), velocity=vel)
    return TwoBlock(cg, fg, mc, mf, order, prob)


def energy(order, n1c):
    """Layered media on the topography domain, free top surface, no forcing."""
    cg, fg = topography_grids(n1c)
    zero = lambda x, y, t, nx, ny: np.zeros((2,) + np.shape(x))
    prob = Problem(top_traction=zero)
    return TwoBlock(cg, fg, mat.layered_coarse(), mat.layered_fine(), order, prob)


def cartesian(order, n1c, coarse=(1.0, 1.0, 1.0), fine=(1.0, 1.0, 1.0), height=0.5):
    """Two stacked rectangles with constant (rho, mu, lam); interface at y = 0.

    The zero boundary data is passed explicitly so the corner columns of the
    interface matrix keep their plain form (used for the stencil analysis).
    """
    n2c = (n1c + 1) // 2
    cg = BlockGrid(ReferenceGrid(n1c, n2c), rectangle(1.0, height, 0.0, -height), "coarse")
    fg = BlockGrid(ReferenceGrid(2 * n1c - 1, 2 * n2c - 1), rectangle(1.0, height, 0.0, 0.0), "fine")
    zero = lambda side, x, y, t: np.zeros((2,) + np.shape(x))
    return TwoBlock(cg, fg, mat.constant(*coarse), mat.constant(*fine), order, Problem(displacement=zero))
