"""Reference grids, built-in curvilinear mappings and metric data for one block."""
from dataclasses import dataclass, field

import numpy as np

from .errors import GridTooSmall, NonPositiveJacobian, NotOnInterface

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class ReferenceGrid:
    """Uniform grid on [0,1]^2 with n1 points in r and n2 in s."""
    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 2 or self.n2 < 2:
            raise GridTooSmall(f"grid needs at least 2 points per direction, got {self.n1}x{self.n2}")

    @property
    def h1(self):
        return 1.0 / (self.n1 - 1)

    @property
    def h2(self):
        return 1.0 / (self.n2 - 1)

    def check_width(self, width):
        if min(self.n1, self.n2) < width:
            raise GridTooSmall(f"grid {self.n1}x{self.n2} is narrower than the closure width {width}")

    def nodes(self):
        r = np.linspace(0.0, 1.0, self.n1)
        s = np.linspace(0.0, 1.0, self.n2)
        return np.meshgrid(r, s, indexing="ij")


@dataclass(frozen=True)
class CurvilinearMapping:
    """Closed-form map (r,s) -> (x,y) with analytic partials.

    dmap returns (x_r, x_s, y_r, y_s).
    """
    name: str
    map: object
    dmap: object


def rectangle(lx=1.0, ly=1.0, x0=0.0, y0=0.0):
    def f(r, s):
        return x0 + lx * r, y0 + ly * s

    def df(r, s):
        one = np.ones_like(np.asarray(r, dtype=float) + np.asarray(s, dtype=float))
        return lx * one, 0.0 * one, 0.0 * one, ly * one
    return CurvilinearMapping(f"rectangle({lx},{ly},{x0},{y0})", f, df)


def _theta_i(r):
    return np.pi + 0.2 * np.sin(4 * np.pi * r), 0.8 * np.pi * np.cos(4 * np.pi * r)


def _bump(r, c, base):
    e = 0.2 * np.exp(-(r - c) ** 2 / 0.04)
    return base + e, e * (-2.0 * (r - c) / 0.04)


def _theta_b(r):
    return _bump(r, 0.6, 0.0)


def _theta_t(r):
    return _bump(r, 0.5, TWO_PI)


def _layer(lower, upper, name):
    def f(r, s):
        lo, _ = lower(r)
        up, _ = upper(r)
        return TWO_PI * r + 0.0 * s, s * up + (1 - s) * lo

    def df(r, s):
        lo, dlo = lower(r)
        up, dup = upper(r)
        one = np.ones_like(np.asarray(r, dtype=float) + np.asarray(s, dtype=float))
        return TWO_PI * one, 0.0 * one, s * dup + (1 - s) * dlo, (up - lo) * one
    return CurvilinearMapping(name, f, df)


def topography_coarse():
    """Lower block between the Gaussian bottom and the sinusoidal interface."""
    return _layer(_theta_b, _theta_i, "topography-coarse")


def topography_fine():
    """Upper block between the sinusoidal interface and the Gaussian top."""
    return _layer(_theta_i, _theta_t, "topography-fine")


def stoneley_coarse():
    return rectangle(TWO_PI, 4 * np.pi, 0.0, -4 * np.pi)


def stoneley_fine():
    return rectangle(TWO_PI, 4 * np.pi, 0.0, 0.0)


MAPPINGS = {
    "topography-coarse": topography_coarse,
    "topography-fine": topography_fine,
    "stoneley-coarse": stoneley_coarse,
    "stoneley-fine": stoneley_fine,
}


@dataclass
class MetricData:
    """xi[i, j] = d r_j / d x_i per node, Jacobian J, and the s-gradient norm."""
    xi: np.ndarray
    J: np.ndarray
    lam: np.ndarray            # |grad s| at every node
    interface_row: int

    @property
    def lam_interface(self):
        return self.lam[:, self.interface_row]


def build_metrics(mapping, grid, interface_row=None):
    """Evaluate the metric terms from the analytic partials of the map."""
    r, s = grid.nodes()
    xr, xs, yr, ys = (np.broadcast_to(np.asarray(a, dtype=float), r.shape).copy()
                      for a in mapping.dmap(r, s))
    J = xr * ys - xs * yr
    bad = np.argwhere(~(J > 0))
    if bad.size:
        raise NonPositiveJacobian(tuple(int(v) for v in bad[0]))
    xi = np.empty((2, 2) + r.shape)
    xi[0, 0] = ys / J      # r_x
    xi[1, 0] = -xs / J     # r_y
    xi[0, 1] = -yr / J     # s_x
    xi[1, 1] = xr / J      # s_y
    lam = np.hypot(xi[0, 1], xi[1, 1])
    row = grid.n2 - 1 if interface_row is None else interface_row
    return MetricData(xi, J, lam, row)


@dataclass
class BlockGrid:
    grid: ReferenceGrid
    mapping: CurvilinearMapping
    side: str
    metrics: MetricData = field(init=False)
    x: np.ndarray = field(init=False)
    y: np.ndarray = field(init=False)

    def __post_init__(self):
        if self.side not in ("coarse", "fine"):
            raise ValueError(f"side must be coarse or fine, got {self.side}")
        self.metrics = build_metrics(self.mapping, self.grid, self.interface_row)
        r, s = self.grid.nodes()
        x, y = self.mapping.map(r, s)
        self.x = np.broadcast_to(x, r.shape).astype(float)
        self.y = np.broadcast_to(y, r.shape).astype(float)

    @property
    def interface_row(self):
        return self.grid.n2 - 1 if self.side == "coarse" else 0

    @property
    def h1(self):
        return self.grid.h1

    @property
    def h2(self):
        return self.grid.h2

    @property
    def shape(self):
        return (self.grid.n1, self.grid.n2)


def outward_normal(block, node):
    """Unit outward normal of the block at an interface node.

    node is either an r-index on the interface row or an (i, j) pair.
    """
    if np.ndim(node) == 0:
        i, j = int(node), block.interface_row
    else:
        i, j = (int(v) for v in node)
    if j != block.interface_row or not 0 <= i < block.grid.n1:
        raise NotOnInterface(f"node ({i}, {j}) is not on the interface of the {block.side} block")
    m = block.metrics
    v = np.array([m.xi[0, 1, i, j], m.xi[1, 1, i, j]]) / m.lam[i, j]
    return v if block.side == "coarse" else -v
