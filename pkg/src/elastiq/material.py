"""Isotropic material fields and their curvilinear tensors N_jk."""
from dataclasses import dataclass

import numpy as np

from .errors import IndefiniteTensor


@dataclass(frozen=True)
class MaterialField:
    """Density and Lame parameters as functions of physical (x, y)."""
    name: str
    rho: object
    mu: object
    lam: object

    def sample(self, x, y):
        shape = np.shape(x)
        f = lambda g: np.broadcast_to(np.asarray(g(x, y), dtype=float), shape).copy()
        return f(self.rho), f(self.mu), f(self.lam)


def constant(rho, mu, lam):
    return MaterialField(f"constant({rho},{mu},{lam})",
                         lambda x, y: rho + 0.0 * x, lambda x, y: mu + 0.0 * x,
                         lambda x, y: lam + 0.0 * x)


def smooth_medium():
    """Smoothly varying medium used with the manufactured solution."""
    return MaterialField(
        "smooth",
        lambda x, y: 2 + np.sin(x + 0.3) * np.sin(y - 0.2),
        lambda x, y: 3 + np.sin(3 * x + 0.1) * np.sin(y),
        lambda x, y: 21 + np.cos(x + 0.1) * np.sin(3 * y) ** 2,
    )


def layered_fine():
    """Upper medium of the energy test."""
    return MaterialField(
        "layered-fine",
        lambda x, y: 4 + np.sin(x + 0.3) * np.sin(y - 0.2),
        lambda x, y: 3 + np.sin(3 * x + 0.1) * np.sin(y),
        lambda x, y: 15 + np.cos(x + 0.1) * np.sin(3 * y) ** 2,
    )


def layered_coarse():
    """Lower medium of the energy test."""
    return MaterialField(
        "layered-coarse",
        lambda x, y: 2 + np.sin(4 * x + 0.3) * np.sin(y - 0.2),
        lambda x, y: 3 + np.sin(3 * x + 0.1) * np.sin(2 * y),
        lambda x, y: 21 + np.cos(x + 0.1) * np.sin(3 * y) ** 2,
    )


def cartesian_blocks(mu, lam):
    """M[i, l, a, b]: Cartesian coefficient blocks of the isotropic law."""
    mu = np.asarray(mu, dtype=float)
    lam = np.asarray(lam, dtype=float)
    z = np.zeros_like(mu)
    p = 2 * mu + lam
    M = np.empty((2, 2, 2, 2) + mu.shape)
    M[0, 0] = [[p, z], [z, mu]]
    M[0, 1] = [[z, lam], [mu, z]]
    M[1, 0] = [[z, mu], [lam, z]]
    M[1, 1] = [[mu, z], [z, p]]
    return M


@dataclass
class MaterialTensors:
    """Per-node curvilinear tensors: N[j, k, a, b] multiplies d/dr_k inside d/dr_j."""
    N: np.ndarray
    M: np.ndarray
    rho: np.ndarray
    mu: np.ndarray
    lam: np.ndarray
    J: np.ndarray

    @property
    def rhoJ(self):
        return self.rho * self.J


def assemble_tensors(material, block):
    """N_jk = J sum_{i,l} xi_ij M_il xi_lk at every node of the block."""
    rho, mu, lam = material.sample(block.x, block.y)
    if np.any(rho <= 0) or np.any(mu <= 0) or np.any(lam < 0):
        raise ValueError(f"material {material.name} is not admissible on this block")
    xi = block.metrics.xi
    J = block.metrics.J
    M = cartesian_blocks(mu, lam)
    N = J * np.einsum("ij...,ilab...,lk...->jkab...", xi, M, xi)
    # enforce the exact transpose relation lost to rounding
    N[1, 0] = np.swapaxes(N[0, 1], 0, 1)
    for k in (0, 1):
        a, b, d = N[k, k, 0, 0], N[k, k, 0, 1], N[k, k, 1, 1]
        bad = np.argwhere(~((a > 0) & (a * d - b * b > 0)))
        if bad.size:
            raise IndefiniteTensor(tuple(int(v) for v in bad[0]))
    return MaterialTensors(N, M, rho, mu, lam, J)


def _max_eig_2x2(a, b, c, d):
    """Largest eigenvalue of [[a, b], [c, d]] with real spectrum (closed form)."""
    half = 0.5 * (a + d)
    disc = np.sqrt(np.maximum(0.25 * (a - d) ** 2 + b * c, 0.0))
    return half + disc


def local_speed_matrix(tensors, node):
    """(1/rho) [[tr N11, tr N12], [tr N21, tr N22]] at node (i, j)."""
    i, j = node
    tr = np.trace(tensors.N[:, :, :, :, i, j], axis1=2, axis2=3)
    return tr / tensors.rho[i, j]


def zeta_max(tensors):
    """Maximum over nodes of the largest eigenvalue of the local speed matrix."""
    tr = np.trace(tensors.N, axis1=2, axis2=3) / tensors.rho
    return float(np.max(_max_eig_2x2(tr[0, 0], tr[0, 1], tr[1, 0], tr[1, 1])))
