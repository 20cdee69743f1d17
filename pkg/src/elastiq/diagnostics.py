"""Energy, error norms, convergence tables and interface-matrix analysis."""
import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceeded
from .interp import build_op_pair
from .sbp_core import BETA


def _kinetic(blk, du):
    W = blk.wx[:, None] * blk.wy[None, :]
    return blk.h1 * blk.h2 * float(np.sum(W * blk.rhoJ * du[:, :, :blk.n2] ** 2))


def discrete_energy(disc, old, new, dt, L_old=None, L_new=None):
    """E^{n+1/2} from the levels old = (c^n, f^n) and new = (c^{n+1}, f^{n+1}).

    L_old / L_new may pass in already computed L-hat pairs of the levels.
    """
    (c0, f0), (c1, f1) = old, new
    Lc0, Lf0 = L_old if L_old is not None else disc.L_hat(c0, f0)
    Lc1, Lf1 = L_new if L_new is not None else disc.L_hat(c1, f1)
    E = 0.0
    for blk, u0, u1, L0, L1 in ((disc.coarse, c0, c1, Lc0, Lc1), (disc.fine, f0, f1, Lf0, Lf1)):
        W = blk.wx[:, None] * blk.wy[None, :]
        E += _kinetic(blk, (u1 - u0) / dt)
        E += blk.bilinear_S(u1, u0)
        E -= dt * dt / 12.0 * blk.h1 * blk.h2 * float(np.sum(W * L1 * L0 / blk.rhoJ))
    return E


@dataclass
class EnergyReport:
    steps: list = field(default_factory=list)
    times: list = field(default_factory=list)
    energy: list = field(default_factory=list)

    def add(self, step, t, E):
        self.steps.append(step)
        self.times.append(t)
        self.energy.append(E)

    @property
    def drift(self):
        e = np.asarray(self.energy)
        return (e - e[0]) / e[0]

    def max_drift(self):
        return float(np.max(np.abs(self.drift))) if self.energy else 0.0


def l2_error(disc, c, f, t, exact=None, jacobian=True):
    """Combined weighted l2 error of both blocks against the exact solution.

    jacobian=True weights by h1 h2 W J (the physical-area inner product);
    jacobian=False drops J, i.e. measures the error in reference coordinates.
    """
    total = 0.0
    for blk, u in ((disc.coarse, c), (disc.fine, f)):
        ref = (exact or disc.exact)(blk.side, t)
        e = u[:, :, :blk.n2] - ref
        W = blk.wx[:, None] * blk.wy[None, :]
        if jacobian:
            W = W * blk.J
        total += blk.h1 * blk.h2 * float(np.sum(W * e * e))
    return math.sqrt(total)


@dataclass
class ConvergenceTable:
    n: list
    error: list
    rate: list


def convergence_rates(ns, errors):
    """rate_i = log2(e_{i-1} / e_i) for successive 1:2 refinements."""
    ns = list(ns)
    errors = [float(e) for e in errors]
    if len(ns) != len(errors):
        raise ValueError("ns and errors differ in length")
    rates = [float("nan")]
    for i in range(1, len(errors)):
        rates.append(math.log2(errors[i - 1] / errors[i]))
    return ConvergenceTable(ns, errors, rates)


# --- interface matrix analysis --------------------------------------------

def stencil_factor(q, n1_coarse):
    """M1 = R P: the part of the constant-coefficient interface matrix set by the stencils."""
    P, R = build_op_pair(q, n1_coarse)
    return R.matrix @ P.matrix


def extract_stencil_factor(disc, component=0):
    """Recover M1 from an assembled constant-coefficient Cartesian system.

    The scaled matrix is pref * M1 (x) d + (BETA/(alpha l2)) I (x) d with
    d = diag(mu_c, 2 mu_c + lam_c); the second term is removed and the
    first divided out.
    """
    cb, fb = disc.coarse, disc.fine
    M = disc.system.matrix[component::2, component::2]
    N22 = cb.N[1, 1, component, component, 0, -1]
    jl_c = disc.coupling.jl_coarse[0]
    diag_part = BETA * N22 / jl_c
    pref = (BETA * disc.fine.h2 * fb.wy[0] * fb.rhoJ[0, 0] / disc.coupling.jl_fine[0]
            * N22 / (cb.wy[-1] * cb.h2 * cb.rhoJ[0, -1]))
    return (M - diag_part * np.eye(M.shape[0])) / pref


def interface_spectrum(M1, mode="dominance", cap=1281):
    if M1.shape[0] > cap:
        raise CapExceeded(f"matrix of size {M1.shape[0]} exceeds the cap {cap}")
    if mode == "dominance":
        d = np.abs(np.diag(M1))
        off = np.abs(M1).sum(axis=1) - d
        offc = np.abs(M1).sum(axis=0) - d
        return {"row_margin": np.diag(M1) - off, "col_margin": np.diag(M1) - offc}
    if mode == "eigenvalues":
        ev = np.linalg.eigvals(M1)
        return {"eigenvalues": ev, "min_real": float(ev.real.min()), "max_real": float(ev.real.max()),
                "max_imag": float(np.abs(ev.imag).max())}
    raise ValueError(f"unknown mode {mode!r}")


# --- output -----------------------------------------------------------------

def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.16e" % v
    return str(v)


def write_csv(path, header, rows):
    """Comma separated, one header row, floats as %.16e, LF line endings."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_fmt(v) for v in r])
    return path


def write_energy_csv(path, report):
    rows = zip(report.steps, report.times, report.energy, report.drift)
    return write_csv(path, ["step", "t", "energy", "drift"], rows)


def write_convergence_csv(path, table, ref=None):
    """(n, error, rate); with ref, the reference-coordinate norm table is appended as two columns."""
    if ref is None:
        return write_csv(path, ["n", "error", "rate"], zip(table.n, table.error, table.rate))
    return write_csv(path, ["n", "error", "rate", "error_ref", "rate_ref"],
                     zip(table.n, table.error, table.rate, ref.error, ref.rate))
