"""Fourth-order predictor-corrector time stepping and step-size selection."""
import logging
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import CapExceeded, NonFiniteState
from .material import zeta_max

log = logging.getLogger(__name__)

C_CFL = 1.3


@dataclass
class TimeLoopState:
    c_prev: np.ndarray
    f_prev: np.ndarray
    c: np.ndarray
    f: np.ndarray
    dt: float
    t: float
    step: int = 0
    F_prev: tuple = None        # forcing at t - dt (coarse, fine)
    F_now: tuple = None         # forcing at t


def _forcing(disc, t):
    if disc.problem.forcing is None:
        return None, None
    return disc.forcing("coarse", t), disc.forcing("fine", t)


def _rhs(blk, Lu, F):
    return Lu if F is None else Lu + blk.J * F


def step(state, disc):
    """Advance (u^{n-1}, u^n) to (u^n, u^{n+1}) with Algorithm 1."""
    dt = state.dt
    t1 = state.t + dt
    cb, fb = disc.coarse, disc.fine
    Fc0, Ff0 = state.F_now if state.F_now is not None else (None, None)
    Fc1, Ff1 = _forcing(disc, t1)
    c, f, cm, fm = state.c, state.f, state.c_prev, state.f_prev
    n2c, n2f = cb.n2, fb.n2

    # predictor
    cs = 2 * c - cm
    cs[:, :, :n2c] += dt * dt * _rhs(cb, cb.apply_L(c), Fc0) / cb.rhoJ
    fs = 2 * f - fm
    upd = dt * dt * _rhs(fb, fb.apply_L(f), Ff0) / fb.rhoJ
    fs[:, :, 1:n2f] += upd[:, :, 1:]
    disc.enforce_all(cs, fs, t1, Fc1, Ff1)

    # corrector
    ac = (cs - 2 * c + cm) / (dt * dt)
    af = (fs - 2 * f + fm) / (dt * dt)
    Ftt_c = Ftt_f = None
    if Fc1 is not None:
        Fcp, Ffp = state.F_prev
        Ftt_c = (Fc1 - 2 * Fc0 + Fcp) / (dt * dt)
        Ftt_f = (Ff1 - 2 * Ff0 + Ffp) / (dt * dt)
    k = dt ** 4 / 12.0
    cn = cs
    cn[:, :, :n2c] += k * _rhs(cb, cb.apply_L(ac), Ftt_c) / cb.rhoJ
    fn = fs
    upd = k * _rhs(fb, fb.apply_L(af), Ftt_f) / fb.rhoJ
    fn[:, :, 1:n2f] += upd[:, :, 1:]
    disc.enforce_all(cn, fn, t1, Fc1, Ff1)

    state.c_prev, state.f_prev = c, f
    state.c, state.f = cn, fn
    state.F_prev, state.F_now = state.F_now, (Fc1, Ff1)
    state.t = t1
    state.step += 1
    return state


def _velocity_problem(p):
    """Constraints satisfied by u_t: boundary data replaced by its rate, no forcing."""
    zero = lambda side, x, y, t: np.zeros((2,) + np.shape(x))
    disp = None
    if p.displacement is not None:
        disp = p.velocity if p.velocity is not None else zero
    top = None
    if p.top_traction is not None:
        g, e = p.top_traction, 1e-6
        top = lambda x, y, t, nx, ny: (g(x, y, t + e, nx, ny) - g(x, y, t - e, nx, ny)) / (2 * e)
    return replace(p, displacement=disp, forcing=None, top_traction=top)


def bootstrap(disc, dt, t0=0.0, u0=None, v0=None, exact=True):
    """Two starting levels.

    With exact=True the problem's displacement gives both levels; otherwise
    u0, v0 = ((c, f), (c, f)) arrays and a Taylor start is used.
    """
    cb, fb = disc.coarse, disc.fine
    if exact:
        levels = []
        for t in (t0 - dt, t0):
            c, f = cb.zeros(), fb.zeros()
            c[:, :, :cb.n2] = disc.exact("coarse", t)
            f[:, :, :fb.n2] = disc.exact("fine", t)
            Fc, Ff = _forcing(disc, t)
            disc.enforce_all(c, f, t, Fc, Ff)
            levels.append((c, f))
    else:
        (c0, f0), (vc, vf) = u0, v0
        c0, f0 = c0.copy(), f0.copy()
        disc.enforce_all(c0, f0, t0)
        Lc, Lf = disc.L_hat(c0, f0)
        vcx, vfx = vc.copy(), vf.copy()
        # the velocity carries the time derivative of the boundary data
        saved = disc.problem
        disc.problem = _velocity_problem(saved)
        try:
            disc.enforce_all(vcx, vfx, t0)
            Lvc, Lvf = disc.L_hat(vcx, vfx)
        finally:
            disc.problem = saved
        cm = c0 - dt * vcx
        fm = f0 - dt * vfx
        cm[:, :, :cb.n2] += dt ** 2 / 2 * Lc / cb.rhoJ - dt ** 3 / 6 * Lvc / cb.rhoJ
        fm[:, :, :fb.n2] += dt ** 2 / 2 * Lf / fb.rhoJ - dt ** 3 / 6 * Lvf / fb.rhoJ
        disc.enforce_all(cm, fm, t0 - dt)
        levels = [(cm, fm), (c0, f0)]
    (cm, fm), (c, f) = levels
    st = TimeLoopState(cm, fm, c, f, dt, t0)
    if disc.problem.forcing is not None:
        st.F_prev = _forcing(disc, t0 - dt)
        st.F_now = _forcing(disc, t0)
    return st


def compute_dt_approx(disc, cfl=C_CFL):
    """C_cfl * min over blocks of min(h1, h2) / sqrt(zeta_max)."""
    out = math.inf
    for blk in (disc.coarse, disc.fine):
        z = zeta_max(blk.tensors)
        out = min(out, min(blk.h1, blk.h2) / math.sqrt(z))
    return cfl * out


def landing_dt(T, dt_max):
    """Largest step <= dt_max that divides T into whole steps."""
    n = max(1, math.ceil(T / dt_max - 1e-12))
    return T / n, n


def assemble_Kbar(blk, cap=2 * 64 * 64):
    """Dense symmetric K-bar of one block restricted to its free (non-Dirichlet) nodes."""
    free = ~blk.dirichlet_mask
    idx = np.argwhere(free)
    n = 2 * len(idx)
    if n > cap:
        raise CapExceeded(f"{blk.side} block has {n} unknowns, cap is {cap}")
    S = np.zeros((n, n))
    for col in range(n):
        u = np.zeros((2, blk.n1, blk.n2))
        a, (i, j) = col % 2, idx[col // 2]
        u[a, i, j] = 1.0
        g = blk.S_apply(u)
        S[:, col] = g[:, free].T.reshape(-1)
    W = blk.wx[:, None] * blk.wy[None, :]
    d = np.repeat((blk.h1 * blk.h2 * W * blk.rhoJ)[free], 2)
    s = 1.0 / np.sqrt(d)
    return S * s[:, None] * s[None, :]


def compute_dt_exact(disc, cap=2 * 64 * 64, sym_tol=1e-10, psd_tol=1e-10):
    """2 sqrt(3) / sqrt(max eigenvalue of K-bar), minimized over the blocks."""
    best = math.inf
    info = {}
    for blk in (disc.coarse, disc.fine):
        K = assemble_Kbar(blk, cap)
        asym = float(np.abs(K - K.T).max())
        scale = max(1.0, float(np.abs(K).max()))
        ev = np.linalg.eigvalsh(0.5 * (K + K.T))
        if asym > sym_tol * scale:
            raise ValueError(f"K-bar of the {blk.side} block is not symmetric ({asym:.2e})")
        if ev[0] < -psd_tol * scale:
            raise ValueError(f"K-bar of the {blk.side} block is indefinite (min eigenvalue {ev[0]:.3e})")
        info[blk.side] = {"asym": asym, "min": float(ev[0]), "max": float(ev[-1])}
        best = min(best, 2 * math.sqrt(3.0) / math.sqrt(ev[-1]))
    return best, info


def run(disc, state, T, callback=None, check_every=50):
    """Step to time T (state.t + n dt == T), calling callback(state) after each step."""
    n = int(round((T - state.t) / state.dt))
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(n):
            step(state, disc)
            if callback is not None:
                callback(state)
            if (k + 1) % check_every == 0 or k == n - 1:
                if not (np.all(np.isfinite(state.c)) and np.all(np.isfinite(state.f))):
                    raise NonFiniteState(state.step)
            if (k + 1) % 500 == 0:
                log.info("step %d / %d, t = %.6f", k + 1, n, state.t)
    return state
