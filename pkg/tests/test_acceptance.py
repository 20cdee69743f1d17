"""Acceptance criteria 1-8.

Each test prints one line, CRITERION k: PASS|FAIL plus the measured numbers,
then asserts. The long runs (4, 6, 8) take minutes.
"""
import time

import numpy as np
import pytest

from elastiq import analytic, cli, diagnostics as dg, scenarios
from elastiq import timestepper as ts
from elastiq.errors import ElastiqError, NonFiniteState
from elastiq.grid import BlockGrid, ReferenceGrid, rectangle
from elastiq.interp import adjoint_residual, build_op_pair, build_scaled, check_compatibility
from elastiq.sbp_core import BETA, FirstDerivOp, SecondDerivOp, convert_to_ghost, make_norm


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {k}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok
    return emit


def _within(err, ref, factor=3.0):
    return ref / factor <= err <= ref * factor


# --- 1 -----------------------------------------------------------------------

def test_criterion_1_sbp_identities(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(1)
    worst = {"dx": 0.0, "dxx_gp": 0.0, "dxx": 0.0}
    for order in (4, 6):
        for n in (16, 31, 64):
            D = FirstDerivOp(order, n)
            H = D.norm
            Gs = {"dxx": SecondDerivOp(order, n), "dxx_gp": SecondDerivOp(order, n, ghost=(True, True))}
            for _ in range(100):
                u, v = rng.standard_normal((2, n))
                # (u, Dv)_H + (Du, v)_H = u_n v_n - u_1 v_1; residuals are relative to
                # the magnitude of the summed terms, since single probes can cancel
                Du, Dv = D.apply(u), D.apply(v)
                r = H.inner(u, Dv) + H.inner(Du, v) - (u[-1] * v[-1] - u[0] * v[0])
                scale = H.inner(np.abs(u), np.abs(Dv)) + H.inner(np.abs(Du), np.abs(v))
                worst["dx"] = max(worst["dx"], abs(r) / scale)
                g = rng.uniform(0.5, 2.0, n)
                for key, G in Gs.items():
                    w = rng.standard_normal(G.n_ext)
                    _, wi, _ = G.split(w)
                    Gw = G.apply(g, w)
                    lhs = H.inner(u, Gw)
                    rhs = (-G.bilinear(g, u, wi) - g[0] * u[0] * G.boundary_derivative(w, "left")
                           + g[-1] * u[-1] * G.boundary_derivative(w, "right"))
                    worst[key] = max(worst[key], abs(lhs - rhs) / H.inner(np.abs(u), np.abs(Gw)))
    elapsed = time.perf_counter() - t0
    ok = max(worst.values()) < 1e-12 and elapsed < 5.0
    report(1, ok, " ".join(f"{k}={v:.2e}" for k, v in worst.items()) + f" time={elapsed:.2f}s")
    assert ok


# --- 2 -----------------------------------------------------------------------

def test_criterion_2_ghost_conversion(report):
    t0 = time.perf_counter()
    errs = []
    for order in (4, 6):
        n = 30
        G = SecondDerivOp(order, n)
        Gg = convert_to_ghost(G, order)
        h = Gg.h
        xe = np.linspace(-h, 1 + h, n + 2)
        b_err = max(abs(Gg.boundary_derivative(xe ** p, "left") - float(p == 1)) for p in range(5))
        g = np.random.default_rng(3).uniform(1.0, 2.0, n)
        A, Ag = G.dense(g), Gg.dense(g)
        interior_same = np.array_equal(Ag[1:-1, 1:-1], A[1:-1]) or np.abs(Ag[1:-1, 1:-1] - A[1:-1]).max() < 1e-12
        w1 = 13649 / 43200 if order == 6 else G.norm.w[0]
        coef = Gg.ghost_coefficient("left")
        coef_err = abs(coef - BETA / (w1 * h * h)) / coef
        errs.append((order, b_err, interior_same, coef_err))
    elapsed = time.perf_counter() - t0
    ok = all(b < 1e-10 and same and c < 1e-14 for _, b, same, c in errs) and elapsed < 1.0
    ok = ok and make_norm(6, 30).w[0] == pytest.approx(13649 / 43200, abs=1e-15)
    report(2, ok, " ".join(f"order{o}: b1_err={b:.1e} interior_equal={s} coef_relerr={c:.1e}"
                           for o, b, s, c in errs) + f" time={elapsed:.2f}s")
    assert ok


# --- 3 -----------------------------------------------------------------------

def test_criterion_3_coupling_compatibility(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(5)
    mat_res, adj_res = 0.0, 0.0
    nc = 31
    flat = (BlockGrid(ReferenceGrid(nc, 16), rectangle(1.0, 0.5, 0.0, -0.5), "coarse"),
            BlockGrid(ReferenceGrid(2 * nc - 1, 31), rectangle(1.0, 0.5, 0.0, 0.0), "fine"))
    curved = scenarios.topography_grids(nc)
    for q in (2, 3):
        P, R = build_op_pair(q, nc)
        wf, wc = make_norm(2 * q, 2 * nc - 1).w, make_norm(2 * q, nc).w
        for cg, fg in (flat, curved):
            mat_res = max(mat_res, check_compatibility(P, R, wf, wc, fg.h1))
            cp = build_scaled(P, R, fg, cg)
            for _ in range(20):
                uc, uf = rng.standard_normal((2, nc)), rng.standard_normal((2, 2 * nc - 1))
                adj_res = max(adj_res, abs(adjoint_residual(cp, fg.h1, wf, wc, uc, uf)))
    elapsed = time.perf_counter() - t0
    ok = mat_res < 1e-13 and adj_res < 1e-12 and elapsed < 5.0
    report(3, ok, f"matrix_identity={mat_res:.2e} scaled_adjoint={adj_res:.2e} time={elapsed:.2f}s")
    assert ok


# --- 4 -----------------------------------------------------------------------

PUBLISHED_MANUFACTURED = {4: (7.5505e-5, 4.4768e-6, 2.6793e-7)}


def test_criterion_4_manufactured_convergence(report, tmp_path):
    ns = [61, 121, 241]
    lines, ok = [], True
    for order, min_rate in ((4, 3.8), (6, 4.8)):
        cfg = cli.ScenarioConfig("manufactured", order=order, n=list(ns), out=str(tmp_path)).validated()
        (table, ref), _ = cli.run_manufactured(cfg)
        rates_ok = all(r >= min_rate for r in ref.rate[1:]) and all(r >= min_rate for r in table.rate[1:])
        ok &= rates_ok
        if order in PUBLISHED_MANUFACTURED:
            # errors are compared in the reference-coordinate norm, the one the published values use
            ok &= all(_within(e, p) for e, p in zip(ref.error, PUBLISHED_MANUFACTURED[order]))
        lines.append(f"order{order}: err_ref=" + "/".join(f"{e:.4e}" for e in ref.error)
                     + " rate_ref=" + "/".join(f"{r:.3f}" for r in ref.rate[1:])
                     + " err_J=" + "/".join(f"{e:.4e}" for e in table.error)
                     + " rate_J=" + "/".join(f"{r:.3f}" for r in table.rate[1:]))
    report(4, ok, "; ".join(lines))
    assert ok


# --- 5 -----------------------------------------------------------------------

def test_criterion_5_stoneley(report, tmp_path):
    found = []
    for mu, c_ref in analytic.TABLE_PHASE_VELOCITY.items():
        try:
            c = analytic.stoneley_phase_velocity(analytic.StoneleyParams.table_row(mu))
            found.append((mu, abs(c - c_ref)))
        except ElastiqError:
            found.append((mu, None))
    cs_ok = all(d is not None and d < 1e-11 for _, d in found)
    detail = "c_s: " + " ".join(f"mu={mu:g}:" + ("no-root" if d is None else f"{d:.1e}") for mu, d in found)
    # the mu = 1 field run needs its phase velocity; without it the error table cannot be produced
    field_ok = False
    if found[0][1] is not None:
        cfg = cli.ScenarioConfig("stoneley", order=4, n=[61, 121], mu="1", out=str(tmp_path)).validated()
        (table, _), _ = cli.run_stoneley(cfg)
        field_ok = (_within(table.error[0], 5.2044e-5) and _within(table.error[1], 2.9083e-6)
                    and table.rate[1] >= 3.9)
    # the demo row exercises the same solver on a mode that does exist (informational)
    demo = []
    for order in (4, 6):
        cfg = cli.ScenarioConfig("stoneley", order=order, n=[61, 121], mu="demo", out=str(tmp_path)).validated()
        (table, _), _ = cli.run_stoneley(cfg)
        demo.append(f"order{order} rate={table.rate[1]:.2f}")
    ok = cs_ok and field_ok
    report(5, ok, f"{detail}; mu=1 field errors {'ok' if field_ok else 'not reproducible'}; "
                  f"demo row (not counted): {', '.join(demo)}")
    assert ok


# --- 6 -----------------------------------------------------------------------

def test_criterion_6_energy_conservation(report, tmp_path):
    drifts = {}
    for order in (4, 6):
        cfg = cli.ScenarioConfig("energy", order=order, n=[61], T=100.0, out=str(tmp_path)).validated()
        _, rows, _ = cli.run_energy(cfg)
        drifts[order] = rows[0][2]
    ok = all(d < 1e-10 for d in drifts.values())
    report(6, ok, " ".join(f"order{o}: max|drift|={d:.2e}" for o, d in drifts.items()))
    assert ok


# --- 7 -----------------------------------------------------------------------

def test_criterion_7_interface_matrix(report):
    t0 = time.perf_counter()
    dom, eig = [], []
    for n in (41, 81):
        d = dg.interface_spectrum(dg.stencil_factor(2, n), "dominance")
        dom.append((n, float(d["row_margin"].min()), float(d["col_margin"].min())))
        e = dg.interface_spectrum(dg.stencil_factor(3, n), "eigenvalues")
        eig.append((n, e["min_real"], e["max_real"]))
    elapsed = time.perf_counter() - t0
    dom_ok = all(r > 0 and c > 0 for _, r, c in dom)
    eig_ok = all(abs(lo - 0.2021759) < 1e-6 and abs(hi - 2.3393173) < 1e-6 for _, lo, hi in eig)
    ok = dom_ok and eig_ok and elapsed < 30
    report(7, ok, "q=2 dominance " + " ".join(f"n={n}: row={r:.3e} col={c:.3e}" for n, r, c in dom)
           + "; q=3 eigenvalues " + " ".join(f"n={n}: [{lo:.7f}, {hi:.7f}]" for n, lo, hi in eig)
           + f" (table [0.2021759, 2.3393173]) time={elapsed:.1f}s")
    assert ok


# --- 8 -----------------------------------------------------------------------

def _run_at(disc, dt, steps=10_000):
    (cm, fm), (c, f) = cli.random_levels(disc, np.random.default_rng(0))
    st = ts.TimeLoopState(cm, fm, c, f, dt, 0.0)
    try:
        rep = cli.energy_history(disc, st, steps * dt)
    except NonFiniteState:
        return None
    return rep.max_drift()


def test_criterion_8_exact_time_step(report):
    parts, ok, diverged = [], True, False
    for order, n in ((4, 17), (6, 23)):
        d = scenarios.energy(order, n)
        dt, info = ts.compute_dt_exact(d)
        sym = max(v["asym"] / v["max"] for v in info.values())
        psd = min(v["min"] / v["max"] for v in info.values())
        stable = _run_at(d, 0.99 * dt)
        blow = _run_at(d, 1.5 * dt)
        ok &= sym < 1e-10 and psd > -1e-10 and stable is not None and stable < 1e-8
        diverged |= blow is None
        parts.append(f"order{order} n={n}: asym={sym:.1e} min_eig={psd:.1e} "
                     f"0.99x drift={'inf' if stable is None else f'{stable:.1e}'} "
                     f"1.5x {'diverged' if blow is None else 'finite'}")
    ok = ok and diverged
    report(8, ok, "; ".join(parts))
    assert ok
