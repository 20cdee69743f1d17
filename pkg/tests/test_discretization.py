import numpy as np
import pytest

from elastiq import diagnostics, scenarios
from elastiq.discretization import Problem, TwoBlock, solve_ghost
from elastiq.errors import GhostRowMissing
from elastiq.grid import BlockGrid, ReferenceGrid, rectangle
from elastiq import material as mat


@pytest.fixture(scope="module", params=[4, 6])
def energy_disc(request):
    return scenarios.energy(request.param, 25)


def _random_constrained(disc, rng, t=0.0):
    c = rng.standard_normal(disc.coarse.field_shape)
    f = rng.standard_normal(disc.fine.field_shape)
    disc.enforce_all(c, f, t)
    return c, f


def _wsum(blk, v, L):
    W = blk.wx[:, None] * blk.wy[None, :]
    return blk.h1 * blk.h2 * float(np.sum(W * v[:, :, :blk.n2] * L))


def test_global_sbp_identity(energy_disc):
    # (v, L-hat u) = -S(v, u) summed over both blocks: interface terms cancel
    d = energy_disc
    rng = np.random.default_rng(0)
    for _ in range(3):
        uc, uf = _random_constrained(d, rng)
        vc, vf = _random_constrained(d, rng)
        Lc, Lf = d.L_hat(uc, uf)
        lhs = _wsum(d.coarse, vc, Lc) + _wsum(d.fine, vf, Lf)
        rhs = -(d.coarse.bilinear_S(vc, uc) + d.fine.bilinear_S(vf, uf))
        assert abs(lhs - rhs) < 1e-11 * abs(rhs)


def test_S_is_symmetric_psd(energy_disc):
    rng = np.random.default_rng(1)
    for blk in (energy_disc.coarse, energy_disc.fine):
        u, v = rng.standard_normal((2,) + blk.field_shape)
        a, b = blk.bilinear_S(u, v), blk.bilinear_S(v, u)
        assert abs(a - b) < 1e-12 * abs(a)
        assert blk.bilinear_S(u, u) > 0


def test_interface_conditions_hold_after_enforcement(energy_disc):
    d = energy_disc
    c, f = _random_constrained(d, np.random.default_rng(2))
    assert np.abs(f[:, :, 0] - d.coupling.interp(c[:, :, d.coarse.n2 - 1])).max() == 0
    r = d.interface_residual(c, f)
    scale = np.abs(d.traction_coarse(c) / d.coupling.jl_coarse).max()
    assert np.abs(r).max() < 1e-12 * scale
    # the fine free surface carries zero traction
    assert np.abs(d.fine.traction(f, "top")).max() < 1e-10 * np.abs(d.fine.traction(f, "bottom")).max()


def test_interface_matrix_matches_column_probing():
    d = scenarios.energy(4, 17)
    n = d.coarse.n1
    M = np.zeros((2 * n, 2 * n))
    for col in range(2 * n):
        x = np.zeros((2, n))
        x[col % 2, col // 2] = 1.0
        M[:, col] = d._ghost_response(x).T.reshape(-1)
    assert np.abs(d.system.scale * M - d.system.matrix).max() < 1e-12 * np.abs(M).max() * d.system.scale


def test_interface_matrix_unchanged_by_time_stepping():
    from elastiq import timestepper as ts
    d = scenarios.energy(4, 17)
    before = d.system.matrix.tobytes()
    st = ts.bootstrap(d, 1e-3, u0=_random_constrained(d, np.random.default_rng(3)),
                      v0=(d.coarse.zeros(), d.fine.zeros()), exact=False)
    ts.run(d, st, 5e-3)
    assert d.system.matrix.tobytes() == before


def test_sparse_operator_matches_stencils(energy_disc):
    rng = np.random.default_rng(4)
    for blk in (energy_disc.coarse, energy_disc.fine):
        assert blk.Lmat is not None
        u = rng.standard_normal(blk.field_shape)
        ref = blk._L(u, blk.N, blk.G2, blk.D2, blk.n2)
        assert np.abs(blk.apply_L(u) - ref).max() < 1e-13 * np.abs(ref).max()
        assert np.abs(blk.L_interface(u) - ref[:, :, blk.interface_row]).max() < 1e-13 * np.abs(ref).max()


def test_ghost_row_required():
    d = scenarios.energy(4, 17)
    with pytest.raises(GhostRowMissing):
        d.coarse.apply_L(np.zeros((2, d.coarse.n1, d.coarse.n2)))


def test_dirichlet_wins_at_corners():
    d, case = scenarios.manufactured(4, 17)
    c, f = d.coarse.zeros(), d.fine.zeros()
    d.enforce_all(c, f, 0.3, d.forcing("coarse", 0.3), d.forcing("fine", 0.3))
    for i in (0, -1):
        ex = case.displacement(d.fine.grid.x[i, 0], d.fine.grid.y[i, 0], 0.3)
        assert np.allclose(f[:, i, 0], ex, atol=1e-15)


def test_top_traction_condition():
    d, case = scenarios.manufactured(4, 17)
    f = d.fine.zeros()
    f[:, :, :d.fine.n2] = d.exact("fine", 0.2)
    d.apply_traction_bc(f, 0.2)
    x, y = d.fine.grid.x[:, -1], d.fine.grid.y[:, -1]
    nx, ny = d._top_normal
    want = case.traction(x, y, 0.2, nx, ny) * d._top_jl
    assert np.abs(d.fine.traction(f, "top") - want).max() < 1e-10 * np.abs(want).max()


@pytest.mark.parametrize("order", [4, 6])
def test_truncation_error_converges(order):
    # rho J u_tt = L u + J F on the exact solution, up to truncation error
    errs = []
    t = 0.4
    for n in (31, 61):
        d, case = scenarios.manufactured(order, n)
        c, f = d.coarse.zeros(), d.fine.zeros()
        c[:, :, :d.coarse.n2] = d.exact("coarse", t)
        f[:, :, :d.fine.n2] = d.exact("fine", t)
        d.apply_traction_bc(f, t)
        # exact ghost values are unknown; the ghost solve supplies consistent ones
        solve_ghost(d, c, f, d.forcing("coarse", t), d.forcing("fine", t))
        blk = d.fine
        res = (blk.apply_L(f) + blk.J * d.forcing("fine", t)) / blk.rhoJ
        acc = case.acceleration(blk.grid.x, blk.grid.y, t)
        mid = (slice(None), slice(12, -12), slice(12, -12))
        errs.append(np.abs(res - acc)[mid].max())
    assert errs[1] < errs[0] / 2 ** (order - 1.5)


def test_linear_field_is_stationary():
    # constant material, linear displacement: zero stress divergence, exact data everywhere
    A = np.array([[0.3, -0.2], [0.1, 0.4]])
    lin = lambda side, x, y, t: np.stack([A[0, 0] * x + A[0, 1] * y + 1.0, A[1, 0] * x + A[1, 1] * y - 2.0])
    cg = BlockGrid(ReferenceGrid(17, 9), rectangle(1.0, 0.5, 0.0, -0.5), "coarse")
    fg = BlockGrid(ReferenceGrid(33, 17), rectangle(1.0, 0.5, 0.0, 0.0), "fine")
    mat_ = mat.constant(1.5, 2.0, 3.0)
    d = TwoBlock(cg, fg, mat_, mat_, 4, Problem(displacement=lin))
    from elastiq import timestepper as ts
    st = ts.bootstrap(d, 0.01, exact=True)
    c0, f0 = st.c.copy(), st.f.copy()
    for _ in range(5):
        ts.step(st, d)
    assert np.abs(st.c[:, :, :-1] - c0[:, :, :-1]).max() < 1e-12
    assert np.abs(st.f - f0).max() < 1e-12


def test_cartesian_stencil_factor_extraction():
    d = scenarios.cartesian(4, 25, coarse=(2.0, 1.5, 3.0), fine=(1.0, 0.7, 1.2))
    for comp in (0, 1):
        M1 = diagnostics.extract_stencil_factor(d, comp)
        assert np.abs(M1 - diagnostics.stencil_factor(2, 25)).max() < 1e-13
    assert np.abs(d.system.matrix[0::2, 1::2]).max() == 0
