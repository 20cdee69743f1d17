"""Command line entry point: scenario runs and operator dumps.

    elastiq run <scenario> [--order 4|6] [--n LIST] [--T FLOAT] [--cfl FLOAT]
                [--mu ROW|FLOAT] [--seed INT] [--out DIR] [--config FILE]
    elastiq dump-operator <name> --n INT [--order 4|6] [--out FILE]

Exit status: 0 success, 2 configuration error, 3 numerical failure.
Data goes to CSV files (and the summary table to stdout); logs go to stderr.
"""
import argparse
import configparser
import logging
import math
import os
import sys
from dataclasses import dataclass, field, fields

import numpy as np

from . import analytic, diagnostics, scenarios
from . import timestepper as ts
from .errors import ConfigError, ElastiqError, NonFiniteState
from .interp import build_op_pair, min_coarse_points
from .sbp_core import FirstDerivOp, SecondDerivOp, closure_width, make_norm

log = logging.getLogger("elastiq")

SCENARIOS = ("manufactured", "stoneley", "energy", "spectrum", "dispersion")

DEFAULT_N = {
    "manufactured": [61, 121, 241],
    "stoneley": [61, 121],
    "energy": [61],
    "spectrum": [41, 81],
    "dispersion": [],
}
DEFAULT_T = {"manufactured": 1.0, "energy": 100.0}


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

@dataclass
class ScenarioConfig:
    scenario: str
    order: int = 4
    n: list = field(default_factory=list)
    T: float = None
    cfl: float = ts.C_CFL
    mu: str = "1"
    seed: int = 0
    out: str = "."

    def to_text(self):
        lines = []
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                continue
            if f.name == "n":
                v = ",".join(str(k) for k in v)
            elif isinstance(v, float):
                v = repr(v)
            lines.append(f"{f.name} = {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        return cls.from_mapping(_read_ini(text))

    @classmethod
    def from_mapping(cls, m):
        known = {f.name for f in fields(cls)}
        for k in m:
            if k not in known:
                raise ConfigError(k, "unknown key")
        if "scenario" not in m:
            raise ConfigError("scenario", "missing")
        cfg = cls(scenario=str(m["scenario"]))
        for k, v in m.items():
            if k != "scenario" and v is not None:
                setattr(cfg, k, _parse_value(k, v))
        return cfg.validated()

    def validated(self):
        if self.scenario not in SCENARIOS:
            raise ConfigError("scenario", f"unknown scenario {self.scenario!r}; choose from {', '.join(SCENARIOS)}")
        if self.order not in (4, 6):
            raise ConfigError("order", f"must be 4 or 6, got {self.order}")
        if not self.n:
            self.n = list(DEFAULT_N[self.scenario])
        if self.T is None and self.scenario in DEFAULT_T:
            self.T = DEFAULT_T[self.scenario]
        if self.T is not None and not (self.T > 0 and math.isfinite(self.T)):
            raise ConfigError("T", f"must be positive, got {self.T}")
        if not (self.cfl > 0 and math.isfinite(self.cfl)):
            raise ConfigError("cfl", f"must be positive, got {self.cfl}")
        if self.seed < 0:
            raise ConfigError("seed", "must be non-negative")
        for k, n in enumerate(self.n):
            _check_size(self.scenario, self.order, n, f"n[{k}]")
        if self.scenario == "stoneley":
            stoneley_params(self.mu)
        return self


def _read_ini(text):
    """Flat key = value text; keys keep their case (T is not t)."""
    cp = configparser.ConfigParser()
    cp.optionxform = str
    try:
        cp.read_string("[run]\n" + text)
    except configparser.Error as exc:
        raise ConfigError("config", str(exc).splitlines()[0]) from None
    return dict(cp["run"])


def _parse_value(key, v):
    if not isinstance(v, str):
        return v
    try:
        if key in ("order", "seed"):
            return int(v)
        if key in ("T", "cfl"):
            return float(v)
        if key == "n":
            return [int(x) for x in v.replace(" ", "").split(",") if x]
    except ValueError:
        raise ConfigError(key, f"cannot parse {v!r}") from None
    return v


def _check_size(scenario, order, n, where):
    q = order // 2
    if scenario in ("manufactured", "energy"):
        if n % 2 == 0:
            raise ConfigError(where, f"n1_coarse must be odd, got {n}")
        need = max(2 * closure_width(order) - 1, min_coarse_points(q))
    elif scenario == "stoneley":
        need = max(closure_width(order), min_coarse_points(q))
    elif scenario == "spectrum":
        need = min_coarse_points(q)
    else:
        return
    if n < need:
        raise ConfigError(where, f"n1_coarse = {n} is below the minimum {need} for order {order}")


def stoneley_params(mu):
    """'demo' selects the simulation row; otherwise a table row by its mu value."""
    if str(mu).strip().lower() == "demo":
        return analytic.DEMO_PARAMS
    try:
        val = float(mu)
    except ValueError:
        raise ConfigError("mu", f"expected 'demo' or a number, got {mu!r}") from None
    if not val > 0:
        raise ConfigError("mu", f"must be positive, got {val}")
    return analytic.StoneleyParams.table_row(val)


# ---------------------------------------------------------------------------
# scenario runners
# ---------------------------------------------------------------------------

def _tag(cfg):
    return f"order{cfg.order}"


def run_manufactured(cfg):
    errs, refs = [], []
    for n in cfg.n:
        disc, _ = scenarios.manufactured(cfg.order, n)
        dt, steps = ts.landing_dt(cfg.T, ts.compute_dt_approx(disc, cfg.cfl))
        log.info("manufactured n=%d: dt=%.6e, %d steps", n, dt, steps)
        st = ts.bootstrap(disc, dt, exact=True)
        ts.run(disc, st, cfg.T)
        errs.append(diagnostics.l2_error(disc, st.c, st.f, st.t))
        refs.append(diagnostics.l2_error(disc, st.c, st.f, st.t, jacobian=False))
        log.info("manufactured n=%d: l2 error %.4e (reference norm %.4e)", n, errs[-1], refs[-1])
    table = diagnostics.convergence_rates(cfg.n, errs)
    ref = diagnostics.convergence_rates(cfg.n, refs)
    path = os.path.join(cfg.out, f"manufactured_{_tag(cfg)}.csv")
    diagnostics.write_convergence_csv(path, table, ref)
    return (table, ref), [path]


def run_stoneley(cfg):
    params = stoneley_params(cfg.mu)
    c_s = analytic.stoneley_phase_velocity(params)
    mode = analytic.stoneley_mode(params, c_s)
    T = cfg.T if cfg.T is not None else mode.period
    log.info("stoneley: c_s = %.15f, period %.6f, T = %.6f", c_s, mode.period, T)
    paths = []
    mpath = os.path.join(cfg.out, f"stoneley_mode_{cfg.mu}.csv")
    coef = mode.coeffs
    diagnostics.write_csv(mpath, ["quantity", "real", "imag"],
                          [("c_s", c_s, 0.0)]
                          + [(nm, float(np.real(v)), float(np.imag(v)))
                             for nm, v in zip(("A_f", "B_f", "A_c", "B_c"), coef)]
                          + [(nm, float(np.real(v)), float(np.imag(v)))
                             for nm, v in (("eta_f", mode.eta_f), ("eta_c", mode.eta_c),
                                           ("gamma_f", mode.gamma_f), ("gamma_c", mode.gamma_c))])
    paths.append(mpath)
    errs, refs = [], []
    for n in cfg.n:
        disc = scenarios.stoneley(cfg.order, n, mode)
        dt, steps = ts.landing_dt(T, ts.compute_dt_approx(disc, cfg.cfl))
        log.info("stoneley n=%d: dt=%.6e, %d steps", n, dt, steps)
        st = ts.bootstrap(disc, dt, exact=True)
        hist = []
        acc = [0.0, 0.0]

        def record(s):
            e = diagnostics.l2_error(disc, s.c, s.f, s.t)
            acc[0] = max(acc[0], e)
            acc[1] += e * e * s.dt
            hist.append((s.step, s.t, e, acc[0], math.sqrt(acc[1])))
        ts.run(disc, st, T, record)
        hpath = os.path.join(cfg.out, f"stoneley_history_{_tag(cfg)}_n{n}.csv")
        diagnostics.write_csv(hpath, ["step", "t", "error", "sup_error", "time_l2_error"], hist)
        paths.append(hpath)
        errs.append(hist[-1][2])
        refs.append(diagnostics.l2_error(disc, st.c, st.f, st.t, jacobian=False))
        log.info("stoneley n=%d: end error %.4e (reference norm %.4e)", n, errs[-1], refs[-1])
    table = diagnostics.convergence_rates(cfg.n, errs)
    ref = diagnostics.convergence_rates(cfg.n, refs)
    path = os.path.join(cfg.out, f"stoneley_{_tag(cfg)}.csv")
    diagnostics.write_convergence_csv(path, table, ref)
    return (table, ref), [path] + paths


def random_levels(disc, rng):
    """Two interface-consistent levels drawn from uniform(0, 1) at every node."""
    levels = []
    for _ in range(2):
        c = rng.uniform(size=disc.coarse.field_shape)
        f = rng.uniform(size=disc.fine.field_shape)
        disc.enforce_all(c, f, 0.0)
        levels.append((c, f))
    return levels


def energy_history(disc, st, T, report=None):
    """Step to T recording E^{n+1/2} after every step; L-hat of each level is computed once."""
    report = report or diagnostics.EnergyReport()
    dt = st.dt
    L_prev = disc.L_hat(st.c_prev, st.f_prev)
    L_now = disc.L_hat(st.c, st.f)
    report.add(st.step, st.t, diagnostics.discrete_energy(
        disc, (st.c_prev, st.f_prev), (st.c, st.f), dt, L_prev, L_now))
    cache = [L_now]

    def record(s):
        L_new = disc.L_hat(s.c, s.f)
        E = diagnostics.discrete_energy(disc, (s.c_prev, s.f_prev), (s.c, s.f), dt, cache[0], L_new)
        cache[0] = L_new
        if not math.isfinite(E):
            # squares overflow before the fields do
            raise NonFiniteState(s.step)
        report.add(s.step, s.t, E)
    ts.run(disc, st, T, record)
    return report


def run_energy(cfg):
    paths = []
    rows = []
    for n in cfg.n:
        disc = scenarios.energy(cfg.order, n)
        dt, steps = ts.landing_dt(cfg.T, ts.compute_dt_approx(disc, cfg.cfl))
        rng = np.random.default_rng(cfg.seed)
        (cm, fm), (c, f) = random_levels(disc, rng)
        st = ts.TimeLoopState(cm, fm, c, f, dt, 0.0)
        log.info("energy n=%d: dt=%.6e, %d steps", n, dt, steps)
        rep = energy_history(disc, st, cfg.T)
        path = os.path.join(cfg.out, f"energy_{_tag(cfg)}_n{n}.csv")
        diagnostics.write_energy_csv(path, rep)
        paths.append(path)
        rows.append((n, rep.energy[0], rep.max_drift()))
        log.info("energy n=%d: E = %.6e, max |drift| = %.3e", n, rep.energy[0], rep.max_drift())
    return ("n", "E_half", "max_abs_drift"), rows, paths


def run_spectrum(cfg):
    q = cfg.order // 2
    rows = []
    for n in cfg.n:
        M1 = diagnostics.stencil_factor(q, n)
        dom = diagnostics.interface_spectrum(M1, "dominance")
        eig = diagnostics.interface_spectrum(M1, "eigenvalues")
        rows.append((n, q, float(dom["row_margin"].min()), float(dom["col_margin"].min()),
                     eig["min_real"], eig["max_real"], eig["max_imag"]))
    header = ("n", "q", "min_row_margin", "min_col_margin", "lambda_min", "lambda_max", "max_abs_imag")
    path = os.path.join(cfg.out, f"spectrum_q{q}.csv")
    diagnostics.write_csv(path, header, rows)
    return header, rows, [path]


def run_dispersion(cfg):
    rows = []
    for mu, ref in analytic.TABLE_PHASE_VELOCITY.items():
        p = analytic.StoneleyParams.table_row(mu)
        try:
            c = analytic.stoneley_phase_velocity(p)
            res = abs(analytic.scaled_det(p, c))
            status = "ok" if abs(c - ref) < 1e-11 else "mismatch"
        except ElastiqError as exc:
            c, res, status = float("nan"), float("nan"), "no-root"
            log.warning("mu=%g: %s", mu, exc)
        rows.append((mu, ref, c, res, status))
    header = ("mu", "c_table", "c_computed", "scaled_det", "status")
    path = os.path.join(cfg.out, "dispersion.csv")
    diagnostics.write_csv(path, header, rows)
    return header, rows, [path]


def _print_table(header, rows, stream=None):
    stream = stream or sys.stdout
    stream.write(",".join(header) + "\n")
    for r in rows:
        stream.write(",".join(diagnostics._fmt(v) for v in r) + "\n")


def run_scenario(cfg):
    os.makedirs(cfg.out, exist_ok=True)
    if cfg.scenario in ("manufactured", "stoneley"):
        fn = run_manufactured if cfg.scenario == "manufactured" else run_stoneley
        (table, ref), paths = fn(cfg)
        _print_table(("n", "error", "rate", "error_ref", "rate_ref"),
                     zip(table.n, table.error, table.rate, ref.error, ref.rate))
    else:
        fn = {"energy": run_energy, "spectrum": run_spectrum, "dispersion": run_dispersion}[cfg.scenario]
        header, rows, paths = fn(cfg)
        _print_table(header, rows)
    for p in paths:
        log.info("wrote %s", p)
    return paths


# ---------------------------------------------------------------------------
# operator dumps
# ---------------------------------------------------------------------------

OPERATORS = ("D1", "G", "G-ghost", "norm", "P", "R", "M1", "interface")


def dump_operator(name, n, order):
    q = order // 2
    if name == "D1":
        return FirstDerivOp(order, n).dense()
    if name == "G":
        return SecondDerivOp(order, n).dense(np.ones(n))
    if name == "G-ghost":
        return SecondDerivOp(order, n, ghost=(True, True)).dense(np.ones(n))
    if name == "norm":
        return make_norm(order, n).w[:, None]
    if name in ("P", "R"):
        P, R = build_op_pair(q, n)
        return (P if name == "P" else R).matrix
    if name == "M1":
        return diagnostics.stencil_factor(q, n)
    if name == "interface":
        return scenarios.cartesian(order, n).system.matrix
    raise ConfigError("name", f"unknown operator {name!r}; choose from {', '.join(OPERATORS)}")


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(2)


def build_parser():
    p = _Parser(prog="elastiq", description="Two-block elastic wave solver with a 1:2 nonconforming interface.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    r = sub.add_parser("run", help="run a scenario")
    r.add_argument("scenario")
    r.add_argument("--order", type=int)
    r.add_argument("--n", help="comma separated coarse sizes, e.g. 61,121")
    r.add_argument("--T", type=float)
    r.add_argument("--cfl", type=float)
    r.add_argument("--mu", help="Stoneley row: a table mu value or 'demo'")
    r.add_argument("--seed", type=int)
    r.add_argument("--out")
    r.add_argument("--config", help="flat key = value file; command line options win")
    d = sub.add_parser("dump-operator", help="write an operator matrix as CSV")
    d.add_argument("name")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--order", type=int, default=4)
    d.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def config_from_args(args):
    m = {}
    if args.config:
        try:
            with open(args.config) as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError("config", str(exc)) from None
        m.update(_read_ini(text))
    m["scenario"] = args.scenario
    for k in ("order", "n", "T", "cfl", "mu", "seed", "out"):
        v = getattr(args, k)
        if v is not None:
            m[k] = v
    return ScenarioConfig.from_mapping(m)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "run":
            run_scenario(config_from_args(args))
        else:
            if args.order not in (4, 6):
                raise ConfigError("order", f"must be 4 or 6, got {args.order}")
            if args.n < 2:
                raise ConfigError("n", f"must be at least 2, got {args.n}")
            try:
                A = dump_operator(args.name, args.n, args.order)
            except (ValueError, ElastiqError) as exc:
                if isinstance(exc, ConfigError):
                    raise
                raise ConfigError("n", str(exc)) from None
            A = A.toarray() if hasattr(A, "toarray") else np.asarray(A)
            header = [f"c{j}" for j in range(A.shape[1])]
            if args.out:
                diagnostics.write_csv(args.out, header, A.tolist())
            else:
                _print_table(header, A.tolist())
    except ConfigError as exc:
        log.error("configuration error: %s", exc)
        return 2
    except (ElastiqError, np.linalg.LinAlgError, FloatingPointError) as exc:
        log.error("numerical failure: %s", exc)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
