"""Exit criteria.  Each test prints one PASS/FAIL line, collected again in the
terminal summary (see conftest.py)."""

import json
import math
import time

import numpy as np

from c3rel import matrix_oracle as mo
from c3rel.algebra import E1, E3, I, Multivector, bar, cinv, mexp
from c3rel.cli import main
from c3rel.fields import (
    VACUUM, analytic_field, classical_split, maxwell_residual, potential_residual, st_nabla_fd,
)
from c3rel.kinematics import relative_mass, st_momentum, time_dilation, work_to_light
from c3rel.spacetime import (
    Event, Frame, active_boost, boost_frame, compose_collinear_boosts, lorentz_coords,
    rapidity_from_speed,
)
from c3rel.verify import (
    OBLIQUE, OBLIQUE_POL, check_conjugation_axioms, check_interval_invariance,
    check_product_identities, galilean_ratio, lorentz_closed_form, rel_error,
)

RESULTS: list[str] = []
AT = Event(0.3, (0.2, -0.1, 0.4))


def report(number, name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {name} -- {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_01_oracle_equivalence():
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(10_000):
        M = Multivector.from_reals(rng.normal(size=8))
        N = Multivector.from_reals(rng.normal(size=8))
        worst = max(worst,
                    rel_error(M * N, mo.from_matrix(mo.to_matrix(M) @ mo.to_matrix(N))),
                    rel_error(bar(M), mo.from_matrix(mo.adjoint(mo.to_matrix(M)))),
                    rel_error(cinv(M), mo.from_matrix(mo.adjugate(mo.to_matrix(M)))),
                    rel_error(mexp(M), mo.mexp(M)))
    secs = time.perf_counter() - t0
    report(1, "gp/bar/cinv/mexp vs 2x2 matrices", worst <= 1e-10 and secs < 10,
           f"max rel err {worst:.2e} (tol 1e-10), {secs:.2f} s (limit 10 s)")


def test_02_product_identities():
    r = check_product_identities(10_000, seed=11, tol=1e-12)
    report(2, "product identities and real reductions", r.passed,
           f"max err {r.max_error:.2e} (tol 1e-12, 1e4 cases)")


def test_03_boost_worked_example():
    out = active_boost(E1, (0, 1, 0), math.atanh(0.6))
    err = float(np.max(np.abs(out.to_reals() - (E1 * 1.25 + I * E3 * 0.75).to_reals())))
    report(3, "active_boost(e1, e2, atanh 0.6) = 1.25 e1 + 0.75 i e3", err <= 1e-15,
           f"err {err:.2e} (tol 1e-15)")


def test_04_lorentz_coordinates():
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(1000):
        X = Event(rng.uniform(-1, 1), tuple(rng.uniform(-1, 1, 3)))
        v = rng.uniform(-0.95, 0.95)
        a, b = lorentz_coords(X, v), lorentz_closed_form(X, v)
        worst = max(worst, float(np.max(np.abs(np.array([a.ct, *a.x]) - [b.ct, *b.x]))))
    Y = lorentz_coords(Event(1.0), 0.6)
    ex = max(abs(Y.t - 1.25), abs(Y.x[0] - 0.75))
    report(4, "versor coordinates vs closed form; (1,0,0.6) -> (1.25,0.75)",
           worst <= 1e-12 and ex <= 1e-12, f"max err {worst:.2e}, example err {ex:.2e} (tol 1e-12)")


def test_05_interval_invariance():
    r = check_interval_invariance(1000, seed=5, tol=1e-12)
    report(5, "interval invariance", r.passed, f"max |d interval| {r.max_error:.2e} (tol 1e-12)")


def test_06_conjugation_axioms():
    r = check_conjugation_axioms(1000, seed=6, tol=1e-12)
    report(6, "bar items 1-4, cinv items 2-4", r.passed, f"max err {r.max_error:.2e} (tol 1e-12)")


def test_07_galilean_limit():
    r = galilean_ratio(Event(1.0), 1e-3)
    report(7, "Galilean error ratio at v/c = 1e-3, 2e-3", 3.6 <= r <= 4.4,
           f"ratio {r:.6f} (window [3.6, 4.4])")


def test_08_maxwell():
    F, src, _ = analytic_field("plane_wave", k=2.0, E0=1.0, prop=OBLIQUE, pol=OBLIQUE_POL)
    h = 1e-2
    order = math.log2(maxwell_residual(F, src, AT, h).norm()
                      / maxwell_residual(F, src, AT, h / 2).norm())
    Fc, srcc, _ = analytic_field("constant", E0=(1.0, -2.0, 0.5), B0=(0.0, 0.3, 0.0))
    const = maxwell_residual(Fc, srcc, AT, h).norm()
    unphysical = lambda X: Multivector(0, (X.x[0] ** 2, X.t * X.x[1], 1j * X.x[2] * X.t))
    reas = max(rel_error(classical_split(f, s, AT, h).reassemble(), maxwell_residual(f, s, AT, h))
               for f, s in ((F, src), (unphysical, VACUUM)))
    four = max(abs(st_nabla_fd(lambda X: X.as_multivector(), AT, s).s - 4) for s in (h, h / 2))
    ok = 1.7 <= order <= 2.3 and const == 0.0 and reas <= 1e-12 and four <= 10 * (h / 2) ** 2
    report(8, "Maxwell residual order, constant field, reassembly, nabla X = 4", ok,
           f"order {order:.3f}, constant {const:g}, reassembly {reas:.1e}, |nabla X - 4| {four:.1e}")


def test_09_potential_and_chain_rule():
    _, src, P = analytic_field("plane_wave", k=2.0, E0=1.0, prop=OBLIQUE, pol=OBLIQUE_POL)
    C = 10.0
    ok, worst = True, []
    for h in (1e-2, 5e-3):
        res = potential_residual(P, src, AT, h)
        ok &= res.wave.norm() <= C * h * h and abs(res.lorentz) <= C * h * h
        worst.append(max(res.wave.norm(), abs(res.lorentz)) / (h * h))

    v = 0.6
    phi = rapidity_from_speed(v)
    gp_ = lambda Xp: math.sin(0.7 * Xp.t + 0.3 * Xp.x[0]) * math.cos(0.5 * Xp.x[1] - 0.2 * Xp.x[2])
    g = lambda X: gp_(lorentz_coords(X, v))
    primed = boost_frame(Frame.canonical(), (1, 0, 0), phi)
    chain = []
    for h in (1e-2, 5e-3):
        lhs = mexp(E1 * -phi) * st_nabla_fd(g, AT, h)
        rhs = st_nabla_fd(gp_, lorentz_coords(AT, v), h, frame=primed)
        chain.append((lhs - rhs).norm())
        ok &= chain[-1] <= C * h * h + 1e-10
    report(9, "potential wave/Lorentz residuals and chain rule", ok,
           f"potential max/h^2 {max(worst):.3f}, chain-rule errs {chain[0]:.1e}, {chain[1]:.1e} "
           f"(bound {C:g} h^2 + 1e-10)")


def test_10_kinematics():
    errs = {
        "work": abs(work_to_light(1, 1) - 1.0),
        "dilation": abs(time_dilation(math.atanh(0.6)) - 1.25),
        "mass": abs(relative_mass(2.0, 0.6, 1.0) - 2.5),
        "compose": abs(compose_collinear_boosts(math.atanh(0.6), math.atanh(0.6)).speed() - 15 / 17),
    }
    rng = np.random.default_rng(10)
    shell = 0.0
    for _ in range(1000):
        m0, v = rng.uniform(0.1, 5), rng.uniform(-0.95, 0.95)
        P = st_momentum(m0, v)
        shell = max(shell, abs((P * cinv(P)).s - m0 * m0) / (m0 * m0))
    ok = (errs["work"] <= 1e-9 and errs["dilation"] <= 1e-12 and errs["mass"] <= 1e-12
          and errs["compose"] <= 1e-12 and shell <= 1e-10)
    report(10, "work, dilation, relative mass, mass shell, composition", ok,
           ", ".join(f"{k} {v:.1e}" for k, v in errs.items()) + f", mass shell {shell:.1e}")


CLI_EXAMPLES = [
    (3, ["boost", "e1", "--dir", "e2", "--speed", "0.6"],
     lambda o: Multivector.from_dict(o["result"]).isclose(E1 * 1.25 + I * E3 * 0.75, 1e-15)),
    (4, ["coords", '{"t":1,"x":[0,0,0]}', "--v", "0.6"],
     lambda o: abs(o["lorentz"]["t"] - 1.25) < 1e-12 and abs(o["lorentz"]["x"][0] - 0.75) < 1e-12),
    (5, ["coords", '{"t":1,"x":[0,0,0]}', "--v", "0.6"],
     lambda o: abs(o["interval_after"] - o["interval_before"]) <= 1e-12),
    (8, ["maxwell-check", json.dumps({"kind": "plane_wave", "k": 2, "E0": 1, "prop": OBLIQUE,
                                      "pol": OBLIQUE_POL}), "--h", "0.01", "--h2", "0.005"],
     lambda o: 1.7 <= o["records"][0]["order"] <= 2.3),
    (8, ["maxwell-check", '{"kind":"constant","E0":[1,-2,0.5]}'],
     lambda o: o["records"][0]["residual_norm"] == 0.0),
    (9, ["potential-check", json.dumps({"kind": "plane_wave", "k": 2, "E0": 1, "prop": OBLIQUE,
                                        "pol": OBLIQUE_POL}), "--h", "0.01"],
     lambda o: o["records"][0]["wave_norm"] <= 1e-3 and abs(o["records"][0]["lorentz"]) <= 1e-3),
    (10, ["kinematics", "--m0", "1", "--speed", "0.6", "--compose", "0.6", "--work"],
     lambda o: abs(o["work_to_light"] - 1) <= 1e-9 and abs(o["gamma"] - 1.25) <= 1e-12
     and abs(o["composed"]["speed_over_c"] - 15 / 17) <= 1e-12
     and abs(o["mass_shell"] - 1) <= 1e-10),
    (10, ["kinematics", "--m0", "2", "--speed", "0.6"], lambda o: abs(o["m"] - 2.5) <= 1e-12),
]


def _cli(argv, capsys):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_11_cli(capsys):
    failures = []
    code, out = _cli(["verify", "--n", "10000"], capsys)
    if code != 0:
        failures.append("verify")
    names = " ".join(s["name"] for s in out["suites"])
    for needle in ("matrix oracle", "product identities", "conjugation", "interval",
                   "Lorentz", "Galilean", "order", "constant", "reassembly", "nabla X",
                   "potential", "chain rule", "kinematics"):
        if needle not in names:
            failures.append(f"verify lacks {needle}")
    for num, argv, check in CLI_EXAMPLES:
        code, out = _cli(argv, capsys)
        if code != 0 or not check(out):
            failures.append(f"criterion {num}: {' '.join(argv[:1])}")
    # 7: Galilean ratio read off two coords invocations
    errs = [_cli(["coords", '{"t":1,"x":[0,0,0]}', "--v", v], capsys)[1]["galilean_error"]
            for v in ("0.001", "0.002")]
    if not 3.6 <= errs[1] / errs[0] <= 4.4:
        failures.append("criterion 7: coords ratio")
    report(11, "CLI reproduces every criterion; verify exits 0", not failures,
           f"{len(CLI_EXAMPLES) + 3} invocations" + (f", failed: {failures}" if failures else ""))
