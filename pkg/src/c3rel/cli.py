"""Command-line interface.

Every command prints one JSON document on stdout; diagnostics go to stderr.
Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 domain error
(e.g. a speed not below c).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import fields, kinematics, spacetime
from .algebra import E1, E2, E3, I, ONE, Multivector
from .errors import C3Error
from .spacetime import Event

EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 1, 2, 3

_NAMED_VECTORS = {"e1": (1.0, 0.0, 0.0), "e2": (0.0, 1.0, 0.0), "e3": (0.0, 0.0, 1.0),
                  "x": (1.0, 0.0, 0.0), "y": (0.0, 1.0, 0.0), "z": (0.0, 0.0, 1.0)}
_NAMED_ELEMENTS = {"1": ONE, "i": I, "e1": E1, "e2": E2, "e3": E3}


class InputError(Exception):
    pass


def parse_vector(text: str) -> tuple[float, float, float]:
    """'e2', 'y', '[0,1,0]' or '0,1,0'."""
    key = text.strip().lower()
    if key.lstrip("+") in _NAMED_VECTORS:
        return _NAMED_VECTORS[key.lstrip("+")]
    if key.startswith("-") and key[1:] in _NAMED_VECTORS:
        return tuple(-a for a in _NAMED_VECTORS[key[1:]])
    try:
        vals = json.loads(text) if key.startswith("[") else [float(a) for a in text.split(",")]
        vals = tuple(float(a) for a in vals)
    except (ValueError, TypeError) as exc:
        raise InputError(f"cannot parse vector {text!r}") from exc
    if len(vals) != 3:
        raise InputError(f"vector needs 3 components, got {len(vals)}")
    return vals


def parse_multivector(text: str) -> Multivector:
    """Multivector JSON {"s": [re, im], "v": [[re, im], ...]} or a basis name."""
    if text.strip().lower() in _NAMED_ELEMENTS:
        return _NAMED_ELEMENTS[text.strip().lower()]
    try:
        return Multivector.from_dict(json.loads(text))
    except (ValueError, TypeError, KeyError, AttributeError) as exc:
        raise InputError(f"cannot parse multivector {text!r}: {exc}") from exc


def parse_event(text: str, c: float) -> Event:
    try:
        return Event.from_dict(json.loads(text), c=c)
    except (ValueError, TypeError, KeyError, AttributeError) as exc:
        raise InputError(f"cannot parse event {text!r}: {exc}") from exc


def parse_json(text: str) -> dict:
    try:
        return json.loads(text)
    except ValueError as exc:
        raise InputError(f"invalid JSON {text!r}") from exc


def _rapidity(args) -> float:
    if args.phi is not None:
        return args.phi
    return spacetime.rapidity_from_speed(args.speed, args.c)


def _vec(a) -> list[float]:
    return [float(x) for x in a]


# -- commands ----------------------------------------------------------------


def cmd_boost(args) -> dict:
    M = parse_multivector(args.mv)
    d = parse_vector(args.dir)
    phi = _rapidity(args)
    out = spacetime.active_boost(M, d, phi)
    sq0, sq1 = M * M, out * out
    return {"input": M.to_dict(), "direction": list(d), "phi": phi, "result": out.to_dict(),
            "square_before": sq0.to_dict(), "square_after": sq1.to_dict(),
            "square_preserved": sq1.isclose(sq0)}


def cmd_rotate(args) -> dict:
    M = parse_multivector(args.mv)
    n = parse_vector(args.axis)
    out = spacetime.active_rotate(M, n, args.theta)
    sq0, sq1 = M * M, out * out
    return {"input": M.to_dict(), "axis": list(n), "theta": args.theta,
            "result": out.to_dict(), "square_preserved": sq1.isclose(sq0)}


def cmd_coords(args) -> dict:
    X = parse_event(args.event, args.c)
    d = parse_vector(args.dir)
    Xl = spacetime.lorentz_coords(X, args.v, d)
    Xg = spacetime.galilean_coords(X, args.v, d)
    gal_err = max(abs(a - b) for a, b in zip((Xl.t, *Xl.x), (Xg.t, *Xg.x)))
    return {"event": X.to_dict(), "v": args.v, "direction": list(d),
            "phi": spacetime.rapidity_from_speed(args.v, X.c),
            "lorentz": Xl.to_dict(), "galilean": Xg.to_dict(), "galilean_error": gal_err,
            "interval_before": spacetime.interval(X), "interval_after": spacetime.interval(Xl)}


def cmd_interval(args) -> dict:
    X = parse_event(args.event, args.c)
    return {"event": X.to_dict(), "interval": spacetime.interval(X)}


def cmd_field_split(args) -> dict:
    F = parse_multivector(args.F)
    E, B = fields.split_field(F)
    out = {"F": F.to_dict(), "E": _vec(E), "B": _vec(B)}
    if args.phi is not None or args.speed is not None:
        phi = _rapidity(args)
        d = parse_vector(args.dir)
        Ep, Bp = fields.frame_split(F, phi, d)
        out.update({"phi": phi, "direction": list(d), "E_prime": _vec(Ep), "B_prime": _vec(Bp)})
    return out


def _points(args) -> list[Event]:
    if not args.point:
        return [Event(0.3, (0.2, -0.1, 0.4), args.c)]
    return [parse_event(p, args.c) for p in args.point]


def _order(r1: float, r2: float, h1: float, h2: float) -> float | None:
    if r1 == 0 or r2 == 0:
        return None
    return math.log(r1 / r2) / math.log(h1 / h2)


def cmd_maxwell_check(args) -> dict:
    F, src, _ = fields.field_from_spec(parse_json(args.field))
    records = []
    for X in _points(args):
        res = fields.maxwell_residual(F, src, X, args.h)
        rec = {"event": X.to_dict(), "residual_norm": res.norm(),
               "four_residuals": fields.classical_split(F, src, X, args.h).to_dict()}
        if args.h2 is not None:
            r2 = fields.maxwell_residual(F, src, X, args.h2).norm()
            rec["residual_norm_h2"] = r2
            rec["order"] = _order(rec["residual_norm"], r2, args.h, args.h2)
        records.append(rec)
    return {"field": parse_json(args.field), "h": args.h, "h2": args.h2, "records": records}


def cmd_potential_check(args) -> dict:
    _, src, P = fields.field_from_spec(parse_json(args.field))
    records = []
    for X in _points(args):
        res = fields.potential_residual(P, src, X, args.h)
        rec = {"event": X.to_dict(), "wave_norm": res.wave.norm(), "lorentz": res.lorentz}
        if args.h2 is not None:
            r2 = fields.potential_residual(P, src, X, args.h2)
            rec["wave_norm_h2"] = r2.wave.norm()
            rec["order"] = _order(rec["wave_norm"], r2.wave.norm(), args.h, args.h2)
        records.append(rec)
    return {"field": parse_json(args.field), "h": args.h, "h2": args.h2, "records": records}


def cmd_kinematics(args) -> dict:
    c = args.c
    v = spacetime.speed_from_rapidity(args.phi, c) if args.phi is not None else args.speed
    d = parse_vector(args.dir)
    out = kinematics.kinematics_report(args.m0, v, d, c)
    P = kinematics.st_momentum(args.m0, v, d, c)
    out["P"] = P.to_dict()
    out["mass_shell"] = (P * P.cinv()).s.real
    out["rest_energy_sq"] = (args.m0 * c * c) ** 2
    if args.compose is not None:
        comp = spacetime.compose_collinear_boosts(
            out["phi"], spacetime.rapidity_from_speed(args.compose, c), d)
        out["composed"] = {"with": args.compose, "phi": comp.phi, "speed": comp.speed(c),
                           "speed_over_c": comp.speed(c) / c}
    if args.work:
        out["work_to_light"] = kinematics.work_to_light(args.m0, c)
    return out


def cmd_verify(args) -> dict:
    from .verify import run_all

    results = run_all(args.n, args.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    return {"seed": args.seed, "n_cases": args.n,
            "passed": all(r.passed for r in results),
            "suites": [r.to_dict() for r in results]}


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--c", type=float, default=1.0, help="speed of light (default 1)")
    common.add_argument("--h", type=float, default=1e-3, help="finite-difference step")
    common.add_argument("--seed", type=int, default=0, help="RNG seed for verify")
    common.add_argument("--json", action="store_true", help="compact single-line JSON output")

    p = argparse.ArgumentParser(prog="c3rel", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help, description=help)
        sp.set_defaults(func=func)
        return sp

    def add_rapidity(sp, required):
        g = sp.add_mutually_exclusive_group(required=required)
        g.add_argument("--phi", type=float, help="rapidity")
        g.add_argument("--speed", type=float, help="speed v (|v| < c)")

    sp = add("boost", cmd_boost, "active boost exp(-phi d/2) M exp(phi d/2)")
    sp.add_argument("mv", help="multivector JSON or basis name (1, i, e1, e2, e3)")
    sp.add_argument("--dir", default="e1", help="unit direction: e1 | [x,y,z] | x,y,z")
    add_rapidity(sp, True)

    sp = add("rotate", cmd_rotate, "active rotation exp(-theta i n/2) M exp(theta i n/2)")
    sp.add_argument("mv")
    sp.add_argument("--axis", default="e3")
    sp.add_argument("--theta", type=float, required=True, help="angle in radians")

    sp = add("coords", cmd_coords, "Lorentz and Galilean coordinates of an event")
    sp.add_argument("event", help='event JSON {"t":..., "x":[...], "c":...}')
    sp.add_argument("--v", type=float, required=True)
    sp.add_argument("--dir", default="e1")

    sp = add("interval", cmd_interval, "spacetime interval c^2 t^2 - |x|^2")
    sp.add_argument("event")

    sp = add("field-split", cmd_field_split, "split F = E + iB, optionally for a boosted observer")
    sp.add_argument("F", help="complex-vector field value as multivector JSON")
    sp.add_argument("--dir", default="e1")
    add_rapidity(sp, False)

    sp = add("maxwell-check", cmd_maxwell_check, "Maxwell residuals of a catalogued field")
    sp.add_argument("field", help='field JSON, e.g. {"kind":"plane_wave","k":1,"E0":1,'
                                  '"prop":[1,0,0],"pol":[0,1,0]}')
    sp.add_argument("--point", action="append", help="event JSON (repeatable)")
    sp.add_argument("--h2", type=float, help="second step for a convergence-order estimate")

    sp = add("potential-check", cmd_potential_check,
             "wave-equation and Lorentz-gauge residuals of a field's potential")
    sp.add_argument("field")
    sp.add_argument("--point", action="append")
    sp.add_argument("--h2", type=float)

    sp = add("kinematics", cmd_kinematics, "gamma, relative mass, energy and momentum")
    sp.add_argument("--m0", type=float, default=1.0, help="rest mass")
    add_rapidity(sp, True)
    sp.add_argument("--dir", default="e1")
    sp.add_argument("--compose", type=float, metavar="V2",
                    help="compose with a second collinear boost of speed V2")
    sp.add_argument("--work", action="store_true", help="work to accelerate m0 to c")

    sp = add("verify", cmd_verify, "run the randomized oracle and invariant suites")
    sp.add_argument("--n", type=int, default=1000, help="random cases per suite")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except C3Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(json.dumps(out, default=_json_default, indent=None if args.json else 2))
    if args.command == "verify" and not out["passed"]:
        return EXIT_FAIL
    return 0


def _json_default(o):
    if isinstance(o, np.generic):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"not JSON serializable: {type(o).__name__}")
