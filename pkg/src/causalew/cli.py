"""Batch driver: named verification suites with JSON and text reports.

Usage::

    python -m causalew --suite all --config configs/default.ini --out report.json

Exit status is 0 when every check passes, 1 when any check fails and 2
on configuration or runtime errors.
"""
from __future__ import annotations

import argparse
import configparser
import datetime as _dt
from fractions import Fraction
import json
import sys
import traceback

import numpy as np

from . import __version__, electroweak as ew, genfun, symbolic
from .biquaternion import Biquaternion, Idempotent, LorentzFactor, hermitian, scalar_part
from .worldline import (
    Worldline, retarded_frame, retarded_time, uniform_retarded_distance, validate_rule_table,
)

SCHEMA = 1
SUITES = ("symbolic", "rules", "pairings", "fourier", "amplitudes", "mass")

DEFAULTS = {
    "run": {"seed": "12345"},
    "symbolic": {"signature": "-1", "mode": "associative", "flip_rule": ""},
    "rules": {"points": "10", "tol": "1e-5", "t_range": "3 6", "x_range": "-2 2",
              "worldlines": "rest uniform hyperbolic circular", "xi_tol": "1e-9"},
    "worldline.rest": {"kind": "rest", "position": "0 0 0"},
    "worldline.uniform": {"kind": "uniform", "beta": "0.6 0 0", "position": "0 0 0"},
    "worldline.hyperbolic": {"kind": "hyperbolic", "g": "1.0", "axis": "0 0 1"},
    "worldline.circular": {"kind": "circular", "radius": "1.0", "omega": "0.5"},
    "mollifier": {"name": "poly"},
    "pairings": {"eps0": "0.1", "n_eps": "6", "tau": "0.3", "radius": "1.0",
                 "worldlines": "rest uniform hyperbolic", "tol_zero": "1e-6",
                 "tol_rel": "1e-4", "min_order": "1.95", "n_theta": "32", "n_phi": "64"},
    "coulomb": {"a0": "0.1", "n": "6", "radius": "1.0", "tol": "1e-6"},
    "fourier": {"q_values": "0.5 1 2 5", "eta0": "0.2", "eps0": "0.2", "n": "6",
                "damping": "exp", "tol": "1e-6"},
    "amplitudes": {"trials": "1000", "tol": "1e-12", "control_threshold": "1e-3", "q2": "1.0"},
    "constants": {"alpha": "1/137.036", "G_F_over_hbarc3": "1.166e-5", "hbarc": "0.1973269804"},
    "mass": {"expected": "51.5", "tol": "0.1", "printed": "51"},
}


class ConfigError(ValueError):
    pass


def number(text):
    """Parse a float, also accepting a ratio such as ``1/137.036``."""
    text = str(text).strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return float(num) / float(den)
        return float(text)
    except ValueError:
        raise ConfigError(f"not a number: {text!r}")


def numbers(text):
    return [number(t) for t in str(text).replace(",", " ").split()]


def load_config(path=None):
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str
    cp.read_dict(DEFAULTS)
    if path:
        try:
            with open(path) as fh:
                cp.read_file(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}")
        except configparser.Error as exc:
            raise ConfigError(f"malformed config: {exc}")
    return {s: dict(cp[s]) for s in cp.sections()}


def _worldline(cfg, name):
    key = f"worldline.{name}"
    if key not in cfg:
        raise ConfigError(f"no [{key}] section")
    try:
        return Worldline.from_config(cfg[key])
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad [{key}]: {exc}")


def _rule_table(cfg):
    sym = cfg["symbolic"]
    sig = int(number(sym["signature"]))
    flip = tuple(sym.get("flip_rule", "").split())
    try:
        return symbolic.RuleTable(sig, flip=flip)
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"bad [symbolic]: {exc}")


def _json_value(v):
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, np.ndarray):
        return [_json_value(x) for x in v.tolist()]
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float) and not np.isfinite(v):
        return str(v)
    return v


def entry(check_id, anchor, passed, measured, expected, tolerance, info=False, **details):
    e = {"check_id": check_id, "anchor": anchor,
         "status": "INFO" if info else ("PASS" if passed else "FAIL"),
         "measured": _json_value(measured), "expected": _json_value(expected),
         "tolerance": _json_value(tolerance)}
    if details:
        e["details"] = {k: _json_value(v) for k, v in details.items()}
    return e


# --- suites ---------------------------------------------------------------

def suite_symbolic(cfg, mode):
    table = _rule_table(cfg)
    s = table.signature
    box = symbolic.dalembertian(symbolic.generating_function(signature=s), table)
    ref = symbolic.reference_box_potential(signature=s)
    if s == 1:
        # with the mostly-minus signature the box operator changes sign
        ref = -ref
    out = [entry("box-generating-function", "box of (1/2) e R Ups", symbolic.expr_equal(box, ref),
                 str(box.canonicalize()), str(ref.canonicalize()), 0)]
    simplified = symbolic.assoc_simplify(box, mode)
    lw = symbolic.reference_lienard_wiechert(signature=s)
    shell = symbolic.reference_shell_term(signature=s)
    if s == 1:
        lw, shell = -lw, -shell
    rest = simplified - lw
    if mode == "strict":
        # no rewrite: the shell term keeps its derivative-of-delta part
        out.append(entry("shell-term-coefficient", "unsimplified box", True,
                         str(rest.canonicalize()), None, None, info=True, mode=mode))
        return out
    if mode == "schwartz":
        # xi times delta pairs to zero, leaving only the constant coefficient
        shell = symbolic.assoc_simplify(shell, "schwartz")
    out.append(entry("shell-term-coefficient", f"{mode} simplification of the box",
                     symbolic.expr_equal(rest, shell), str(rest.canonicalize()),
                     str(shell.canonicalize()), 0, mode=mode))
    return out


def suite_rules(cfg, seed):
    rc = cfg["rules"]
    table = _rule_table(cfg)
    rng = np.random.default_rng(seed)
    n = int(number(rc["points"]))
    tol = number(rc["tol"])
    t_lo, t_hi = numbers(rc["t_range"])
    x_lo, x_hi = numbers(rc["x_range"])
    out = []
    for name in rc["worldlines"].split():
        w = _worldline(cfg, name)
        pts = np.column_stack([rng.uniform(t_lo, t_hi, n), rng.uniform(x_lo, x_hi, (n, 3))])
        recs = validate_rule_table(w, pts, table, tol=tol, worldline_name=name)
        for rule in table.validated_rules():
            devs = [r["deviation"] for r in recs if r["rule"] == rule]
            worst = max(devs)
            out.append(entry(f"rule-{rule}-{name}", "gradient rule vs finite differences",
                             worst <= tol, worst, 0.0, tol, points=n))
    # invariant retarded distance against the closed-form three-dimensional expression
    xi_tol = number(rc["xi_tol"])
    worst = 0.0
    for beta in ((0.6, 0.0, 0.0), (0.3, -0.4, 0.2), (0.0, 0.0, 0.9)):
        w = Worldline.uniform(beta, (0.1, -0.2, 0.3))
        for p in np.column_stack([rng.uniform(t_lo, t_hi, n), rng.uniform(x_lo, x_hi, (n, 3))]):
            a, b = retarded_frame(w, p).xi, uniform_retarded_distance(w, p)
            worst = max(worst, abs(a - b) / abs(b))
    out.append(entry("xi-three-dimensional", "retarded distance, uniform motion",
                     worst <= xi_tol, worst, 0.0, xi_tol))
    tau = retarded_time(Worldline.rest(), (5.0, 3.0, 0.0, 0.0))
    out.append(entry("retarded-time-rest", "light-cone root", abs(tau - 2.0) <= 1e-12,
                     tau, 2.0, 1e-12))
    return out


def suite_pairings(cfg, mode):
    pc, cc = cfg["pairings"], cfg["coulomb"]
    table = _rule_table(cfg)
    moll = cfg["mollifier"]["name"]
    eps = genfun.eps_sweep(number(pc["eps0"]), int(number(pc["n_eps"])))
    T = genfun.TestFunction("bump", radius=number(pc["radius"]))
    out = []
    for name in pc["worldlines"].split():
        w = _worldline(cfg, name)
        tau = 0.0 if w.kind == "rest" else number(pc["tau"])
        recs = genfun.check_shell_pairings(
            w, [tau], T, eps, moll_name=moll, signature=table.signature, mode=mode,
            n_theta=int(number(pc["n_theta"])), n_phi=int(number(pc["n_phi"])),
            tol_zero=number(pc["tol_zero"]), tol_rel=number(pc["tol_rel"]),
            min_order=number(pc["min_order"]), table=table)
        for r in recs:
            extra = {k: r[k] for k in ("observed_order", "relative_deviation") if k in r}
            out.append(entry(f"{r['check']}-{name}", "delta-shell term paired with a bump",
                             r["pass"], r["extrapolated"], r["expected"], r["tolerance"], **extra))
    a_sweep = genfun.eps_sweep(number(cc["a0"]), int(number(cc["n"])))
    Tc = genfun.TestFunction("bump", radius=number(cc["radius"]))
    for r in genfun.coulomb_generating_check(a_sweep, Tc, tol=number(cc["tol"])):
        extra = {k: r[k] for k in ("decay_order",) if k in r}
        extra["samples"] = r["samples"]
        out.append(entry(r["check"], "Coulomb generating function", r["pass"], r["extrapolated"],
                         r["expected"], r["tolerance"], info=r.get("informational", False), **extra))
    return out


def suite_fourier(cfg):
    fc = cfg["fourier"]
    recs = genfun.fourier_checks(numbers(fc["q_values"]), eta0=number(fc["eta0"]),
                                 eps0=number(fc["eps0"]), n=int(number(fc["n"])),
                                 damping=fc["damping"], moll_name=cfg["mollifier"]["name"],
                                 tol=number(fc["tol"]))
    return [entry(f"{r['check']}-q={r['parameters']['q']:g}", "radial Fourier transform",
                  r["pass"], r["extrapolated"], r["expected"], r["tolerance"],
                  relative_deviation=r["relative_deviation"]) for r in recs]


def suite_amplitudes(cfg, seed):
    ac = cfg["amplitudes"]
    c = _constants(cfg)
    trials = int(number(ac["trials"]))
    tol = number(ac["tol"])
    out = []
    r = ew.verify_chirality(trials, seed, tol)
    out.append(entry("chirality", "weak amplitude keeps left parts only", r["pass"],
                     r["max_deviation"], 0.0, tol, trials=trials))
    r = ew.verify_chirality(trials, seed + 1, tol, mirror=True)
    out.append(entry("chirality-mirror", "conjugate idempotent keeps right parts", r["pass"],
                     r["max_deviation"], 0.0, tol, trials=trials))
    # right-handed initial state, exact rational arithmetic
    sig = Idempotent((Fraction(3, 5), Fraction(0), Fraction(4, 5)))
    Di = sig.sigma_bar * Biquaternion((Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 7)),
                                      (Fraction(2, 3), Fraction(0), Fraction(1), Fraction(-5)))
    Df = Biquaternion((Fraction(1), Fraction(2), Fraction(3), Fraction(4)),
                      (Fraction(5), Fraction(6), Fraction(7), Fraction(8)))
    val = scalar_part(hermitian(Df) * sig.sigma * Di)
    out.append(entry("right-handed-zero", "weak amplitude of a right-handed state", val == 0,
                     str(val), "0", 0))
    r = ew.verify_gauge_covariance(trials, seed + 2, tol, number(ac["control_threshold"]), c)
    out.append(entry("gauge-covariance", "compensated internal rotation",
                     r["max_deviation"] <= tol, r["max_deviation"], 0.0, tol, trials=trials))
    out.append(entry("gauge-control", "uncompensated internal rotation",
                     r["control_mean_deviation"] > r["control_threshold"],
                     r["control_mean_deviation"], f"> {r['control_threshold']}",
                     r["control_threshold"]))
    r = ew.em_sigma_independence(min(trials, 200), seed + 3, tol, number(ac["q2"]), c)
    out.append(entry("em-sigma-independence", "electromagnetic amplitude", r["pass"],
                     r["max_deviation"], 0.0, tol))
    p = ew.propagator_em(c.e2, LorentzFactor(), c)
    dev = (p.value - Biquaternion((0, 0, 0, 0), (1, 0, 0, 0))).max_abs()
    out.append(entry("em-propagator-unit", "electromagnetic propagator at q^2 = e^2", dev <= 1e-15,
                     dev, 0.0, 1e-15))
    return out


def _constants(cfg):
    k = cfg["constants"]
    try:
        return ew.CouplingConstants(alpha=number(k["alpha"]),
                                    G_F_over_hbarc3=number(k["G_F_over_hbarc3"]),
                                    hbarc=number(k["hbarc"]))
    except ValueError as exc:
        raise ConfigError(f"bad [constants]: {exc}")


def suite_mass(cfg):
    mc = cfg["mass"]
    c = _constants(cfg)
    m = ew.mass_estimate(c)
    expected, tol = number(mc["expected"]), number(mc["tol"])
    out = [entry("mass-estimate", "Fermi-limit boson mass", abs(m - expected) <= tol, m,
                 f"{expected:g} GeV ({mc['printed']} GeV rounded)", tol, unit="GeV")]
    gf = ew.fermi_constant(m, c.alpha)
    dev = abs(gf - c.G_F_over_hbarc3) / c.G_F_over_hbarc3
    out.append(entry("fermi-constant-inverse", "mass estimate round trip", dev <= 1e-12, gf,
                     c.G_F_over_hbarc3, 1e-12))
    out.append(entry("mass-estimate-half-coefficient", "coefficient 3/2 variant", True,
                     ew.mass_estimate(c, 1.5), None, None, info=True, unit="GeV"))
    out.append(entry("compton-length", "hbar c / M_W", True, c.lam, None, None, info=True, unit="fm"))
    return out


def run_suite(name, cfg, seed, mode):
    names = SUITES if name == "all" else (name,)
    entries = []
    for n in names:
        if n == "symbolic":
            entries += suite_symbolic(cfg, mode)
        elif n == "rules":
            entries += suite_rules(cfg, seed)
        elif n == "pairings":
            entries += suite_pairings(cfg, mode)
        elif n == "fourier":
            entries += suite_fourier(cfg)
        elif n == "amplitudes":
            entries += suite_amplitudes(cfg, seed)
        elif n == "mass":
            entries += suite_mass(cfg)
        else:
            raise ConfigError(f"unknown suite {n!r}")
        for e in entries:
            e.setdefault("suite", n)
    summary = {s: sum(1 for e in entries if e["status"] == s) for s in ("PASS", "FAIL", "INFO")}
    return {
        "schema": SCHEMA,
        "suite": name,
        "entries": entries,
        "summary": summary,
        "provenance": {"config": cfg, "seed": seed, "mode": mode, "version": __version__},
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(),
    }


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, list):
        return "[" + ",".join(_fmt(x) for x in v) + "]"
    if isinstance(v, str):
        return v.replace(" ", "_") if v else '""'
    return str(v)


def text_report(report):
    lines = [f"CHECK {e['check_id']} {e['status']} measured={_fmt(e['measured'])} "
             f"expected={_fmt(e['expected'])} tol={_fmt(e['tolerance'])}" for e in report["entries"]]
    s = report["summary"]
    lines.append(f"SUMMARY suite={report['suite']} pass={s['PASS']} fail={s['FAIL']} info={s['INFO']}")
    return "\n".join(lines) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="causalew", description=__doc__.splitlines()[0])
    p.add_argument("--suite", default="all", choices=SUITES + ("all",))
    p.add_argument("--config", help="INI configuration file (defaults are built in)")
    p.add_argument("--out", help="write the JSON report here and the text summary next to it")
    p.add_argument("--seed", type=int, help="override [run] seed")
    p.add_argument("--format", choices=("json", "text"), default="text", help="stdout format")
    p.add_argument("--mode", choices=("strict", "associative", "schwartz"),
                   help="distributional simplification mode (default from config)")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        seed = args.seed if args.seed is not None else int(number(cfg["run"]["seed"]))
        mode = args.mode or cfg["symbolic"]["mode"]
        if mode not in ("strict", "associative", "schwartz"):
            raise ConfigError(f"unknown mode {mode!r}")
        report = run_suite(args.suite, cfg, seed, mode)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 2
    text = text_report(report)
    blob = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(blob + "\n")
        with open(args.out.rsplit(".", 1)[0] + ".txt", "w") as fh:
            fh.write(text)
    sys.stdout.write(blob + "\n" if args.format == "json" else text)
    return 1 if report["summary"]["FAIL"] else 0


if __name__ == "__main__":
    sys.exit(main())
