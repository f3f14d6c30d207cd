"""Command-line front end.

Exit codes: 0 everything verified, 1 a mathematical check failed (the
report carries the witness), 2 configuration or usage error, 3 a window
cap was hit before the computation closed up.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import ConfigError, RunConfig, load_config
from .finite import ModuleSpecError, WindowCapError, a_module, validate_a_module, w2_sigma0
from .gradings import Kind, check_gradings, decompose_window
from .liealg import algebra_from_json, automorphism_from_json, validate_automorphisms
from .loopmod import (LoopModule, ModuleParams, check_B_psi_membership, check_d0_vs_affine, check_irreducible_window,
                      check_module_axioms, check_tau0_characters, check_top_space, character_json,
                      tau0_quotient_character, validate_params)
from .multiloop import Multiloop, check_assumptions_213
from .reports import Report, jsonable
from .tau import Tau, check_cocycle_values, check_da_equivariance, check_jacobi, da_samples
from .thin import thin_cover_lift_restrict, trivial_grading_example, z2_example

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class Run:
    """Collects reports for one subcommand and writes them at the end."""

    def __init__(self, cfg: RunConfig, command: str, out: str | None):
        self.cfg, self.command = cfg, command
        self.out = Path(out) if out else None
        self.reports: list[Report] = []
        self.extra: dict = {}

    def add(self, rep: Report) -> Report:
        self.reports.append(rep)
        return rep

    def summary(self, verdicts=None) -> dict:
        out = {"command": self.command, "config": self.cfg.name, "seed": self.cfg.seed,
               "cocycle": self.cfg.cocycle.to_json(), "ok": all(r.ok for r in self.reports),
               "reports": {r.name: "pass" if r.ok else "fail" for r in self.reports}}
        if verdicts is not None:
            out["verdicts"] = verdicts
        return out

    def finish(self, code: int, verdicts=None) -> int:
        summary = self.summary(verdicts)
        if code == EXIT_OK and not summary["ok"]:
            code = EXIT_FAIL
        summary["exit"] = code
        if self.out is not None:
            self.out.mkdir(parents=True, exist_ok=True)
            for rep in self.reports:
                _write(self.out / f"{_slug(rep.name)}.json", rep.to_json())
            for name, data in self.extra.items():
                _write(self.out / f"{name}.json", data)
            _write(self.out / "summary.json", summary)
        print(_dumps(summary))
        for rep in self.reports:
            for c in rep.failures():
                print(f"FAIL [{rep.name}] {c.clause}: {_dumps(jsonable(c.witness))[:400]}", file=sys.stderr)
        return code


def _dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def _write(path: Path, data):
    path.write_text(_dumps(data) + "\n", encoding="utf-8")


def _slug(name: str) -> str:
    name = name.replace("'", " prime")
    return "_".join("".join(ch if ch.isalnum() else " " for ch in name).split()).lower()


# -- building blocks -------------------------------------------------------------------------


def build_algebra(cfg: RunConfig):
    try:
        alg = algebra_from_json(cfg.algebra)
        autos = [automorphism_from_json(alg, a) for a in cfg.automorphisms]
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"cannot build algebra/automorphisms: {exc}") from exc
    return alg, autos


def gate(run: Run):
    """Automorphism validation and the standing assumptions; returns τ or None."""
    alg, autos = build_algebra(run.cfg)
    rep = run.add(validate_automorphisms(alg, autos))
    if not rep.ok:
        return None
    ml = Multiloop(alg, autos, run.cfg.a1_as_b1)
    rep = run.add(check_assumptions_213(alg, autos, run.cfg.a1_as_b1, ml=ml))
    if not rep.ok:
        return None
    return Tau(ml, run.cfg.cocycle)


def cmd_verify_algebra(run: Run) -> int:
    cfg = run.cfg
    tau = gate(run)
    if tau is None:
        return run.finish(EXIT_FAIL)
    run.add(check_jacobi(tau, tau.stratified_triples(cfg.samples["jacobi"], cfg.seed)))
    run.add(check_da_equivariance(tau, da_samples(tau, cfg.samples["da"], cfg.seed)))
    run.add(check_cocycle_values(tau))
    run.add(check_gradings(tau, seed=cfg.seed))
    return run.finish(EXIT_OK)


def cmd_check_jacobi(run: Run) -> int:
    cfg = run.cfg
    alg, autos = build_algebra(cfg)
    tau = Tau(Multiloop(alg, autos, cfg.a1_as_b1), cfg.cocycle)
    run.add(check_jacobi(tau, tau.stratified_triples(cfg.samples["jacobi"], cfg.seed)))
    return run.finish(EXIT_OK)


def load_params(cfg: RunConfig, tau: Tau) -> ModuleParams:
    if not cfg.module:
        raise ConfigError(f"{cfg.source}: no module parameters")
    try:
        return ModuleParams.from_json(cfg.module, tau.n)
    except ModuleSpecError as exc:
        raise ConfigError(str(exc)) from exc


def build_modules(run: Run, tau: Tau):
    """(T′, S′, W2) or None after recording the rejecting report."""
    params = load_params(run.cfg, tau)
    rep = run.add(validate_params(params, tau))
    if not rep.ok:
        return None
    try:
        w2 = a_module(tau.ml, params.w2)
    except (ModuleSpecError, KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"W2: {exc}") from exc
    rep = run.add(validate_a_module(tau.ml, w2))
    if not rep.ok:
        return None
    w2s = w2_sigma0(tau.ml, w2, cap=run.cfg.cap)
    return LoopModule(tau, params, w2, "T'"), LoopModule(tau, params, w2s, "S'"), w2


def _renamed(rep: Report, name: str) -> Report:
    rep.name = name
    return rep


def thin_report(run: Run, tau: Tau, w2) -> Report:
    cfg = run.cfg
    if cfg.thin:
        try:
            data = z2_example(tau.ml, cfg.thin.get("h0", 1), cfg.thin.get("z", 1))
        except ValueError as exc:
            raise ConfigError(f"thin: {exc}") from exc
    elif len(set(w2.grades)) == 1:
        data = trivial_grading_example(tau.ml, w2)
    else:
        rep = Report("thin covering")
        rep.add("thin covering lift/restrict (needs a 'thin' section for a graded W2)", None)
        return rep
    return _renamed(thin_cover_lift_restrict(tau.ml, data, cfg.cap), "thin covering")


def cmd_verify_modules(run: Run) -> int:
    cfg = run.cfg
    tau = gate(run)
    if tau is None:
        return run.finish(EXIT_FAIL)
    built = build_modules(run, tau)
    if built is None:
        return run.finish(EXIT_FAIL)
    tprime, sprime, w2 = built
    win = cfg.window
    n = cfg.samples["axioms"]
    ax_t = run.add(_renamed(check_module_axioms(tprime, n, cfg.seed, bound=win.k), "T' axioms"))
    ax_s = run.add(_renamed(check_module_axioms(sprime, n, cfg.seed, bound=win.k), "S' axioms"))
    irr_t = run.add(_renamed(check_irreducible_window(tprime, win.k, win.k - 1), "T' irreducible"))
    irr_s = run.add(_renamed(check_irreducible_window(sprime, win.k, win.k - 1), "S' irreducible"))
    top = run.add(check_top_space(tprime, sprime, win.k))
    bpsi = run.add(check_B_psi_membership(sprime, win.k))
    ch55 = run.add(check_tau0_characters(tprime, sprime, win))
    ch56 = run.add(check_d0_vs_affine(tprime, sprime, cfg.d0_window))
    thin = run.add(thin_report(run, tau, w2))
    run.extra["characters"] = {"window": win.to_json(), "T'": character_json(tprime.character(win.k), tau.n),
                               "S'": character_json(sprime.character(win.k, win.depth), tau.n),
                               "comparisons": jsonable(getattr(ch55, "characters", None))}
    verdicts = {
        "affine top: T' is an irreducible tau^0-module": _verdict(ax_t, irr_t),
        "top space: S' is irreducible and its singular vectors are T'": _verdict(ax_s, irr_s, top, bpsi),
        "tau_0 induction from T' has the character of S'": _verdict(ch55),
        "d0 induction from S' matches affine induction from T'": _verdict(ch56),
        "thin covering lifts and restricts": _verdict(thin),
    }
    return run.finish(EXIT_OK, verdicts)


def _verdict(*reps) -> str:
    if any(not r.ok for r in reps):
        return "fail"
    if all(c.status == "skip" for r in reps for c in r.checks):
        return "skip"
    return "pass"


def cmd_decompose(run: Run, kind: str) -> int:
    cfg = run.cfg
    alg, autos = build_algebra(cfg)
    tau = Tau(Multiloop(alg, autos, cfg.a1_as_b1), cfg.cocycle)
    win = cfg.window
    k0_range = [0] if kind == "tau0" else range(-win.depth, win.depth + 1)
    rows = decompose_window(tau, Kind(kind), k0_range, win.k)
    run.extra[f"decompose_{kind}"] = {"kind": kind, "window": win.to_json(), "symbols": rows}
    if run.out is None:
        print(_dumps(run.extra[f"decompose_{kind}"]))
        return EXIT_OK
    return run.finish(EXIT_OK)


def cmd_character(run: Run) -> int:
    cfg = run.cfg
    tau = gate(run)
    if tau is None:
        return run.finish(EXIT_FAIL)
    built = build_modules(run, tau)
    if built is None:
        return run.finish(EXIT_FAIL)
    tprime, sprime, _ = built
    win = cfg.window
    ch, _ = tau0_quotient_character(tprime, win)
    run.extra["characters"] = {"window": win.to_json(), "T'": character_json(tprime.character(win.k), tau.n),
                               "S'": character_json(sprime.character(win.k, win.depth), tau.n),
                               "tau0_quotient_of_T'": character_json(ch, tau.n)}
    if run.out is None:
        print(_dumps(run.extra["characters"]))
        return EXIT_OK
    return run.finish(EXIT_OK)


# -- entry point -------------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toroidal", description="Exact checks for twisted full toroidal Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", required=True, help="config file, or the name of a shipped config")
        sp.add_argument("--seed", type=int, help="sampling seed (overrides the config)")
        sp.add_argument("--window", help="k=K,depth=D,height=H")
        sp.add_argument("--cocycle", help="c1,c2")
        sp.add_argument("--out", help="directory for JSON reports")
        return sp

    common(sub.add_parser("verify-algebra", help="automorphisms, assumptions, Jacobi, dA, cocycle values"))
    common(sub.add_parser("verify-modules", help="T', W2(sigma_0), S' and the window checks"))
    d = common(sub.add_parser("decompose", help="classify basis symbols in a degree window"))
    d.add_argument("--kind", choices=["affine", "d0", "tau0"], default="affine")
    common(sub.add_parser("character", help="character tables of T', S' and the tau_0 quotient"))
    common(sub.add_parser("check-jacobi", help="Jacobi identity on seeded stratified triples"))
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = load_config(args.config).with_overrides(args.seed, args.window, args.cocycle)
        run = Run(cfg, args.command, args.out)
        if args.command == "verify-algebra":
            return cmd_verify_algebra(run)
        if args.command == "verify-modules":
            return cmd_verify_modules(run)
        if args.command == "decompose":
            return cmd_decompose(run, args.kind)
        if args.command == "character":
            return cmd_character(run)
        return cmd_check_jacobi(run)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WindowCapError as exc:
        print(f"window cap: {exc}", file=sys.stderr)
        return EXIT_CAP
