"""Command-line surface: evaluation, the exact table, correspondences and
the verification suite, with deterministic JSON output.

Exit codes: 0 success, 1 verification failure, 2 argument errors.
Complex arguments are written like ``0.1+1.2i`` (no spaces); the point at
infinity serializes as the string "inf".
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import eisenstein, zeta_algebra
from .config import EvalConfig, QSeriesConfig
from .correspondence import (
    EQUIVARIANT_NAMES,
    FORM_NAMES,
    lift_form_to_zeta,
    m_inverse,
    m_transform,
    named_equivariant,
    named_form,
)
from .groups import CongruenceGroup
from .lattice import is_infinity
from .verification import SUITE_ORDER, run_suite
from .weierstrass import eta_pair, legendre_defect, wp, wp_prime, zeta_w
from .zeta_algebra import h_n_eval, table_rows


@dataclass(frozen=True)
class CliConfig:
    """Defaults for the command-line surface."""

    qseries_terms: int = 64
    direct_sum_radius: int = 200
    quad_points: int = 128
    tol: float = 1e-7
    seed: int = 42
    output: str = "json"


DEFAULT_CLI = CliConfig()

# fixed generic points used for the sample evaluations of `correspond`
SAMPLE_TAUS = (0.1 + 1.1j, -0.2 + 1.3j, 0.3 + 0.9j, 1.7j, 0.25 + 1.05j)


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' / 'a-bi' (also plain reals and 'bi')."""
    s = text.strip().replace(" ", "")
    if s.endswith(("i", "I")):
        s = s[:-1] + "j"
    try:
        return complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}")


def parse_group(text: str) -> CongruenceGroup:
    try:
        return CongruenceGroup.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_tolerance(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError("tolerance must lie strictly in (0, 1)")
    return value


def jsonify(obj):
    """Recursively encode values for JSON: complex -> {re, im}, inf -> 'inf'."""
    if is_infinity(obj):
        return "inf"
    if isinstance(obj, complex):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonify(v) for v in obj]
    return obj


def _emit(payload: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(jsonify(payload), sort_keys=True, indent=2))
    else:
        _emit_text(jsonify(payload))


def _emit_text(obj, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}{k} = {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent)
                print()
            else:
                print(f"{pad}{v}")
    else:
        print(f"{pad}{obj}")


def _eval_config(args) -> EvalConfig:
    return EvalConfig(
        qseries=QSeriesConfig(terms=args.terms),
        direct_sum_radius=args.radius,
        quad_points=args.quad_points,
    )


_Z_FNS = ("wp", "wp_prime", "zeta")
_TAU_FNS = ("eta1", "eta2", "g2", "g3", "G2", "E2", "delta")


def _cmd_eval(args, parser) -> int:
    cfg = _eval_config(args)
    fn = args.fn
    tau = args.tau
    payload = {"fn": fn, "tau": tau}
    if fn in _Z_FNS:
        if args.z is None:
            parser.error(f"{fn} requires --z")
        payload["z"] = args.z
        value = {
            "wp": wp,
            "wp_prime": wp_prime,
            "zeta": zeta_w,
        }[fn](tau, args.z, cfg)
    elif fn in _TAU_FNS:
        if fn == "eta1":
            value = eta_pair(tau, cfg).eta1
        elif fn == "eta2":
            value = eta_pair(tau, cfg).eta2
        elif fn == "g2":
            value = eisenstein.g2_g3(tau, cfg.qseries)[0]
        elif fn == "g3":
            value = eisenstein.g2_g3(tau, cfg.qseries)[1]
        elif fn == "G2":
            value = eisenstein.g_big2(tau, cfg.qseries)
        elif fn == "E2":
            value = eisenstein.e2(tau, cfg.qseries)
        else:
            value = eisenstein.delta(tau, cfg.qseries)
    elif fn.startswith("f_n:"):
        try:
            n = int(fn.split(":", 1)[1])
            rational = zeta_algebra.f_n(n)
        except ValueError as exc:
            parser.error(str(exc))
        if rational is None:
            parser.error(f"f_{n} is undefined (Psi_{n} = 0)")
        g2v, g3v = eisenstein.g2_g3(tau, cfg.qseries)
        value = rational.evaluate(g2v, g3v)
    elif fn.startswith("h_n:"):
        try:
            n = int(fn.split(":", 1)[1])
            value = h_n_eval(n, tau, cfg)
        except ValueError as exc:
            parser.error(str(exc))
    else:
        parser.error(f"unknown function {fn!r}")
    payload["value"] = value
    _emit(payload, args.output)
    return 0


_ZETA_SPECS = ("weierstrass", "identity", "z_n:<n>")


def _cmd_quasiperiods(args, parser) -> int:
    from .correspondence import (
        identity_zeta_spec,
        power_zeta_spec,
        quasi_periods,
        weierstrass_zeta_spec,
    )

    cfg = _eval_config(args)
    name = args.zeta
    if name == "weierstrass":
        spec = weierstrass_zeta_spec()
    elif name == "identity":
        spec = identity_zeta_spec()
    elif name.startswith("z_n:"):
        try:
            spec = power_zeta_spec(int(name.split(":", 1)[1]), cfg)
        except ValueError as exc:
            parser.error(str(exc))
    else:
        parser.error(f"unknown zeta spec {name!r}; choose from {_ZETA_SPECS}")
    periods = quasi_periods(spec, args.tau, cfg)
    payload = {
        "zeta": name,
        "tau": args.tau,
        "H1": periods.h1,
        "Htau": periods.h_tau,
        "legendre_defect": legendre_defect(args.tau, cfg),
    }
    _emit(payload, args.output)
    return 0


def _cmd_table(args, parser) -> int:
    rows = table_rows(args.max_n)
    if args.format == "json":
        payload = {
            "rows": [
                {
                    "n": r.n,
                    "phi": r.phi.format(),
                    "psi": r.psi.format(),
                    "f": r.f.format() if r.f is not None else None,
                    "weight_phi": r.weight_phi,
                    "weight_psi": r.weight_psi,
                }
                for r in rows
            ]
        }
        print(json.dumps(jsonify(payload), sort_keys=True, indent=2))
    elif args.format == "text":
        header = f"{'n':>2}  {'phi':<32} {'psi':<22} {'f':<34}"
        print(header)
        print("-" * len(header))
        for r in rows:
            f_str = r.f.format() if r.f is not None else "-"
            print(f"{r.n:>2}  {r.phi.format():<32} {r.psi.format():<22} {f_str:<34}")
    else:
        print("\\begin{array}{c|c|c|c}")
        print("n & \\Phi_n & \\Psi_n & f_n \\\\\\hline")
        for r in rows:
            f_str = r.f.format(latex=True) if r.f is not None else "-"
            print(
                f"{r.n} & {r.phi.format(latex=True)} & "
                f"{r.psi.format(latex=True)} & {f_str} \\\\"
            )
        print("\\end{array}")
    return 0


def _descriptor_payload(kind: str, name: str, group, samples: list) -> dict:
    return {"kind": kind, "name": name, "group": str(group), "samples": samples}


def _cmd_correspond(args, parser) -> int:
    cfg = _eval_config(args)
    if (args.form is None) == (args.equivariant is None):
        parser.error("provide exactly one of --form / --equivariant")
    if args.form is not None:
        try:
            form = named_form(args.form, cfg)
        except ValueError as exc:
            parser.error(str(exc))
        if args.direction == "to-equivariant":
            h = m_transform(form, cfg)
            samples = [{"tau": t, "value": h.value(t)} for t in SAMPLE_TAUS]
            payload = _descriptor_payload("equivariant", h.name, h.group, samples)
        elif args.direction == "to-zeta":
            spec = lift_form_to_zeta(form)
            samples = [
                {"tau": t, "phi": spec.phi(t), "psi": spec.psi(t)}
                for t in SAMPLE_TAUS
            ]
            payload = _descriptor_payload("elliptic-zeta", spec.name, spec.group, samples)
            payload["weight"] = spec.weight_k
        else:
            parser.error("--form supports --direction to-equivariant | to-zeta")
    else:
        if args.direction != "to-form":
            parser.error("--equivariant supports --direction to-form")
        try:
            h = named_equivariant(args.equivariant, cfg)
            form = m_inverse(h, cfg)
        except ValueError as exc:
            parser.error(str(exc))
        samples = [{"tau": t, "value": form.value(t)} for t in SAMPLE_TAUS]
        payload = _descriptor_payload("form", form.name, form.group, samples)
        payload["weight"] = form.weight
    _emit(payload, args.output)
    return 0


def _cmd_verify(args, parser) -> int:
    cfg = _eval_config(args)
    reports = run_suite(
        suite=args.suite,
        group=args.group,
        samples=args.samples,
        seed=args.seed,
        cfg=cfg,
        tol=args.tol,
    )
    all_passed = all(r.passed for r in reports)
    payload = {
        "suite": args.suite,
        "group": str(args.group) if args.group else "SL2Z",
        "passed": all_passed,
        "reports": [r.to_dict() for r in reports],
    }
    _emit(payload, args.output)
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellzeta",
        description="Elliptic zeta functions, modular forms and equivariant functions",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--terms", type=int, default=DEFAULT_CLI.qseries_terms,
                        help="minimum retained q-powers (default 64)")
    common.add_argument("--radius", type=int, default=DEFAULT_CLI.direct_sum_radius,
                        help="square radius of oracle lattice sums (default 200)")
    common.add_argument("--quad-points", type=int, default=DEFAULT_CLI.quad_points,
                        help="Gauss-Legendre nodes for period integrals (default 128)")
    common.add_argument("--seed", type=int, default=DEFAULT_CLI.seed)
    common.add_argument("--output", choices=("json", "text"), default=DEFAULT_CLI.output)

    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate one of the named functions at tau (and z)")
    p_eval.add_argument("fn", help="wp | wp_prime | zeta | eta1 | eta2 | g2 | g3 | "
                                   "G2 | E2 | delta | f_n:<n> | h_n:<n>")
    p_eval.add_argument("--tau", type=parse_complex, required=True)
    p_eval.add_argument("--z", type=parse_complex)

    p_qp = sub.add_parser("quasiperiods", parents=[common],
                          help="quasi-periods H(1), H(tau) of an elliptic zeta spec")
    p_qp.add_argument("--tau", type=parse_complex, required=True)
    p_qp.add_argument("--zeta", default="weierstrass",
                      help=f"one of {_ZETA_SPECS} (default weierstrass)")

    p_table = sub.add_parser("table", parents=[common],
                             help="exact coefficient table of the p-power recurrence")
    p_table.add_argument("--max-n", type=int, default=6)
    p_table.add_argument("--format", choices=("json", "text", "latex"), default="json")

    p_corr = sub.add_parser("correspond", parents=[common],
                            help="apply one of the correspondence arrows")
    p_corr.add_argument("--form", help=f"form name: {FORM_NAMES}")
    p_corr.add_argument("--equivariant", help=f"equivariant name: {EQUIVARIANT_NAMES}")
    p_corr.add_argument("--direction", required=True,
                        choices=("to-equivariant", "to-zeta", "to-form"))

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the numeric certification suite")
    p_verify.add_argument("--suite", default="all",
                          choices=("all",) + SUITE_ORDER)
    p_verify.add_argument("--group", type=parse_group, default=None,
                          help='e.g. "SL2Z", "Gamma0(2)", "Gamma(3)"')
    p_verify.add_argument("--samples", type=int, default=None,
                          help="override the per-check sample counts")
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override the per-check tolerances")

    return parser


_COMMANDS = {
    "eval": _cmd_eval,
    "quasiperiods": _cmd_quasiperiods,
    "table": _cmd_table,
    "correspond": _cmd_correspond,
    "verify": _cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
