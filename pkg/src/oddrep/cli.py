"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 unsupported domain value,
4 resource budget exceeded.  Reports are JSON on standard output;
diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from . import codec
from .errors import InputError, OddrepError
from .field import PrimeField, check_prime_bound
from .linalg import Matrix
from .ortho import BilinearSpace, classify
from .reptheory import (LINE_BUDGET, RepImage, c_infinity, extend_plus_one,
                        interleave_blocks, invariant_subspaces, is_g_irreducible,
                        is_odd, minimal_invariant_subspaces, quadratic_twist,
                        select_ht_weights)
from .surface import (CASE_N_MOD_8, builtin_case, normalize_case, surface_report)

DEFAULT_SEED = 0


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _field(ell: int) -> PrimeField:
    try:
        return PrimeField(ell)
    except InputError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise InputError(str(exc)) from None


def run_surface(args) -> dict:
    if args.case is not None:
        try:
            case = normalize_case(args.case)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        config = builtin_case(case, args.a1, args.a2, args.pairs, args.i4_star)
        defaulted = 0
        extra = {"case": case, "n_mod_8": CASE_N_MOD_8[case]}
    else:
        if args.config is None:
            raise InputError("give a configuration file or --case")
        config, defaulted = codec.config_from_json(codec.load_json(args.config))
        extra = {}
    report = surface_report(config, defaulted)
    return {**extra, "input": codec.config_to_json(config),
            "report": codec.surface_report_to_json(report)}


def run_verdicts(args) -> dict:
    rep = codec.rep_from_json(codec.load_json(args.rep))
    out: dict = {}
    if args.command == "classify":
        rng = np.random.default_rng(args.seed)
        out["seed"] = args.seed
        out["generators"] = [codec.verdict_to_json(classify(g, rep.space, rng))
                             for g in rep.generators]
        out["conjugation"] = codec.verdict_to_json(classify(rep.conjugation, rep.space, rng))
    elif args.command == "oddness":
        check_prime_bound(rep.field, rep.dim)
        out.update(codec.oddness_to_json(is_odd(rep)))
    else:
        subs = invariant_subspaces(rep, args.budget)
        minimal = minimal_invariant_subspaces(rep, args.budget)
        out["g_irreducible"] = is_g_irreducible(rep, args.budget)
        out["invariant_subspaces"] = len(subs)
        out["subspaces"] = [{"dim": s.dim, "basis": [list(r) for r in s.basis],
                             "totally_isotropic": rep.space.is_totally_isotropic(s),
                             "minimal": s in minimal}
                            for s in subs]
    return out


def _parse_signs(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"bad sign list {text!r}") from None


def run_construct(args) -> dict:
    kind = args.kind
    if kind == "c_inf":
        if args.N is None or args.ell is None:
            raise InputError("c_inf needs --N and --ell")
        return codec.matrix_to_json(c_infinity(args.N, _field(args.ell)))
    if kind == "interleave":
        if args.blocks is None or args.ell is None:
            raise InputError("interleave needs --blocks and --ell")
        F = _field(args.ell)
        raw = codec.load_json(args.blocks)
        if not isinstance(raw, list):
            raise InputError("--blocks must be a JSON list")
        blocks = [codec.matrix_from_json(b, F) if isinstance(b, dict) else Matrix(F, b) for b in raw]
        return codec.matrix_to_json(interleave_blocks(blocks))
    if args.rep is None:
        raise InputError(f"{kind} needs a representation image")
    rep = codec.rep_from_json(codec.load_json(args.rep))
    if kind == "extend":
        return codec.rep_to_json(extend_plus_one(rep))
    if args.signs is None:
        raise InputError("twist needs --signs")
    return codec.rep_to_json(quadratic_twist(rep, _parse_signs(args.signs)))


def run_weights(args) -> dict:
    w = select_ht_weights(args.n, args.sum)
    return {"pairs": [list(p) for p in w.pairs]}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oddrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("surface", help="trace calculator for a real elliptic surface")
    s.add_argument("config", nargs="?", help="configuration JSON (path, '-' or inline)")
    s.add_argument("--case", help="builtin configuration: 1, 2, 3_O, 3_Omega or 4")
    s.add_argument("--a1", type=int, default=0, help="real I0* fibres, all components real")
    s.add_argument("--a2", type=int, default=0, help="real I0* fibres, all but two real")
    s.add_argument("--pairs", type=int, default=0, help="conjugate pairs of I0* fibres")
    s.add_argument("--i4-star", default="all", choices=["all", "all_but_two"])

    for name, help_ in (("classify", "O / SO / Omega membership of each matrix"),
                        ("oddness", "oddness at the conjugation"),
                        ("irreducible", "G-irreducibility via invariant subspaces")):
        v = sub.add_parser(name, help=help_)
        v.add_argument("rep", help="representation image JSON (path, '-' or inline)")
        v.add_argument("--seed", type=int, default=DEFAULT_SEED)
        v.add_argument("--budget", type=int, default=LINE_BUDGET)

    c = sub.add_parser("construct", help="build matrices and images")
    c.add_argument("kind", choices=["interleave", "c_inf", "extend", "twist"])
    c.add_argument("rep", nargs="?", help="representation image JSON for extend / twist")
    c.add_argument("--N", type=int)
    c.add_argument("--ell", type=int)
    c.add_argument("--blocks", help="JSON list of 2x2 blocks")
    c.add_argument("--signs", help="comma-separated +-1, one per generator then conjugation")

    w = sub.add_parser("weights", help="distinct weight pairs with equal sums")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--sum", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"surface": run_surface, "classify": run_verdicts, "oddness": run_verdicts,
                "irreducible": run_verdicts, "construct": run_construct, "weights": run_weights}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            payload = handlers[args.command](args)
        except OddrepError as exc:
            sys.stderr.write(f"oddrep: {type(exc).__name__}: {exc}\n")
            return exc.exit_code
        except ValueError as exc:
            sys.stderr.write(f"oddrep: {exc}\n")
            return 2
    if caught and isinstance(payload, dict) and args.command != "construct":
        payload.setdefault("warnings", [])
        payload["warnings"] = list(payload["warnings"]) + [str(w.message) for w in caught]
    for w in caught:
        sys.stderr.write(f"oddrep: warning: {w.message}\n")
    _emit(payload)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
