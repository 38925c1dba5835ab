"""``weylkit`` command line.

Exit status: 0 on success, 1 on a domain or I/O error (a JSON error record
goes to stderr), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .config import RunConfig
from .errors import InputError, WeylkitError
from .gprod import (
    GraphProductSpec,
    ball,
    brute_force_wpd_check,
    combinatorial_hull,
    format_normal_form,
    normal_form,
    parse_word,
)
from .gprod.normal_form import to_json as chamber_json
from .weyl import (
    CoxeterSystem,
    certify_straight,
    element_of_word,
    enumerate_roots,
    format_word,
    is_straight_up_to,
    length_and_reduced_word,
)
from .witness import WitnessCertificate, build_witness, dumps, verify_certificate


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _system(path: str) -> CoxeterSystem:
    data = _read_json(path)
    if isinstance(data, list):
        data = {"gcm": data}
    return CoxeterSystem.from_json(data)


def _spec(path: str) -> GraphProductSpec:
    return GraphProductSpec.from_json(_read_json(path))


def _chamber(spec: GraphProductSpec, text: str | None):
    return normal_form(spec, parse_word(spec, text or ""))


# --- subcommands --------------------------------------------------------------------


def cmd_classify(args, cfg):
    sys_ = _system(args.file)
    if sys_.gcm is None:
        raise InputError("classify needs a GCM")
    out = sys_.classification.to_json()
    out["coxeter_matrix"] = sys_.coxeter_matrix.to_json()
    out["crystallographic"] = True
    return out


def cmd_roots(args, cfg):
    sys_ = _system(args.file)
    roots = enumerate_roots(sys_, args.depth, cfg.root_cap)
    return {"depth": args.depth, "count": len(roots), "roots": [list(r.coords) for r in roots]}


def cmd_length(args, cfg):
    sys_ = _system(args.file)
    w = element_of_word(sys_, sys_.parse_word(args.word))
    ell, red = length_and_reduced_word(sys_, w)
    return {"word": args.word, "length": ell, "reduced_word": format_word(red)}


def cmd_straight(args, cfg):
    sys_ = _system(args.file)
    w = element_of_word(sys_, sys_.parse_word(args.word))
    n = args.n or cfg.n_straight
    cert = certify_straight(
        sys_, w, n, cfg.k_power, cfg.root_depth, root_cap=cfg.root_cap, conjugacy_budget=cfg.conjugacy_budget
    )
    out = cert.to_json()
    out["straight_up_to_n"] = is_straight_up_to(sys_, w, n)
    return out


def cmd_gp_normal(args, cfg):
    spec = _spec(args.spec)
    c = _chamber(spec, args.word)
    return {"normal_form": chamber_json(spec, c), "text": format_normal_form(spec, c), "length": len(c)}


def cmd_gp_ball(args, cfg):
    spec = _spec(args.spec)
    cs = ball(spec, args.radius, cfg.ball_cap)
    out = {"radius": args.radius, "size": len(cs)}
    if not args.count_only:
        out["chambers"] = [chamber_json(spec, c) for c in cs]
    return out


def cmd_gp_hull(args, cfg):
    spec = _spec(args.spec)
    seed = [_chamber(spec, s) for s in args.seed]
    H = combinatorial_hull(spec, seed, cfg.closure_cap)
    return {"size": len(H), "rounds": H.rounds, "chambers": [chamber_json(spec, c) for c in H.chambers]}


def cmd_gp_wpd(args, cfg):
    spec = _spec(args.spec)
    h, x = _chamber(spec, args.h), _chamber(spec, args.x)
    radius = args.radius if args.radius is not None else args.D - 1 + 2 * len(x)
    res = brute_force_wpd_check(spec, h, x, args.D, args.m, radius, cfg.ball_cap)
    return {
        "D": res.D,
        "m": res.m,
        "radius": res.radius,
        "required_radius": res.required_radius,
        "complete": res.complete,
        "degenerate": res.degenerate,
        "ball_size": res.ball_size,
        "size": res.size,
        "elements": [chamber_json(spec, g) for g in res.elements],
    }


def cmd_witness(args, cfg):
    spec = _spec(args.spec)
    cfg = cfg.updated(
        n_straight=args.n_straight, k_power=args.k_power, root_depth=args.root_depth, hull_window=args.hull_window
    )
    w0 = _read_json(args.w0) if args.w0 else None
    return build_witness(spec, cfg.witness_parameters(w0)).to_json()


def cmd_verify(args, cfg):
    data = _read_json(args.cert)
    spec = _spec(args.spec)
    try:
        WitnessCertificate.from_json(data)
    except (KeyError, TypeError):
        raise InputError("not a certificate") from None
    ok, issues = verify_certificate(data, spec)
    return {"ok": ok, "discrepancies": issues}


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylkit", description="Coxeter groups, buildings and witness certificates.")
    p.add_argument("--version", action="version", version=f"weylkit {__version__}")
    p.add_argument("--config", help="RunConfig JSON file")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--out", help="also write the JSON result to this file")
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "classify a generalized Cartan matrix")
    sp.add_argument("file")
    sp = add("roots", cmd_roots, "enumerate positive real roots")
    sp.add_argument("file")
    sp.add_argument("--depth", type=int, required=True)
    sp = add("length", cmd_length, "length and reduced word of a word")
    sp.add_argument("file")
    sp.add_argument("--word", required=True)
    sp = add("straight", cmd_straight, "straightness certificate for a word")
    sp.add_argument("file")
    sp.add_argument("--word", required=True)
    sp.add_argument("--n", type=int)

    sp = add("gp-normal", cmd_gp_normal, "normal form of a graph-product word")
    sp.add_argument("spec")
    sp.add_argument("--word", required=True)
    sp = add("gp-ball", cmd_gp_ball, "chambers in a gallery ball around the base chamber")
    sp.add_argument("spec")
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")
    sp = add("gp-hull", cmd_gp_hull, "combinatorial convex hull of seed chambers")
    sp.add_argument("spec")
    sp.add_argument("--seed", action="append", required=True, help="chamber word, repeatable")
    sp = add("gp-wpd", cmd_gp_wpd, "brute-force WPD set for h at x")
    sp.add_argument("spec")
    sp.add_argument("--h", required=True)
    sp.add_argument("--x", default="")
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--radius", type=int)

    sp = add("witness", cmd_witness, "build a witness certificate")
    sp.add_argument("spec")
    sp.add_argument("--n-straight", type=int)
    sp.add_argument("--k-power", type=int)
    sp.add_argument("--root-depth", type=int)
    sp.add_argument("--hull-window", type=int)
    sp.add_argument("--w0", help="JSON description of W_0 as a kernel")
    sp = add("verify", cmd_verify, "re-verify a certificate against its spec")
    sp.add_argument("cert")
    sp.add_argument("spec")
    return p


def _fail(code: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": code, "message": message}) + "\n")
    return 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig.load(args.config) if args.config else RunConfig()
        result = args.func(args, cfg)
        text = dumps(result)
        out = args.out or cfg.out
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        sys.stdout.write(text)
    except WeylkitError as exc:
        return _fail(exc.code, str(exc))
    except OSError as exc:
        return _fail("IoError", str(exc))
    except (ValueError, KeyError, TypeError) as exc:
        return _fail("InputError", str(exc))
    if args.command == "verify" and not result["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
