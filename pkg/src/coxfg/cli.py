"""Command-line front end.

    coxfg verdict CONFIG
    coxfg curves --type minus1|minus2 [--degree-bound B] CONFIG
    coxfg roots CONFIG
    coxfg cone --which eff|nef [--hilbert] CONFIG
    coxfg orbit --class C --limit N CONFIG
    coxfg witness --count N CONFIG
    coxfg chi --class C CONFIG

Every subcommand takes --format table|json and --output-dir DIR.
Exit codes: 0 success (Unknown verdicts included), 2 invalid input,
3 capacity or window errors, 4 internal invariant breach.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .cones import effective_cone, hilbert_basis, nef_cone
from .config import SurfaceConfig
from .curves import (ClassQuery, effective_roots, enumerate_classes, minus_one_curves,
                     minus_two_curves, passes_recognition, root_span_rank, sorted_classes)
from .errors import CoxError, InvalidConfigError, NotFinitelyGeneratedError
from .lattice import (DivisorClass, SurfaceModel, arithmetic_genus, euler_characteristic,
                      h0_lower_bound, k_degree, self_int)
from .verdict import DEFAULT_WITNESS, cross_check, decide
from .weyl import infinitude_witness, orbit, simple_roots


def _strs(classes) -> list[str]:
    return [str(c) for c in sorted_classes(classes)]


def _load(path: str) -> SurfaceConfig:
    p = Path(path)
    if not p.is_file():
        raise InvalidConfigError(f"{path}: no such file")
    return SurfaceConfig.load(p)


def _parse_class(text: str, r: int) -> DivisorClass:
    try:
        return DivisorClass.parse(text, r)
    except CoxError:
        raise
    except (ValueError, TypeError) as exc:
        raise InvalidConfigError(str(exc)) from exc


# subcommands ---------------------------------------------------------------

def cmd_verdict(cfg: SurfaceConfig, args) -> dict[str, Any]:
    v = decide(cfg, args.witness_count)
    out = v.to_dict()
    out["cross_check"] = cross_check(cfg, v).to_dict()
    return out


def cmd_curves(cfg: SurfaceConfig, args) -> dict[str, Any]:
    b = args.degree_bound
    if args.type == "minus2":
        curves = minus_two_curves(cfg) if b is None else minus_two_curves(cfg, window=b)
    elif b is None:
        if cfg.r >= 9:
            # an unbounded search; enumerate_classes raises the capacity error
            enumerate_classes(cfg.r, ClassQuery(-1, -1))
        curves = minus_one_curves(cfg)
    else:
        curves2 = minus_two_curves(cfg)
        curves = [c for c in enumerate_classes(cfg.r, ClassQuery(-1, -1, b))
                  if passes_recognition(c, curves2)]
    return {"type": args.type, "degree_bound": b, "count": len(curves), "classes": _strs(curves)}


def cmd_roots(cfg: SurfaceConfig, args) -> dict[str, Any]:
    roots = effective_roots(cfg)
    return {"count": len(roots), "roots": _strs(roots), "root_span_rank": root_span_rank(cfg)}


def cmd_cone(cfg: SurfaceConfig, args) -> dict[str, Any]:
    cone = effective_cone(cfg) if args.which == "eff" else nef_cone(cfg)
    out = {
        "which": args.which,
        "kind": cone.kind,
        "generators": _strs(cone.generators),
        "extremal_rays": _strs(cone.extremal_rays),
        "degenerate": cone.degenerate,
        "hilbert_basis": None,
    }
    if args.hilbert:
        out["hilbert_basis"] = _strs(hilbert_basis(cone))
    return out


def cmd_orbit(cfg: SurfaceConfig, args) -> dict[str, Any]:
    x = _parse_class(args.cls, cfg.r)
    if args.limit < 1:
        raise InvalidConfigError("--limit must be at least 1")
    classes, exceeded = orbit(x, simple_roots(cfg.r), args.limit)
    return {"class": str(x), "limit": args.limit, "count": len(classes), "exceeded": exceeded,
            "classes": [str(c) for c in classes]}


def cmd_witness(cfg: SurfaceConfig, args) -> dict[str, Any]:
    if args.count < 0:
        raise InvalidConfigError("--count must be nonnegative")
    wit = infinitude_witness(cfg, args.count)
    return {"count": len(wit), "classes": [str(c) for c in wit]}


def cmd_chi(cfg: SurfaceConfig, args) -> dict[str, Any]:
    D = _parse_class(args.cls, cfg.r)
    model = SurfaceModel(cfg.r)
    try:
        h0 = h0_lower_bound(model, D, effective_cone(cfg))
    except NotFinitelyGeneratedError:
        h0 = None
    return {"class": str(D), "self_intersection": self_int(D), "k_degree": k_degree(D),
            "chi": euler_characteristic(model, D), "arithmetic_genus": arithmetic_genus(model, D),
            "h0_lower_bound": h0}


COMMANDS = {
    "verdict": cmd_verdict, "curves": cmd_curves, "roots": cmd_roots, "cone": cmd_cone,
    "orbit": cmd_orbit, "witness": cmd_witness, "chi": cmd_chi,
}


# rendering -----------------------------------------------------------------

def to_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def to_table(payload: dict[str, Any]) -> str:
    lines = []
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, list):
            lines.append(f"{key}: ({len(val)})")
            for item in val:
                if isinstance(item, dict):
                    item = "  ".join(f"{k}={item[k]}" for k in sorted(item))
                lines.append(f"  {item}")
        else:
            lines.append(f"{key}: {'-' if val is None else val}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("config", help="JSON configuration file")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--output-dir", default=None,
                        help="also write the output to DIR/<config>.<command>.<ext>")
    p = argparse.ArgumentParser(prog="coxfg", description="Cox ring finite generation toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verdict", parents=[common], help="finite-generation verdict and cross-check")
    s.add_argument("--witness-count", type=int, default=DEFAULT_WITNESS)
    s = sub.add_parser("curves", parents=[common], help="(-1)- or (-2)-curves")
    s.add_argument("--type", choices=("minus1", "minus2"), required=True)
    s.add_argument("--degree-bound", type=int, default=None)
    sub.add_parser("roots", parents=[common], help="effective roots and their span rank")
    s = sub.add_parser("cone", parents=[common], help="effective or nef cone")
    s.add_argument("--which", choices=("eff", "nef"), required=True)
    s.add_argument("--hilbert", action="store_true")
    s = sub.add_parser("orbit", parents=[common], help="orbit under the simple reflections")
    s.add_argument("--class", dest="cls", required=True)
    s.add_argument("--limit", type=int, required=True)
    s = sub.add_parser("witness", parents=[common], help="infinite family of (-1)-curves")
    s.add_argument("--count", type=int, required=True)
    s = sub.add_parser("chi", parents=[common], help="Euler characteristic and genus of a class")
    s.add_argument("--class", dest="cls", required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = _load(args.config)
        payload = {"command": args.command, "config": Path(args.config).stem, "r": cfg.r}
        payload.update(COMMANDS[args.command](cfg, args))
    except CoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    text = to_json(payload) if args.format == "json" else to_table(payload)
    sys.stdout.write(text)
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        ext = "json" if args.format == "json" else "txt"
        (out / f"{Path(args.config).stem}.{args.command}.{ext}").write_text(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
