"""Rebuild manifest.json and the golden outputs under expected/.

Run from anywhere:  python corpus/regenerate.py
Each manifest entry lists CLI arguments (config paths relative to this
directory), the expected exit code and, for exit 0, the golden file.
"""
from __future__ import annotations

import contextlib
import io
import json
from pathlib import Path

from coxfg.cli import main

HERE = Path(__file__).resolve().parent

FINITE = ["plane"] + [f"del_pezzo_{r}" for r in range(1, 9)] + [
    "elliptic_extremal_e8", "weak_dp_collinear", "infinitely_near_chain"]
INFINITE = ["nagata_9", "nagata_10"]
SMALL = ["plane"] + [f"del_pezzo_{r}" for r in range(1, 8)] + [
    "elliptic_extremal_e8", "weak_dp_collinear", "infinitely_near_chain"]
ANTICANONICAL = {"plane": "3", "del_pezzo_6": "3,-1,-1,-1,-1,-1,-1",
                 "elliptic_extremal_e8": "3,1,1,1,1,1,1,1,1,1"}


def cases() -> list[dict]:
    out = []

    def add(name, args, exit_code=0):
        out.append({"name": name, "args": args, "exit": exit_code,
                    "expected": f"expected/{name}.json" if exit_code == 0 else None})

    for cfg in FINITE + INFINITE:
        add(f"{cfg}.verdict", ["verdict", f"{cfg}.json", "--format", "json"])
        add(f"{cfg}.roots", ["roots", f"{cfg}.json", "--format", "json"])
        add(f"{cfg}.minus2", ["curves", "--type", "minus2", f"{cfg}.json", "--format", "json"])
    for cfg in FINITE:
        add(f"{cfg}.eff", ["cone", "--which", "eff", f"{cfg}.json", "--format", "json"])
        if cfg.startswith(("plane", "del_pezzo")):
            add(f"{cfg}.minus1", ["curves", "--type", "minus1", f"{cfg}.json", "--format", "json"])
    for cfg in SMALL:
        add(f"{cfg}.nef", ["cone", "--which", "nef", "--hilbert", f"{cfg}.json", "--format", "json"])
    add("elliptic_extremal_e8.minus1_bounded",
        ["curves", "--type", "minus1", "--degree-bound", "8", "elliptic_extremal_e8.json",
         "--format", "json"])
    for cfg, cls in ANTICANONICAL.items():
        add(f"{cfg}.chi_anticanonical", ["chi", "--class", cls, f"{cfg}.json", "--format", "json"])
    add("nagata_9.orbit", ["orbit", "--class", "0,0,0,0,0,0,0,0,0,-1", "--limit", "50",
                           "nagata_9.json", "--format", "json"])
    for cfg in INFINITE:
        add(f"{cfg}.witness", ["witness", "--count", "100", f"{cfg}.json", "--format", "json"])
    # failures
    add("nagata_9.minus1_unbounded", ["curves", "--type", "minus1", "nagata_9.json"], 3)
    add("nagata_10.eff_infinite", ["cone", "--which", "eff", "nagata_10.json"], 3)
    add("del_pezzo_6.witness_finite", ["witness", "--count", "5", "del_pezzo_6.json"], 2)
    add("del_pezzo_6.chi_bad_class", ["chi", "--class", "0,1", "del_pezzo_6.json"], 2)
    for p in sorted((HERE / "invalid").glob("*.json")):
        add(f"invalid.{p.stem}", ["verdict", f"invalid/{p.name}"], 2)
    return out


def run(args: list[str]) -> tuple[int, str]:
    argv = [str(HERE / a) if a.endswith(".json") else a for a in args]
    buf, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, buf.getvalue()


def regenerate() -> None:
    entries = cases()
    (HERE / "expected").mkdir(exist_ok=True)
    for e in entries:
        code, text = run(e["args"])
        if code != e["exit"]:
            raise SystemExit(f"{e['name']}: exit {code}, expected {e['exit']}")
        if e["expected"]:
            (HERE / e["expected"]).write_text(text)
    (HERE / "manifest.json").write_text(json.dumps(entries, indent=2) + "\n")
    print(f"{len(entries)} cases written")


if __name__ == "__main__":
    regenerate()
