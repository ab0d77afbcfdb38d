#!/usr/bin/env python3
"""Regenerate the standard family-curve datasets and threshold summary.

Writes one CSV per (family, functional) curve plus thresholds.json into
the output directory.  Everything goes through the CLI so the files
match what a user would get by hand.
"""

from __future__ import annotations

import argparse
import json
import math
from pathlib import Path

from tribell.bell import Family, FamilyCurve, FunctionalKind, threshold_bisect
from tribell.bell import example1_settings, example2_settings
from tribell.cli import main as cli_main

SCANS = [
    ("ghz_pure_l1.csv", "ghz-pure", "l1", "example1", "0:{pi}:201"),
    ("ghz_pure_rel_ent.csv", "ghz-pure", "rel-ent", "example1", "0:{pi}:201"),
    ("ghz_pure_skew.csv", "ghz-pure", "skew", "example2", "0:{pi}:201"),
    ("w_werner_l1.csv", "w-werner", "l1", "example1", "0:1:201"),
    ("w_werner_rel_ent.csv", "w-werner", "rel-ent", "example1", "0:1:201"),
    ("w_werner_skew.csv", "w-werner", "skew", "example1", "0:1:201"),
    ("ghz_werner_l1.csv", "ghz-werner", "l1", "example1", "0:1:201"),
    ("ghz_werner_rel_ent.csv", "ghz-werner", "rel-ent", "example1", "0:1:201"),
    ("ghz_werner_skew.csv", "ghz-werner", "skew", "example2", "0:1:201"),
    ("w_pure_rel_ent.csv", "w-pure", "rel-ent", "example1", "51x51"),
]

THRESHOLDS = [
    ("w-werner l1", Family.W_WERNER, FunctionalKind.L1, "example1", (0.0, 1.0)),
    ("ghz-werner l1", Family.GHZ_WERNER, FunctionalKind.L1, "example1", (0.0, 1.0)),
    ("w-werner skew", Family.W_WERNER, FunctionalKind.SKEW, "example1", (0.0, 1.0)),
    ("ghz-werner skew", Family.GHZ_WERNER, FunctionalKind.SKEW, "example2", (0.0, 1.0)),
    ("w-werner rel-ent", Family.W_WERNER, FunctionalKind.REL_ENT, "example1", (0.0, 1.0)),
    ("ghz-werner rel-ent", Family.GHZ_WERNER, FunctionalKind.REL_ENT, "example1", (0.0, 1.0)),
    ("ghz-pure l1", Family.GHZ_PURE, FunctionalKind.L1, "example1", (0.05, math.pi / 4.0)),
]


def run(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for filename, family, kind, settings, grid in SCANS:
        target = outdir / filename
        code = cli_main([
            "scan",
            "--state", family,
            "--kind", kind,
            "--settings", settings,
            "--grid", grid.format(pi=repr(math.pi)),
            "--out", str(target),
        ])
        if code != 0:
            raise SystemExit(f"scan for {filename} failed with exit code {code}")
        print(f"wrote {target}")

    settings_by_name = {"example1": example1_settings(), "example2": example2_settings()}
    summary = {}
    for label, family, kind, settings_name, bracket in THRESHOLDS:
        curve = FamilyCurve(family=family, kind=kind, settings=settings_by_name[settings_name])
        summary[label] = {
            "settings": settings_name,
            "bracket": list(bracket),
            "crossing": threshold_bisect(curve, bracket),
        }
    target = outdir / "thresholds.json"
    target.write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {target}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path("data"))
    run(parser.parse_args().outdir)
