"""Regenerate every sweep table, profile curve and SVG figure.

    python3 scripts/reproduce_figures.py --out figures --jobs 2

Tables land next to the figures so each SVG can be re-plotted with
``helionics plot --figure figN --data-dir <out>``.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from helionics import cli
from helionics.figures import FIGURES

PROFILES = [("hydrogenic", z, "entropy-density-r") for z in (1, 2, 3)] + [
    ("triplet", z, q) for z in (2, 3, 4)
    for q in ("entropy-density-r", "entropy-density-p", "info-density-p")
]


def run(argv: list[str]) -> None:
    code = cli.main(argv)
    if code != 0:
        sys.exit(f"helionics {' '.join(argv)} exited with {code}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()

    for kind in ("singlet", "triplet"):
        run(["sweep", "--kind", kind, "--jobs", str(args.jobs),
             "--out", str(out / f"sweep_{kind}.csv")])
    run(["sweep", "--kind", "hydrogenic", "--z-min", "1", "--z-max", "30",
         "--out", str(out / "sweep_hydrogenic.csv")])
    for kind, z, quantity in PROFILES:
        run(["profile", "--kind", kind, "--z", str(z), "--quantity", quantity,
             "--out", str(out / f"profile_{kind}_z{z}_{quantity}.csv")])
    for name in sorted(FIGURES):
        run(["plot", "--figure", name, "--data-dir", str(out), "--out", str(out / f"{name}.svg")])
        print(f"{name}.svg")
    print(f"done in {time.perf_counter() - t0:.1f} s -> {out}/")


if __name__ == "__main__":
    main()
