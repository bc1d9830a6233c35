"""Print every position/momentum crossover along the series.

Each line gives the bisection result (the state re-optimised at every
probe Z) and, where a sweep exists, the linear interpolation between
integer-Z rows for comparison.

    python3 scripts/crossovers.py
"""
from __future__ import annotations

from helionics.series import (
    find_crossover,
    hydrogenic_crossover_closed_form,
    ni_two_electron_crossover_closed_form,
    sweep,
    tabulated_crossover,
)

CASES = [
    ("hydrogenic", "one_electron_entropy", (1.0, 2.0)),
    ("ni-triplet", "two_electron_entropy", (2.0, 3.0)),
    ("triplet", "one_electron_entropy", (2.0, 3.0)),
    ("triplet", "two_electron_entropy", (2.0, 3.0)),
    ("triplet", "mutual_information", (4.0, 5.0)),
]


def main() -> None:
    rows = {"triplet": sweep("triplet", [float(z) for z in range(2, 8)]),
            "ni-triplet": sweep("ni-triplet", [float(z) for z in range(2, 8)])}
    closed = {("hydrogenic", "one_electron_entropy"): hydrogenic_crossover_closed_form(),
              ("ni-triplet", "two_electron_entropy"): ni_two_electron_crossover_closed_form()}
    print(f"{'kind':<11} {'quantity':<22} {'bisection':>10} {'tabulated':>10} {'closed':>10}")
    for kind, quantity, bracket in CASES:
        z = find_crossover(kind, quantity, bracket, tol=1e-5).z_star
        tab = tabulated_crossover(rows[kind], quantity) if kind in rows else None
        ref = closed.get((kind, quantity))
        cells = [f"{v:10.5f}" if v is not None else f"{'-':>10}" for v in (z, tab, ref)]
        print(f"{kind:<11} {quantity:<22} " + " ".join(cells))


if __name__ == "__main__":
    main()
