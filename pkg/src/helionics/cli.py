"""helionics command line: optimize | sweep | crossover | profile | plot."""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import __version__
from .densities import hydrogenic_density, one_density, to_unity
from .errors import HelionicsError, MissingColumn, NoBoundState, NonConvergence
from .figures import FIGURES
from .hamiltonian import optimize
from .measures import (
    FOUR_PI,
    MEASURE_SPEC,
    ProfileCurve,
    entropy_density,
    info_density_p,
    profile_grid,
    radial_momentum,
)
from .plotting import PlotSpec, plot_files
from .quadrature import QuadSpec
from .series import _row, find_crossover, hydrogenic_entropies
from .store import (
    CACHE_ENV,
    SWEEP_HEADER,
    RowCache,
    RunManifest,
    default_cache_dir,
    dumps,
    input_hash,
    sweep_cells,
    write_csv,
)
from .wavefunctions import StateKind

EXIT_NO_BOUND_STATE = 2
EXIT_NON_CONVERGENCE = 3
EXIT_PARTIAL_FAILURE = 4

STATE_KINDS = [k.value for k in StateKind]
QUANTITY_ALIASES = {
    "one-electron": "one_electron_entropy",
    "two-electron": "two_electron_entropy",
    "mutual-information": "mutual_information",
}
DEFAULT_BRACKETS = {
    ("hydrogenic", "one_electron_entropy"): (1.0, 2.0),
    ("ni-triplet", "two_electron_entropy"): (2.0, 3.0),
    ("ni-triplet", "one_electron_entropy"): (2.0, 3.0),
    ("triplet", "two_electron_entropy"): (2.0, 3.0),
    ("triplet", "one_electron_entropy"): (2.0, 3.0),
    ("triplet", "mutual_information"): (4.0, 5.0),
}
PROFILE_QUANTITIES = ("entropy-density-r", "entropy-density-p", "info-density-p",
                      "radial-momentum")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quad-rel-tol", type=float, default=MEASURE_SPEC.rel_tol)
    p.add_argument("--quad-abs-tol", type=float, default=MEASURE_SPEC.abs_tol)
    p.add_argument("--out", default=None)
    p.add_argument("--config", default=None, help="flat key=value file; flags override it")
    p.add_argument("--cache-dir", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helionics", description=__doc__)
    parser.add_argument("--version", action="version", version=f"helionics {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("optimize", help="optimise the exponents of one state")
    p.add_argument("--kind", choices=STATE_KINDS, required=True)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--start", type=float, nargs=2, default=None, metavar=("Z1", "Z2"))
    _common(p)

    p = sub.add_parser("sweep", help="measures over a range of nuclear charges")
    p.add_argument("--kind", choices=STATE_KINDS + ["hydrogenic"], required=True)
    p.add_argument("--z-min", type=float, default=2.0)
    p.add_argument("--z-max", type=float, default=30.0)
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--jobs", type=int, default=1)
    _common(p)

    p = sub.add_parser("crossover", help="continuous-Z crossover of a measure pair")
    p.add_argument("--kind", choices=["hydrogenic"] + STATE_KINDS, required=True)
    p.add_argument("--quantity", choices=sorted(QUANTITY_ALIASES), required=True)
    p.add_argument("--bracket", type=float, nargs=2, default=None, metavar=("LO", "HI"))
    p.add_argument("--tol", type=float, default=1e-3)
    _common(p)

    p = sub.add_parser("profile", help="radial profile curve on a log-spaced grid")
    p.add_argument("--kind", choices=["hydrogenic"] + STATE_KINDS, required=True)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--quantity", choices=PROFILE_QUANTITIES, required=True)
    p.add_argument("--points", type=int, default=400)
    p.add_argument("--grid-min", type=float, default=1e-3)
    p.add_argument("--grid-max", type=float, default=None)
    p.add_argument("--normalization", choices=["unity", "N"], default="unity")
    _common(p)

    p = sub.add_parser("plot", help="render CSV tables to SVG")
    p.add_argument("--input", action="append", default=[])
    p.add_argument("--spec", default=None, help="PlotSpec JSON file")
    p.add_argument("--figure", choices=sorted(FIGURES), default=None,
                   help="built-in layout; inputs default to its file names in --data-dir")
    p.add_argument("--data-dir", default=".")
    _common(p)
    return parser


def read_config(path) -> dict[str, str]:
    out = {}
    for n, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{n}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-")] = value
    return out


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config or not argv:
        return
    sub = parser._subparsers._group_actions[0].choices.get(argv[0])  # noqa: SLF001
    if sub is None:
        return
    actions = {a.dest: a for a in sub._actions}  # noqa: SLF001
    defaults = {}
    for key, value in read_config(known.config).items():
        dest = key.replace("-", "_")
        if dest not in actions:
            raise SystemExit(f"helionics: unknown config key {key!r} for {argv[0]}")
        action = actions[dest]
        conv = action.type or str
        if action.nargs not in (None, "?"):
            defaults[dest] = [conv(v) for v in value.replace(",", " ").split()]
        elif action.option_strings and action.required:
            # required options cannot take defaults; inject them as flags
            defaults[dest] = conv(value)
            action.required = False
        else:
            defaults[dest] = conv(value)
    sub.set_defaults(**defaults)


def quad_spec(args) -> QuadSpec:
    return QuadSpec(rel_tol=args.quad_rel_tol, abs_tol=args.quad_abs_tol,
                    max_panels=MEASURE_SPEC.max_panels)


def cache_dir(args, argv) -> Path:
    if "--cache-dir" in argv and args.cache_dir:
        return Path(args.cache_dir)
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    if args.cache_dir:
        return Path(args.cache_dir)
    return default_cache_dir()


def _emit(text: str, out) -> None:
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _snapshot(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items())
            if isinstance(v, (str, int, float, bool, list, type(None)))}


def cmd_optimize(args, argv) -> int:
    res = optimize(args.kind, args.z, args.start)
    doc = {"kind": res.kind.value, "z": res.z_nuclear, "params": list(res.params),
           "energy": res.energy.as_dict(), "converged": res.converged,
           "iterations": res.iterations, "evaluations": res.evaluations}
    _emit(dumps(doc), args.out)
    return 0


def _z_values(args) -> list[float]:
    if args.step <= 0 or args.z_max < args.z_min:
        raise SystemExit("helionics: need step > 0 and z-max >= z-min")
    n = int(np.floor((args.z_max - args.z_min) / args.step + 1e-9)) + 1
    return [round(args.z_min + i * args.step, 10) for i in range(n)]


def _safe_row(task):
    try:
        return _row(task)
    except HelionicsError as exc:
        return exc


def cmd_sweep(args, argv) -> int:
    if not args.out:
        raise SystemExit("helionics: sweep needs --out")
    zs = _z_values(args)
    spec = quad_spec(args)
    manifest = RunManifest(list(argv), _snapshot(args), asdict(spec),
                           input_hash(args.kind, zs, spec))
    header = list(SWEEP_HEADER)
    rows: list[list] = []
    failed = False
    if args.kind == "hydrogenic":
        for z in zs:
            s_rho, s_pi = hydrogenic_entropies(z)
            rows.append([z, "hydrogenic", z, "", "", s_rho, s_pi, "", "", s_rho + s_pi,
                         "", "", "", "", ""])
    else:
        kind = StateKind(args.kind)
        cache = RowCache(cache_dir(args, argv))
        results: dict[float, object] = {}
        todo = []
        for z in zs:
            hit = cache.load(kind.value, z, spec)
            if hit is not None:
                results[z] = hit
                manifest.cache_hits += 1
            else:
                todo.append((kind, z, spec))
        if todo:
            if args.jobs > 1 and len(todo) > 1:
                from concurrent.futures import ProcessPoolExecutor

                with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                    computed = list(pool.map(_safe_row, todo))
            else:
                computed = [_safe_row(t) for t in todo]
            for (_, z, _), row in zip(todo, computed):
                results[z] = row
                if not isinstance(row, Exception):
                    cache.store(row, spec)
        for z in zs:
            row = results[z]
            if isinstance(row, Exception):
                failed = True
                rows.append([z, kind.value] + [""] * (len(SWEEP_HEADER) - 2) + [str(row)])
            else:
                rows.append(sweep_cells(row))
        if failed:
            header.append("error")
            rows = [r + [""] * (len(header) - len(r)) for r in rows]
    write_csv(args.out, header, rows)
    manifest.outputs.append(str(args.out))
    manifest.finish(f"{args.out}.manifest.json")
    return EXIT_PARTIAL_FAILURE if failed else 0


def cmd_crossover(args, argv) -> int:
    quantity = QUANTITY_ALIASES[args.quantity]
    bracket = args.bracket or DEFAULT_BRACKETS.get((args.kind, quantity))
    if bracket is None:
        raise SystemExit(f"helionics: no default bracket for {args.kind} {args.quantity}; "
                         "pass --bracket LO HI")
    res = find_crossover(args.kind, quantity, bracket, quad_spec(args), args.tol)
    _emit(dumps(res.as_dict()), args.out)
    return 0


def profile_curve(kind: str, z: float, quantity: str, grid, normalization: str = "unity",
                  spec: QuadSpec = MEASURE_SPEC):
    space = "momentum" if quantity in ("entropy-density-p", "info-density-p",
                                       "radial-momentum") else "position"
    if kind == "hydrogenic":
        d = hydrogenic_density(z, space)
        if quantity == "info-density-p":
            raise ValueError("info-density-p needs a two-electron state")
        if quantity == "radial-momentum":
            return ProfileCurve("radial_momentum", grid, FOUR_PI * grid**2 * d(grid), z, kind)
        return entropy_density(d, grid, z, kind)
    state = optimize(kind, z).state()
    if quantity == "info-density-p":
        return info_density_p(state, grid, spec)
    if quantity == "radial-momentum":
        return radial_momentum(state, grid)
    d = one_density(state, space)
    if normalization == "unity":
        d = to_unity(d)
    return entropy_density(d, grid, z, kind)


def cmd_profile(args, argv) -> int:
    if not args.out:
        raise SystemExit("helionics: profile needs --out")
    space = "position" if args.quantity == "entropy-density-r" else "momentum"
    grid = profile_grid(space, args.points, args.grid_min, args.grid_max)
    curve = profile_curve(args.kind, args.z, args.quantity, grid, args.normalization,
                          quad_spec(args))
    abscissa = "r" if space == "position" else "p"
    write_csv(args.out, [abscissa, curve.quantity], zip(curve.abscissae, curve.values))
    return 0


def cmd_plot(args, argv) -> int:
    if not args.out:
        raise SystemExit("helionics: plot needs --out")
    if args.figure:
        fig = FIGURES[args.figure]
        spec = PlotSpec.from_dict(fig["spec"])
        inputs = args.input or [str(Path(args.data_dir) / name) for name in fig["inputs"]]
    elif args.spec:
        spec = PlotSpec.load(args.spec)
        inputs = args.input
    else:
        raise SystemExit("helionics: plot needs --spec or --figure")
    plot_files(inputs, spec, args.out)
    return 0


COMMANDS = {
    "optimize": cmd_optimize,
    "sweep": cmd_sweep,
    "crossover": cmd_crossover,
    "profile": cmd_profile,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    _apply_config(parser, argv)
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, argv)
    except NoBoundState as exc:
        print(f"helionics: no bound state: {exc}", file=sys.stderr)
        return EXIT_NO_BOUND_STATE
    except NonConvergence as exc:
        print(f"helionics: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    except MissingColumn as exc:
        print(f"helionics: missing column: {exc}", file=sys.stderr)
        return 1
    except (HelionicsError, ValueError) as exc:
        print(f"helionics: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
