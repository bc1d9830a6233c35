"""Result cache, run manifests and CSV formatting for the command line."""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .hamiltonian import EnergyBreakdown
from .measures import MeasureReport
from .quadrature import QuadSpec
from .series import SweepRow

CACHE_ENV = "HELIONICS_CACHE"

SWEEP_HEADER = ("z", "kind", "z1", "z2", "energy", "s_rho_u", "s_pi_u", "s_gamma_u",
                "s_pi2_u", "sum1e", "sum2e", "i_r", "i_p", "i_r_prime", "i_p_prime")


def fmt(x) -> str:
    """10 significant digits; None -> empty cell."""
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    s = f"{float(x):.10g}"
    return "0" if s == "-0" else s


def write_csv(path, header, rows) -> None:
    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    atomic_write(path, "\n".join(lines) + "\n")


def atomic_write(path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def sweep_cells(row: SweepRow) -> list:
    r = row.report
    return [row.z_nuclear, row.kind, row.params[0], row.params[1], row.energy.total,
            r.S_rho_u, r.S_pi_u, r.S_Gamma_u, r.S_Pi_u, r.entropy_sum_1e, r.entropy_sum_2e,
            r.I_r, r.I_p, r.I_r_prime, r.I_p_prime]


def spec_key(spec: QuadSpec) -> str:
    payload = json.dumps(asdict(spec), sort_keys=True)
    return hashlib.sha256(f"{__version__}|{payload}".encode()).hexdigest()[:16]


def input_hash(kind: str, z_values, spec: QuadSpec) -> str:
    payload = json.dumps({"kind": kind, "z": [fmt(z) for z in z_values],
                          "quad": asdict(spec), "version": __version__}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def default_cache_dir() -> Path:
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "helionics"


class RowCache:
    """One JSON document per (kind, Z, tolerance hash)."""

    def __init__(self, root):
        self.root = Path(root)

    def path(self, kind: str, z: float, spec: QuadSpec) -> Path:
        return self.root / f"{kind}_z{fmt(z)}_{spec_key(spec)}.json"

    def load(self, kind: str, z: float, spec: QuadSpec) -> SweepRow | None:
        p = self.path(kind, z, spec)
        if not p.exists():
            return None
        d = json.loads(p.read_text())
        e = d["energy"]
        energy = EnergyBreakdown(e["kinetic"], e["nuclear"], e["repulsion"])
        report = MeasureReport(**d["report"])
        return SweepRow(d["z"], d["kind"], tuple(d["params"]), energy, report)

    def store(self, row: SweepRow, spec: QuadSpec) -> None:
        report = {k: v for k, v in asdict(row.report).items()}
        doc = {"kind": row.kind, "z": row.z_nuclear, "params": list(row.params),
               "energy": row.energy.as_dict(), "report": report}
        atomic_write(self.path(row.kind, row.z_nuclear, spec), dumps(doc))


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class RunManifest:
    command: list
    config: dict
    quad_spec: dict
    input_hash: str
    version: str = __version__
    started: str = field(default_factory=_now)
    finished: str | None = None
    outputs: list = field(default_factory=list)
    cache_hits: int = 0

    def finish(self, path) -> None:
        self.finished = _now()
        atomic_write(path, dumps(asdict(self)))
