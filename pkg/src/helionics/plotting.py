"""Byte-deterministic SVG line charts from CSV tables.

A plot is described by a JSON PlotSpec::

    {
      "title": "...", "x_label": "Z", "y_label": "nats",
      "x_log": false, "y_log": false,
      "curves": [{"name": "I_r", "x": "z", "y": "i_r", "input": 0,
                  "scale": 1.0, "style": "solid", "marker": "diamond"}],
      "inset": {"region": [0.45, 0.12, 0.45, 0.4], "curves": [...],
                "x_label": "Z", "y_label": ""}
    }

``input`` indexes the list of CSV tables handed to :func:`render`.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from .errors import MissingColumn

WIDTH, HEIGHT = 640, 480
MARGIN = dict(left=70, right=20, top=40, bottom=55)
DASHES = {"solid": None, "dash": "8,4", "dot": "2,3", "dashdot": "8,3,2,3"}
COLORS = ("#1f3b73", "#b3261e", "#2e7d32", "#6a1b9a", "#ef6c00", "#00838f")


@dataclass(frozen=True)
class CurveSpec:
    name: str
    x: str
    y: str
    input: int = 0
    scale: float = 1.0
    style: str = "solid"
    marker: str = "none"


@dataclass(frozen=True)
class InsetSpec:
    region: tuple[float, float, float, float]
    curves: tuple[CurveSpec, ...]
    x_label: str = ""
    y_label: str = ""


@dataclass(frozen=True)
class PlotSpec:
    curves: tuple[CurveSpec, ...]
    title: str = ""
    x_label: str = ""
    y_label: str = ""
    x_log: bool = False
    y_log: bool = False
    inset: InsetSpec | None = None
    output: str | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_dict(cls, d: dict) -> "PlotSpec":
        curves = tuple(CurveSpec(**c) for c in d.get("curves", ()))
        inset = None
        if d.get("inset"):
            i = d["inset"]
            inset = InsetSpec(tuple(i.get("region", (0.5, 0.1, 0.42, 0.4))),
                              tuple(CurveSpec(**c) for c in i.get("curves", ())),
                              i.get("x_label", ""), i.get("y_label", ""))
        return cls(curves, d.get("title", ""), d.get("x_label", ""), d.get("y_label", ""),
                   bool(d.get("x_log", False)), bool(d.get("y_log", False)), inset,
                   d.get("output"))

    @classmethod
    def load(cls, path) -> "PlotSpec":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        def c(cs):
            return [vars(x).copy() for x in cs]

        d = {"title": self.title, "x_label": self.x_label, "y_label": self.y_label,
             "x_log": self.x_log, "y_log": self.y_log, "curves": c(self.curves)}
        if self.inset:
            d["inset"] = {"region": list(self.inset.region), "curves": c(self.inset.curves),
                          "x_label": self.inset.x_label, "y_label": self.inset.y_label}
        return d


def read_table(path) -> dict[str, list[str]]:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    return {name: [r[i] if i < len(r) else "" for r in body] for i, name in enumerate(header)}


def _series(tables: Sequence[dict], curve: CurveSpec) -> list[tuple[float, float]]:
    if not 0 <= curve.input < len(tables):
        raise MissingColumn(f"curve {curve.name!r} refers to missing input #{curve.input}")
    table = tables[curve.input]
    for col in (curve.x, curve.y):
        if col not in table:
            raise MissingColumn(f"column {col!r} not found in input #{curve.input}")
    pts = []
    for xs, ys in zip(table[curve.x], table[curve.y]):
        if xs == "" or ys == "":
            continue
        pts.append((float(xs), curve.scale * float(ys)))
    return pts


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / target
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=10 * mag)
    start = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 12) + 0.0)
        t += step
    return ticks


def _tick_label(v: float) -> str:
    return f"{v:.4g}"


class _Axes:
    def __init__(self, box, xr, yr, x_log, y_log):
        self.x0, self.y0, self.w, self.h = box
        self.x_log, self.y_log = x_log, y_log
        self.xr = tuple(map(self._tx, xr))
        self.yr = tuple(map(self._ty, yr))

    def _tx(self, v):
        return math.log10(v) if self.x_log else v

    def _ty(self, v):
        return math.log10(v) if self.y_log else v

    def px(self, v):
        lo, hi = self.xr
        return self.x0 + (self._tx(v) - lo) / (hi - lo) * self.w

    def py(self, v):
        lo, hi = self.yr
        return self.y0 + self.h - (self._ty(v) - lo) / (hi - lo) * self.h


def _range(values, log):
    vals = [v for v in values if (v > 0 or not log)]
    if not vals:
        return (1.0, 10.0) if log else (0.0, 1.0)
    lo, hi = min(vals), max(vals)
    if lo == hi:
        pad = abs(lo) * 0.1 or 1.0
        return (lo / 2, hi * 2) if log else (lo - pad, hi + pad)
    if log:
        return lo, hi
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def _marker(kind: str, x: float, y: float, color: str, size: float = 4.0) -> str:
    if kind == "diamond":
        pts = f"{_fmt(x)},{_fmt(y - size)} {_fmt(x + size)},{_fmt(y)} {_fmt(x)},{_fmt(y + size)} {_fmt(x - size)},{_fmt(y)}"
        return f'<polygon points="{pts}" fill="none" stroke="{color}"/>'
    if kind == "triangle":
        pts = f"{_fmt(x)},{_fmt(y - size)} {_fmt(x + size)},{_fmt(y + size)} {_fmt(x - size)},{_fmt(y + size)}"
        return f'<polygon points="{pts}" fill="{color}" stroke="{color}"/>'
    if kind == "circle":
        return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(size * 0.8)}" fill="none" stroke="{color}"/>'
    return ""


def _panel(out: list[str], box, curves, tables, x_label, y_label, x_log, y_log, font=12,
           legend=True):
    series = [(c, _series(tables, c)) for c in curves]
    xr = _range([x for _, s in series for x, _ in s], x_log)
    yr = _range([y for _, s in series for _, y in s], y_log)
    ax = _Axes(box, xr, yr, x_log, y_log)
    x0, y0, w, h = box
    out.append(f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(w)}" height="{_fmt(h)}" '
               f'fill="white" stroke="black"/>')
    for axis, (lo, hi), log in (("x", xr, x_log), ("y", yr, y_log)):
        if log:
            ticks = [10.0**k for k in range(math.ceil(math.log10(lo)), math.floor(math.log10(hi)) + 1)]
        else:
            ticks = nice_ticks(lo, hi)
        for t in ticks:
            if axis == "x":
                px = ax.px(t)
                out.append(f'<line x1="{_fmt(px)}" y1="{_fmt(y0 + h)}" x2="{_fmt(px)}" '
                           f'y2="{_fmt(y0 + h - 5)}" stroke="black"/>')
                out.append(f'<text x="{_fmt(px)}" y="{_fmt(y0 + h + font + 2)}" font-size="{font}" '
                           f'text-anchor="middle">{_tick_label(t)}</text>')
            else:
                py = ax.py(t)
                out.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(py)}" x2="{_fmt(x0 + 5)}" '
                           f'y2="{_fmt(py)}" stroke="black"/>')
                out.append(f'<text x="{_fmt(x0 - 4)}" y="{_fmt(py + font / 3)}" font-size="{font}" '
                           f'text-anchor="end">{_tick_label(t)}</text>')
    if x_label:
        out.append(f'<text x="{_fmt(x0 + w / 2)}" y="{_fmt(y0 + h + 2.6 * font + 4)}" '
                   f'font-size="{font + 1}" text-anchor="middle">{escape(x_label)}</text>')
    if y_label:
        cx, cy = x0 - 3.8 * font, y0 + h / 2
        out.append(f'<text x="{_fmt(cx)}" y="{_fmt(cy)}" font-size="{font + 1}" text-anchor="middle" '
                   f'transform="rotate(-90 {_fmt(cx)} {_fmt(cy)})">{escape(y_label)}</text>')
    for i, (c, pts) in enumerate(series):
        color = COLORS[i % len(COLORS)]
        pts = [(x, y) for x, y in pts if (x > 0 or not x_log) and (y > 0 or not y_log)]
        coords = " ".join(f"{_fmt(ax.px(x))},{_fmt(ax.py(y))}" for x, y in pts)
        dash = DASHES.get(c.style)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<polyline points="{coords}" fill="none" stroke="{color}" '
                   f'stroke-width="1.5"{dash_attr}><title>{escape(c.name)}</title></polyline>')
        for x, y in pts:
            m = _marker(c.marker, ax.px(x), ax.py(y), color)
            if m:
                out.append(m)
        if legend:
            ly = y0 + 14 + i * (font + 4)
            out.append(f'<line x1="{_fmt(x0 + w - 110)}" y1="{_fmt(ly - 4)}" x2="{_fmt(x0 + w - 85)}" '
                       f'y2="{_fmt(ly - 4)}" stroke="{color}" stroke-width="1.5"{dash_attr}/>')
            out.append(f'<text x="{_fmt(x0 + w - 80)}" y="{_fmt(ly)}" font-size="{font - 1}">'
                       f'{escape(c.name)}</text>')


def render(spec: PlotSpec, tables: Sequence[dict]) -> str:
    """SVG 1.1 document text; identical inputs give identical bytes."""
    if not spec.curves:
        raise MissingColumn("plot spec has no curves")
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if spec.title:
        out.append(f'<text x="{WIDTH / 2:.2f}" y="24" font-size="15" text-anchor="middle">'
                   f'{escape(spec.title)}</text>')
    box = (MARGIN["left"], MARGIN["top"], WIDTH - MARGIN["left"] - MARGIN["right"],
           HEIGHT - MARGIN["top"] - MARGIN["bottom"])
    _panel(out, box, spec.curves, tables, spec.x_label, spec.y_label, spec.x_log, spec.y_log)
    if spec.inset is not None:
        if not spec.inset.curves:
            raise MissingColumn("inset has no curves")
        fx, fy, fw, fh = spec.inset.region
        ibox = (box[0] + fx * box[2], box[1] + fy * box[3], fw * box[2], fh * box[3])
        out.append('<g class="inset">')
        _panel(out, ibox, spec.inset.curves, tables, spec.inset.x_label, spec.inset.y_label,
               False, False, font=9, legend=False)
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_files(inputs: Sequence, spec: PlotSpec, out_path) -> str:
    text = render(spec, [read_table(p) for p in inputs])
    Path(out_path).write_text(text, encoding="utf-8", newline="\n")
    return text
