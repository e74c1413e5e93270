"""Serialization (JSONL, DOT, JSON) and schematic rendering of diagrams.

JSONL schema, one record per line:  {"n": int, "lines": [[a,p,q], ...]}
with optional "b_nodes"/"a_nodes" fields.  All exports are byte-stable
across runs given identical inputs.

Rendering draws the boundary circle, the n node markers (touch nodes
filled, source nodes open) and each touching line as a smooth curve
tangent to the circle at its touch node.  Curves are laid out by
recursively splitting the disk along one line at a time, confining every
remaining line to the angular zone and radial band of the region it lives
in, so the drawn curves can never cross.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .census import Diagram, b_nodes, validate_diagram
from .geometry import TouchLine, cw_distance, node_mod
from .graph import CompatibilityGraph

# ---------------------------------------------------------------------------
# JSONL
# ---------------------------------------------------------------------------


def diagram_record(n: int, d: Diagram, node_classes: bool = False) -> str:
    rec: dict = {"n": n, "lines": [list(v) for v in sorted(d)]}
    if node_classes:
        bs = sorted(b_nodes(d))
        rec["b_nodes"] = bs
        rec["a_nodes"] = [i for i in range(1, n + 1) if i not in set(bs)]
    return json.dumps(rec, separators=(",", ":"))


def write_jsonl(n: int, diagrams: Iterable[Diagram], dest, node_classes: bool = False) -> int:
    """Write one compact record per diagram; returns the number written.

    `dest` may be a path or a text file object.  On an I/O failure the
    raised exception carries the count of fully written records.
    """
    own = isinstance(dest, (str, bytes)) or hasattr(dest, "__fspath__")
    fh: IO[str] = open(dest, "w", encoding="utf-8") if own else dest
    written = 0
    try:
        for d in diagrams:
            fh.write(diagram_record(n, d, node_classes))
            fh.write("\n")
            written += 1
    except OSError as exc:
        exc.add_note(f"{written} records fully written")
        raise
    finally:
        if own:
            fh.close()
    return written


def read_jsonl(source, strict: bool = True) -> Iterator[tuple[int, Diagram]]:
    """Yield (n, diagram) per record, re-validating every diagram invariant.

    Invalid records raise ValueError tagged with the 1-based line number;
    with strict=False they are skipped instead.
    """
    own = isinstance(source, (str, bytes)) or hasattr(source, "__fspath__")
    fh: IO[str] = open(source, "r", encoding="utf-8") if own else source
    try:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                rec = json.loads(raw)
                n = rec["n"]
                lines = [tuple(x) for x in rec["lines"]]
                d = validate_diagram(n, lines)
            except (ValueError, KeyError, TypeError) as exc:
                if strict:
                    raise ValueError(f"line {lineno}: invalid diagram record: {exc}") from exc
                continue
            yield n, d
    finally:
        if own:
            fh.close()


# ---------------------------------------------------------------------------
# graph export
# ---------------------------------------------------------------------------


def export_graph(g: CompatibilityGraph, fmt: str, dest) -> None:
    """Write the graph as Graphviz DOT or adjacency JSON, byte-stable."""
    if fmt == "dot":
        text = _to_dot(g)
    elif fmt == "json":
        text = _to_json(g)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    own = isinstance(dest, (str, bytes)) or hasattr(dest, "__fspath__")
    fh: IO[str] = open(dest, "w", encoding="utf-8") if own else dest
    try:
        fh.write(text)
    finally:
        if own:
            fh.close()


def _label(v: TouchLine) -> str:
    return f"{v.a}-{v.p}-{v.q}"


def _edge_list(g: CompatibilityGraph) -> list[tuple[int, int]]:
    edges = []
    for i in range(g.vertex_count):
        mask = g.adj[i] >> (i + 1) << (i + 1)
        while mask:
            b = mask & -mask
            mask ^= b
            edges.append((i, b.bit_length() - 1))
    return edges


def _to_dot(g: CompatibilityGraph) -> str:
    out = [f"graph {g.sense}_{g.n} {{"]
    for v in g.vertices:
        out.append(f'  "{_label(v)}";')
    for i, j in _edge_list(g):
        out.append(f'  "{_label(g.vertices[i])}" -- "{_label(g.vertices[j])}";')
    out.append("}")
    return "\n".join(out) + "\n"


def _to_json(g: CompatibilityGraph) -> str:
    payload = {
        "n": g.n,
        "sense": g.sense,
        "vertices": [list(v) for v in g.vertices],
        "edges": [list(e) for e in _edge_list(g)],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# non-crossing layout
# ---------------------------------------------------------------------------
#
# Angular coordinate u runs 0..1 clockwise with node k at (k-1)/n; a point at
# radial inset h sits at radius 1-h.  Each curve is two "legs" joined at the
# tangency: a leg ramps off the circle at the tangency, runs at a constant
# inset plateau, and drops radially back to the circle at its endpoint.
#
# One line of the zone is drawn, the rest are partitioned into the complement
# regions of the drawn line.  Lines in a near region render inside the thin
# corridor between a leg and the circle (inset budget scaled down); lines in
# the far region get the angular span between the two endpoints.  Within a
# sub-zone whose start falls in the drawn line's near side the two legs share
# the tangency side (a hairpin); the inner leg's plateau stays at half the
# outer's, which keeps the legs strictly nested.

_TOP_BUDGET = 0.42
_CORRIDOR = 0.66       # child budget as a fraction of the covering plateau
_SAMPLES = 256         # samples per unit angle along a plateau


@dataclass
class DiagramLayout:
    n: int
    lines: tuple[TouchLine, ...]
    curves: list[list[tuple[float, float]]]   # (u, inset) polylines, one per line
    node_u: list[float]
    touch_nodes: frozenset[int]


def _gap_window(gap_node: int, lo: float, length: float, n: int) -> tuple[float, float]:
    """Zone-relative open interval available in the gap after `gap_node`."""
    a = ((gap_node - 1) / n - lo) % 1.0
    b = a + 1.0 / n
    segs = []
    if a < length:
        segs.append((a, min(b, length)))
    if b > 1.0:
        segs.append((0.0, min(b - 1.0, length)))
    segs = [(s, e) for s, e in segs if e - s > 1e-12]
    if len(segs) != 1:
        raise AssertionError(f"no room for a contact in gap after node {gap_node}")
    return segs[0]


def _leg_points(t_tan: float, t_end: float, h: float, ramp: float) -> list[tuple[float, float]]:
    """Sample one leg from the tangency to the endpoint drop, in zone coords."""
    width = abs(t_end - t_tan)
    sign = 1.0 if t_end > t_tan else -1.0
    steps = max(6, int(width * _SAMPLES))
    pts = [(t_tan, 0.0)]
    for i in range(1, steps):
        d = width * i / steps
        inset = h if d >= ramp else h * math.sin(math.pi * d / (2 * ramp)) ** 2
        pts.append((t_tan + sign * d, inset))
    pts.append((t_end, h))
    pts.append((t_end, 0.0))
    return pts


def _layout_zone(lines: list[TouchLine], lo: float, length: float, budget: float,
                 n: int, curves: dict[TouchLine, list[tuple[float, float]]]) -> None:
    if not lines:
        return
    rel = lambda u: (u - lo) % 1.0

    def contacts(v):
        # endpoint contacts stand in for the midpoint of their usable window
        wx = _gap_window(node_mod(v.p - 1, n), lo, length, n)
        wy = _gap_window(v.q, lo, length, n)
        return (rel((v.a - 1) / n), (wx[0] + wx[1]) / 2, (wy[0] + wy[1]) / 2)

    # The line whose tangency sits on the zone cut (whole-disk level) must be
    # drawn first; otherwise draw the line of widest angular extent, so every
    # other line's extent nests inside one of its zones.
    v0 = None
    for v in lines:
        if contacts(v)[0] < 1e-12:
            v0 = v
            break
    if v0 is None:
        v0 = max(lines, key=lambda v: (max(contacts(v)) - min(contacts(v)), [-c for c in v]))
    rest = [v for v in lines if v is not v0]

    A, X, Y = contacts(v0)

    # The zone cut falls in exactly one of the line's three boundary arcs,
    # which fixes the linear order of its contacts:
    #   tangency on the cut      -> legs run inward from both zone ends
    #   Y < A < X                -> the far footprint wraps across the cut
    #   A < X < Y  or  X < Y < A -> hairpin: both legs on one side of the
    #                               tangency, the outer kept at twice the
    #                               inner's plateau so the legs stay nested
    if A < 1e-12:
        w1, w2 = X, length - Y
        h1 = h2 = budget / 2
        ramp = min(0.5 / n, 0.4 * w1, 0.4 * w2)
        leg1 = _leg_points(0.0, X, h1, ramp)
        leg2 = _leg_points(length, Y, h2, ramp)
        zones = [("L", 0.0, X, _CORRIDOR * h1), ("F", X, Y, budget),
                 ("M", Y, length, _CORRIDOR * h2)]
    elif Y < A < X:
        w1, w2 = X - A, A - Y
        h1 = h2 = budget / 2
        ramp = min(0.5 / n, 0.4 * w1, 0.4 * w2)
        leg1 = _leg_points(A, X, h1, ramp)
        leg2 = _leg_points(A, Y, h2, ramp)
        zones = [("L", A, X, _CORRIDOR * h1), ("M", Y, A, _CORRIDOR * h2),
                 ("F", X, length, budget), ("F", 0.0, Y, budget)]
    elif A < X < Y:
        w1, w2 = X - A, Y - A
        h1, h2 = budget / 4, budget / 2
        ramp = min(0.5 / n, 0.4 * w1)
        leg1 = _leg_points(A, X, h1, ramp)
        leg2 = _leg_points(A, Y, h2, ramp)
        zones = [("L", A, X, _CORRIDOR * h1), ("F", X, Y, _CORRIDOR * h2),
                 ("M", 0.0, A, budget), ("M", Y, length, budget)]
    elif X < Y < A:
        w1, w2 = A - X, A - Y
        h1, h2 = budget / 2, budget / 4
        ramp = min(0.5 / n, 0.4 * w2)
        leg1 = _leg_points(A, X, h1, ramp)
        leg2 = _leg_points(A, Y, h2, ramp)
        zones = [("M", Y, A, _CORRIDOR * h2), ("F", X, Y, _CORRIDOR * h1),
                 ("L", 0.0, X, budget), ("L", A, length, budget)]
    else:
        raise AssertionError(f"impossible contact order for {v0}: {A} {X} {Y}")

    # curve runs endpoint-x -> tangency -> endpoint-y
    curves[v0] = [(lo + t, h) for t, h in reversed(leg1)] + [(lo + t, h) for t, h in leg2[1:]]

    buckets: dict[int, list[TouchLine]] = {i: [] for i in range(len(zones))}
    far_span = cw_distance(v0.p, v0.q, n)
    for v in rest:
        if cw_distance(v0.p, v.a, n) <= far_span:
            region = "F"
        elif cw_distance(v0.a, v.a, n) < cw_distance(v0.a, v0.p, n):
            region = "L"
        else:
            region = "M"
        t = rel((v.a - 1) / n)
        for i, (name, s, e, _) in enumerate(zones):
            if name == region and s < t < e:
                buckets[i].append(v)
                break
        else:
            raise AssertionError(f"line {v} fits no zone of {v0}")
    for i, (_, s, e, sub_budget) in enumerate(zones):
        if buckets[i]:
            _layout_zone(buckets[i], (lo + s) % 1.0, e - s, sub_budget, n, curves)


def layout_diagram(n: int, d: Diagram) -> DiagramLayout:
    """Compute non-crossing (angle, inset) polylines for every line of a diagram."""
    lines = sorted(d)
    curves: dict[TouchLine, list[tuple[float, float]]] = {}
    if lines:
        # cut the circle at one tangency: every other line's contacts stay
        # clear of it, since all three regions of a line pinch at its tangency
        _layout_zone(lines, ((lines[0].a - 1) / n) % 1.0, 1.0, _TOP_BUDGET, n, curves)
    return DiagramLayout(
        n=n,
        lines=tuple(lines),
        curves=[curves[v] for v in lines],
        node_u=[(k - 1) / n for k in range(1, n + 1)],
        touch_nodes=b_nodes(lines),
    )


def polyline_xy(points: list[tuple[float, float]], cx: float, cy: float,
                radius: float) -> list[tuple[float, float]]:
    """Map (angle u clockwise from the top, inset) pairs to plane coordinates."""
    out = []
    for u, inset in points:
        r = radius * (1.0 - inset)
        out.append((cx + r * math.sin(2 * math.pi * u), cy - r * math.cos(2 * math.pi * u)))
    return out


# ---------------------------------------------------------------------------
# SVG / figure output
# ---------------------------------------------------------------------------

_SIZE = 1000.0
_CX = _CY = 500.0
_R = 420.0


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "-0.000" if s == "-0.000" else s


def render_svg(n: int, d: Diagram, dest) -> None:
    """Write a deterministic standalone SVG of the diagram."""
    lay = layout_diagram(n, d)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SIZE:g} {_SIZE:g}">',
        f'  <rect width="{_SIZE:g}" height="{_SIZE:g}" fill="white"/>',
        f'  <circle cx="{_CX:g}" cy="{_CY:g}" r="{_R:g}" fill="none" stroke="#444" stroke-width="2"/>',
    ]
    for pts in lay.curves:
        xy = polyline_xy(pts, _CX, _CY, _R)
        path = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in xy)
        parts.append(f'  <path d="{path}" fill="none" stroke="#b4231f" stroke-width="2.5"/>')
    for k, u in enumerate(lay.node_u, start=1):
        x = _CX + _R * math.sin(2 * math.pi * u)
        y = _CY - _R * math.cos(2 * math.pi * u)
        if k in lay.touch_nodes:
            parts.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="9" fill="#1f2a44"/>')
        else:
            parts.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="9" fill="white" '
                         'stroke="#1f2a44" stroke-width="2.5"/>')
        lx = _CX + (_R + 42) * math.sin(2 * math.pi * u)
        ly = _CY - (_R + 42) * math.cos(2 * math.pi * u)
        parts.append(f'  <text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="30" font-family="sans-serif" '
                     f'text-anchor="middle" dominant-baseline="central">{k}</text>')
    parts.append("</svg>")
    text = "\n".join(parts) + "\n"
    own = isinstance(dest, (str, bytes)) or hasattr(dest, "__fspath__")
    fh: IO[str] = open(dest, "w", encoding="utf-8") if own else dest
    try:
        fh.write(text)
    finally:
        if own:
            fh.close()


def render_figure(n: int, d: Diagram, dest, dpi: int = 150) -> None:
    """Render the same schematic through matplotlib (PNG/PDF by extension)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    lay = layout_diagram(n, d)
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.set_aspect("equal")
    ax.axis("off")
    circle = plt.Circle((0, 0), 1.0, fill=False, color="#444444", lw=1.5)
    ax.add_patch(circle)
    for pts in lay.curves:
        xy = polyline_xy(pts, 0.0, 0.0, 1.0)
        ax.plot([p[0] for p in xy], [-p[1] for p in xy], color="#b4231f", lw=1.8)
    for k, u in enumerate(lay.node_u, start=1):
        x, y = math.sin(2 * math.pi * u), math.cos(2 * math.pi * u)
        filled = k in lay.touch_nodes
        ax.plot([x], [y], marker="o", ms=9, mec="#1f2a44", mew=1.5,
                mfc="#1f2a44" if filled else "white")
        ax.annotate(str(k), (1.13 * x, 1.13 * y), ha="center", va="center", fontsize=11)
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)
    fig.savefig(dest, dpi=dpi, bbox_inches="tight")
    plt.close(fig)


# ---------------------------------------------------------------------------
# crossing check (used by tests and `verify`)
# ---------------------------------------------------------------------------


def _segments_cross(p1, p2, p3, p4, eps=1e-9) -> bool:
    d1x, d1y = p2[0] - p1[0], p2[1] - p1[1]
    d2x, d2y = p4[0] - p3[0], p4[1] - p3[1]
    denom = d1x * d2y - d1y * d2x
    ex, ey = p3[0] - p1[0], p3[1] - p1[1]
    if abs(denom) < eps:
        return False
    t = (ex * d2y - ey * d2x) / denom
    s = (ex * d1y - ey * d1x) / denom
    return eps < t < 1 - eps and eps < s < 1 - eps


def count_curve_crossings(n: int, d: Diagram) -> int:
    """Number of pairwise intersections between the sampled rendered curves."""
    lay = layout_diagram(n, d)
    polys = [polyline_xy(pts, _CX, _CY, _R) for pts in lay.curves]
    crossings = 0
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            for k in range(len(polys[i]) - 1):
                for l in range(len(polys[j]) - 1):
                    if _segments_cross(polys[i][k], polys[i][k + 1],
                                       polys[j][l], polys[j][l + 1]):
                        crossings += 1
    return crossings
