"""Stereographic pictures of the positive chamber complex in rank 3.

Geometry is converted to floats only here, for drawing.  Which chambers are
shaded is decided by the exact layer in :mod:`cosetlab.chambers`.
"""
from __future__ import annotations

import math

from .chambers import GenericVector, positive_complex, ray_table
from .coxgroup import Group

SIZE = 600
VIEW = 3.0  # half-width of the drawn window in projected units
SAMPLES = 24
MAX_R = 12.0


def _frame(group: Group, rho) -> list[list[float]]:
    """Orthonormal basis of the span of the roots, with the third vector along rho."""
    basis: list[list[float]] = []
    r = [float(x) for x in rho]
    vecs = [r] + [[float(x) for x in a] for a in group.simple_roots]
    for v in vecs:
        w = list(v)
        for b in basis:
            d = sum(x * y for x, y in zip(w, b))
            w = [x - d * y for x, y in zip(w, b)]
        nrm = math.sqrt(sum(x * x for x in w))
        if nrm > 1e-9:
            basis.append([x / nrm for x in w])
        if len(basis) == 3:
            break
    return [basis[1], basis[2], basis[0]]


def _to_sphere(frame, v) -> tuple:
    p = [sum(float(x) * y for x, y in zip(v, b)) for b in frame]
    n = math.sqrt(sum(x * x for x in p))
    return tuple(x / n for x in p)


def _project(p) -> tuple | None:
    """Stereographic projection from the south pole (the antipode of rho)."""
    x, y, z = p
    if 1 + z < 1e-9:
        return None
    q = (x / (1 + z), y / (1 + z))
    if math.hypot(*q) > MAX_R:
        return None
    return q


def _arc(a, b, k=SAMPLES):
    dot = max(-1.0, min(1.0, sum(x * y for x, y in zip(a, b))))
    om = math.acos(dot)
    if om < 1e-12:
        return [a]
    s = math.sin(om)
    return [
        tuple((math.sin((1 - t) * om) * x + math.sin(t * om) * y) / s for x, y in zip(a, b))
        for t in (i / k for i in range(k + 1))
    ]


def _xy(q) -> str:
    scale = SIZE / (2 * VIEW)
    return f"{(q[0] + VIEW) * scale:.2f},{(VIEW - q[1]) * scale:.2f}"


def _polyline_runs(points):
    run = []
    for p in points:
        q = _project(p)
        if q is None:
            if len(run) > 1:
                yield run
            run = []
        else:
            run.append(q)
    if len(run) > 1:
        yield run


def render(group: Group, gv: GenericVector) -> str:
    if group.rank != 3:
        raise ValueError("pictures are drawn for rank-3 groups only")
    cx = positive_complex(group, gv)
    frame = _frame(group, gv.rho)
    table = ray_table(group)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>positive chamber complex of {group.symbol}: {len(cx.facets)} facets</title>",
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    for w in cx.facets:
        corners = [_to_sphere(frame, r) for r in table.rays[w.index]]
        pts = []
        for i in range(3):
            pts.extend(_arc(corners[i], corners[(i + 1) % 3])[:-1])
        proj = [_project(p) for p in pts]
        fill = "#3b6ea8" if w == group.identity else "#a8c4e6"
        out.append(
            f'<polygon class="facet" data-element="{w!r}" fill="{fill}" stroke="none" '
            f'points="{" ".join(_xy(q) for q in proj)}"/>'
        )
    # reflecting great circles
    for beta in group.positive_roots:
        nvec = _to_sphere(frame, beta)
        # two orthonormal vectors of the plane beta-perp
        a = (1.0, 0.0, 0.0) if abs(nvec[0]) < 0.9 else (0.0, 1.0, 0.0)
        d = sum(x * y for x, y in zip(a, nvec))
        u = [x - d * y for x, y in zip(a, nvec)]
        un = math.sqrt(sum(x * x for x in u))
        u = [x / un for x in u]
        v = (nvec[1] * u[2] - nvec[2] * u[1], nvec[2] * u[0] - nvec[0] * u[2], nvec[0] * u[1] - nvec[1] * u[0])
        circle = [
            tuple(math.cos(t) * x + math.sin(t) * y for x, y in zip(u, v))
            for t in (2 * math.pi * i / (8 * SAMPLES) for i in range(8 * SAMPLES + 1))
        ]
        for run in _polyline_runs(circle):
            out.append(
                f'<polyline class="mirror" fill="none" stroke="#555" stroke-width="1" '
                f'points="{" ".join(_xy(q) for q in run)}"/>'
            )
    # the generic hyperplane is the equator, which projects to the unit circle
    centre = _xy((0.0, 0.0))
    radius = SIZE / (2 * VIEW)
    cx_, cy_ = centre.split(",")
    out.append(
        f'<circle class="hyperplane" cx="{cx_}" cy="{cy_}" r="{radius:.2f}" fill="none" '
        f'stroke="#c0392b" stroke-width="3"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
