"""Convex hulls of finite point sets in the plane (spectra, mostly)."""

from __future__ import annotations

import numpy as np


def _cross(o, a, b):
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def hull_vertices(points) -> list[complex]:
    """Counter-clockwise hull vertices (monotone chain), starting at the lowest-left point.

    Collinear and repeated points are dropped, so a segment has two vertices
    and a single point one.
    """
    pts = sorted({(float(z.real), float(z.imag)) for z in np.asarray(points, dtype=complex).reshape(-1)})
    pts = [complex(x, y) for x, y in pts]
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _segment_distance(p, a, b):
    d = b - a
    if d == 0:
        return abs(p - a)
    t = min(max(((p - a) * d.conjugate()).real / abs(d) ** 2, 0.0), 1.0)
    return abs(p - (a + t * d))


def hull_distance(point, points) -> float:
    """Signed distance from ``point`` to the boundary of the hull: positive inside.

    For hulls with empty interior (a point or a segment) the result is minus
    the distance to the set, so it is never positive.
    """
    p = complex(point)
    verts = hull_vertices(points)
    if len(verts) == 1:
        return -abs(p - verts[0])
    if len(verts) == 2:
        return -_segment_distance(p, verts[0], verts[1])
    edges = list(zip(verts, verts[1:] + verts[:1]))
    dist = min(_segment_distance(p, a, b) for a, b in edges)
    inside = all(_cross(a, b, p) >= 0 for a, b in edges)
    return dist if inside else -dist
