"""Diagnostic raster: escape-time shading, preimages of the cut ray, and
crosses at the solved orbit points, written as binary PPM (P6)."""
from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .function_model import Family
from .partition import PartitionSpec

ESCAPE_RADIUS = 1e3
SHADE_ITER = 64
MARKER = (255, 0, 0)
CUT_COLOR = (255, 210, 0)


def _apply(part: PartitionSpec, z: np.ndarray) -> np.ndarray:
    spec = part.function
    if spec.family is Family.EXP:
        return spec.lam * np.exp(z)
    if spec.family is Family.SIN:
        return spec.lam * np.sin(z)
    return np.exp(z) / (z - spec.pole)


def _escape_counts(part: PartitionSpec, grid: np.ndarray) -> np.ndarray:
    z = grid.copy()
    counts = np.full(grid.shape, SHADE_ITER, dtype=np.int32)
    alive = np.ones(grid.shape, dtype=bool)
    with np.errstate(all="ignore"):
        for i in range(SHADE_ITER):
            z[alive] = _apply(part, z[alive])
            escaped = alive & ~(np.abs(z) <= ESCAPE_RADIUS)
            counts[escaped] = i
            alive &= ~escaped
            if not alive.any():
                break
    return counts


def _cut_preimages(part: PartitionSpec, grid: np.ndarray) -> np.ndarray:
    """Pixels where f crosses the cut ray inside {|f| > R}."""
    with np.errstate(all="ignore"):
        fz = _apply(part, grid)
        ang = np.angle(fz * np.exp(-1j * part.delta_angle))
    ok = np.isfinite(ang) & (np.abs(fz) > part.R) & (np.abs(ang) < math.pi / 2)
    pos = ang > 0
    mask = np.zeros(grid.shape, dtype=bool)
    h = ok[:, 1:] & ok[:, :-1] & (pos[:, 1:] != pos[:, :-1])
    v = ok[1:, :] & ok[:-1, :] & (pos[1:, :] != pos[:-1, :])
    mask[:, 1:] |= h
    mask[1:, :] |= v
    return mask


def _frame(points: list[complex], R: float) -> tuple[float, float, float, float]:
    if not points:
        half = 3.0 * R
        return -half, half, -half, half
    re = [p.real for p in points]
    im = [p.imag for p in points]
    span = max(max(re) - min(re), max(im) - min(im), 1.0)
    margin = max(0.2 * span, 2.0)
    return min(re) - margin, max(re) + margin, min(im) - margin, max(im) + margin


def render_diagnostic(part: PartitionSpec, results, path, size: int = 512) -> int:
    """Write the diagnostic image to ``path``; returns the number of crosses drawn."""
    points = [z for r in results for z in r.orbit]
    x0, x1, y0, y1 = _frame(points, part.R)
    xs = np.linspace(x0, x1, size)
    ys = np.linspace(y1, y0, size)  # row 0 is the top edge
    grid = xs[None, :] + 1j * ys[:, None]

    shade = _escape_counts(part, grid) / SHADE_ITER
    img = np.empty((size, size, 3), dtype=np.uint8)
    img[..., 0] = (40 + 120 * shade).astype(np.uint8)
    img[..., 1] = (50 + 140 * shade).astype(np.uint8)
    img[..., 2] = (70 + 185 * shade).astype(np.uint8)
    img[_cut_preimages(part, grid)] = CUT_COLOR

    drawn = 0
    for z in points:
        col = round((z.real - x0) / (x1 - x0) * (size - 1))
        row = round((y1 - z.imag) / (y1 - y0) * (size - 1))
        if not (1 <= row < size - 1 and 1 <= col < size - 1):
            continue
        for dr, dc in ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)):
            img[row + dr, col + dc] = MARKER
        drawn += 1

    path = Path(path)
    with path.open("wb") as fh:
        fh.write(b"P6\n%d %d\n255\n" % (size, size))
        fh.write(img.tobytes())
    return drawn


def read_ppm(path) -> np.ndarray:
    """Read a binary P6 file written by :func:`render_diagnostic`."""
    data = Path(path).read_bytes()
    fields = []
    pos = 0
    while len(fields) < 4:
        while data[pos:pos + 1].isspace():
            pos += 1
        end = pos
        while not data[end:end + 1].isspace():
            end += 1
        fields.append(data[pos:end])
        pos = end
    if fields[0] != b"P6":
        raise ValueError("not a binary PPM file")
    width, height, maxval = (int(f) for f in fields[1:])
    pixels = np.frombuffer(data, dtype=np.uint8, offset=pos + 1, count=width * height * 3)
    return pixels.reshape(height, width, 3)
