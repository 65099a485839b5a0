"""Instance and solution files, benchmark generators, PGM input, SVG output.

Instance grammar (UTF-8, LF)::

    # optional comment lines, anywhere
    n <count>
    <index> <x> <y>        one line per point, indices 0..n-1 in any order

Solution grammar::

    instance <id>
    <i0> <i1> ... <i(n-1)>  the cyclic vertex order on one line

Canonical output has no comments, points sorted by index, single spaces,
and a trailing LF. An instance's id is not stored in its file; callers
supply it (the CLI uses the file stem).
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import accumulate
from math import isqrt
from pathlib import Path

import numpy as np

from .geom import COORD_CAP, GeometryError, convex_hull, cross
from .polygon import (DuplicatePointError, Instance, InstanceError, NonSimplePolygonError,
                      Polygonization, is_simple)
from .rng import SplitMix64


class FormatError(InstanceError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


class CapacityError(InstanceError):
    pass


# -- instance files ----------------------------------------------------------

def _lines(data):
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    for no, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", no) from None


def parse_instance(data: str | bytes, id: str = "instance") -> Instance:
    it = _lines(data)
    try:
        no, toks = next(it)
    except StopIteration:
        raise FormatError("empty instance file") from None
    if len(toks) != 2 or toks[0] != "n":
        raise FormatError("expected header 'n <count>'", no)
    n = _int(toks[1], no)
    if n < 0:
        raise FormatError("negative point count", no)
    pts: list = [None] * n
    seen: dict = {}
    count = 0
    for no, toks in it:
        if len(toks) != 3:
            raise FormatError("expected '<index> <x> <y>'", no)
        i, x, y = (_int(t, no) for t in toks)
        if not 0 <= i < n:
            raise FormatError(f"index {i} outside 0..{n - 1}", no)
        if pts[i] is not None:
            raise FormatError(f"duplicate index {i}", no)
        if abs(x) > COORD_CAP or abs(y) > COORD_CAP:
            raise FormatError(f"coordinate ({x}, {y}) exceeds cap 2^40", no)
        if (x, y) in seen:
            raise DuplicatePointError(f"line {no}: point ({x}, {y}) repeats index {seen[(x, y)]}")
        seen[(x, y)] = i
        pts[i] = (x, y)
        count += 1
    if count != n:
        raise FormatError(f"header announces {n} points, file has {count}")
    return Instance(id, tuple(pts))


def serialize_instance(inst: Instance) -> bytes:
    out = [f"n {inst.n}\n"]
    out.extend(f"{i} {x} {y}\n" for i, (x, y) in enumerate(inst.points))
    return "".join(out).encode("utf-8")


def parse_solution(data: str | bytes) -> Polygonization:
    it = _lines(data)
    try:
        no, toks = next(it)
    except StopIteration:
        raise FormatError("empty solution file") from None
    if len(toks) != 2 or toks[0] != "instance":
        raise FormatError("expected header 'instance <id>'", no)
    iid = toks[1]
    order: list[int] = []
    for no, toks in it:
        order.extend(_int(t, no) for t in toks)
    if len(set(order)) != len(order):
        raise FormatError("duplicate vertex index in solution")
    return Polygonization(iid, tuple(order))


def serialize_solution(poly: Polygonization) -> bytes:
    return f"instance {poly.instance_id}\n{' '.join(map(str, poly.order))}\n".encode("utf-8")


def read_instance(path) -> Instance:
    path = Path(path)
    return parse_instance(path.read_bytes(), id=path.stem)


def write_instance(inst: Instance, path) -> None:
    Path(path).write_bytes(serialize_instance(inst))


def read_solution(path) -> Polygonization:
    return parse_solution(Path(path).read_bytes())


def write_solution(poly: Polygonization, path) -> None:
    Path(path).write_bytes(serialize_solution(poly))


# -- generators ---------------------------------------------------------------

def _finish(points, id, even: bool, kind: str, seed: int) -> Instance:
    if even:
        points = [(2 * x, 2 * y) for x, y in points]
    return Instance(id, tuple(points), meta={"type": kind, "seed": seed})


def _collinear(points) -> bool:
    if len(points) < 3:
        return False
    a, b = points[0], points[1]
    return all(cross(a, b, p) == 0 for p in points[2:])


def gen_uniform(n: int, extent: int, seed: int, even: bool = False, id: str | None = None) -> Instance:
    """``n`` distinct points drawn uniformly from ``[0, extent]^2``."""
    if n < 3:
        raise ValueError("need at least 3 points")
    if extent < n:
        raise CapacityError(f"extent {extent} too small for {n} distinct points")
    rng = SplitMix64(seed)
    side = extent + 1
    for _ in range(100):
        seen: set = set()
        pts = []
        attempts = 0
        while len(pts) < n:
            attempts += 1
            if attempts > 20 * n + 1000:
                raise CapacityError("duplicate rejections exhausted the retry cap")
            p = (rng.below(side), rng.below(side))
            if p not in seen:
                seen.add(p)
                pts.append(p)
        if not _collinear(pts):
            return _finish(pts, id or f"uniform-{n}-{seed}", even, "uniform", seed)
    raise CapacityError("could not draw a non-collinear point set")


def gen_ortho(n: int, gridlines: int, seed: int, extent: int | None = None,
              even: bool = False, id: str | None = None) -> Instance:
    """Points on ``gridlines`` vertical lines, with y snapped to a coarse row set.

    Every point shares its x with a whole column of others and its y with
    a row, so collinear triples are abundant in both axis directions.
    """
    if n < 3:
        raise ValueError("need at least 3 points")
    if gridlines < 1:
        raise ValueError("need at least one grid line")
    rows = max(gridlines, 2 * -(-n // gridlines))
    if extent is None:
        extent = max(10 * n, rows)
    if rows > extent + 1 or gridlines > extent + 1:
        raise CapacityError("extent too small for the requested grid")
    if gridlines * rows < n:
        raise CapacityError("grid too small for n distinct points")
    xs = [k * extent // max(gridlines - 1, 1) for k in range(gridlines)]
    ys = [k * extent // max(rows - 1, 1) for k in range(rows)]
    rng = SplitMix64(seed)
    for _ in range(100):
        seen: set = set()
        pts = []
        attempts = 0
        while len(pts) < n:
            attempts += 1
            if attempts > 50 * n + 1000:
                raise CapacityError("duplicate rejections exhausted the retry cap")
            p = (xs[rng.below(gridlines)], ys[rng.below(rows)])
            if p not in seen:
                seen.add(p)
                pts.append(p)
        if not _collinear(pts):
            return _finish(pts, id or f"ortho-{n}-{seed}", even, "ortho", seed)
    raise CapacityError("could not draw a non-collinear point set (one grid line?)")


@dataclass(frozen=True)
class GrayscaleRaster:
    width: int
    height: int
    maxval: int
    pixels: np.ndarray  # shape (height, width), row 0 at the top

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("raster dimensions must be positive")
        if self.maxval < 1:
            raise ValueError("maxval must be at least 1")
        if self.pixels.shape != (self.height, self.width):
            raise ValueError("pixel array does not match dimensions")


def parse_pgm(data: bytes) -> GrayscaleRaster:
    """Plain (P2) or raw (P5) PGM."""
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise FormatError("not a PGM file (expected P2 or P5)")
    pos = 2
    header: list[int] = []
    while len(header) < 3:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        tok = data[start:pos]
        if not tok.isdigit():
            raise FormatError(f"bad PGM header token {tok!r}")
        header.append(int(tok))
    w, h, maxval = header
    if magic == b"P5":
        pos += 1  # single whitespace byte before the raster
        dtype = np.uint8 if maxval < 256 else np.dtype(">u2")
        size = w * h * (1 if maxval < 256 else 2)
        raw = data[pos:pos + size]
        if len(raw) != size:
            raise FormatError("truncated P5 raster")
        px = np.frombuffer(raw, dtype=dtype).astype(np.int64).reshape(h, w)
    else:
        body = b" ".join(line.split(b"#")[0] for line in data[pos:].splitlines())
        vals = body.split()
        if len(vals) != w * h:
            raise FormatError(f"P2 raster has {len(vals)} values, expected {w * h}")
        px = np.array([int(v) for v in vals], dtype=np.int64).reshape(h, w)
    if px.size and (px.min() < 0 or px.max() > maxval):
        raise FormatError("pixel value outside 0..maxval")
    return GrayscaleRaster(w, h, maxval, px)


def read_pgm(path) -> GrayscaleRaster:
    return parse_pgm(Path(path).read_bytes())


def _sample_weighted(raster: GrayscaleRaster, weights: np.ndarray, n: int, seed: int,
                     even: bool, kind: str, id: str | None) -> Instance:
    flat = [int(w) for w in weights.ravel()]
    nonzero = sum(1 for w in flat if w > 0)
    if nonzero == 0:
        raise CapacityError("raster has zero total weight")
    if nonzero < n:
        raise CapacityError(f"only {nonzero} pixels carry weight, {n} points requested")
    cum = list(accumulate(flat))
    total = cum[-1]
    rng = SplitMix64(seed)
    w = raster.width
    seen: set = set()
    pts = []
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > 50 * n + 1000:
            raise CapacityError("duplicate rejections exhausted the retry cap")
        k = bisect_right(cum, rng.below(total))
        if k in seen:
            continue
        seen.add(k)
        row, col = divmod(k, w)
        # image rows run downwards, instance y upwards
        pts.append((col, raster.height - 1 - row))
    return _finish(pts, id or f"{kind}-{n}-{seed}", even, kind, seed)


def gen_illumination(raster: GrayscaleRaster, n: int, seed: int, even: bool = False,
                     id: str | None = None) -> Instance:
    """Pixels drawn with probability proportional to brightness."""
    return _sample_weighted(raster, raster.pixels, n, seed, even, "illumination", id)


def gradient_weights(raster: GrayscaleRaster) -> np.ndarray:
    """Integer gradient magnitude ``isqrt(Gx^2 + Gy^2)`` from central differences.

    ``Gx = I[r, c+1] - I[r, c-1]`` (twice the usual derivative, keeping
    integers); borders replicate the edge pixel.
    """
    p = np.pad(raster.pixels.astype(np.int64), 1, mode="edge")
    gx = p[1:-1, 2:] - p[1:-1, :-2]
    gy = p[2:, 1:-1] - p[:-2, 1:-1]
    mag2 = gx * gx + gy * gy
    return np.vectorize(isqrt, otypes=[np.int64])(mag2) if mag2.size else mag2


def gen_edge(raster: GrayscaleRaster, n: int, seed: int, even: bool = False,
             id: str | None = None) -> Instance:
    """Pixels drawn with probability proportional to gradient magnitude."""
    return _sample_weighted(raster, gradient_weights(raster), n, seed, even, "edge", id)


# -- SVG ----------------------------------------------------------------------

def render_svg(inst: Instance, poly: Polygonization | None = None) -> str:
    pts = inst.points
    if poly is not None and not is_simple(poly, inst).simple:
        raise NonSimplePolygonError("refusing to render a non-simple polygon; verify it first")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1)
    pad = span / 20
    r = span / 200
    width = span / 400

    def fmt(p):
        # flip y so the picture is not mirrored
        return f"{p[0]} {y0 + y1 - p[1]}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0 - pad:g} {y0 - pad:g} '
        f'{x1 - x0 + 2 * pad:g} {y1 - y0 + 2 * pad:g}">',
    ]
    if inst.n >= 3:
        try:
            hull = convex_hull(pts)
        except GeometryError:
            hull = None
        if hull:
            d = " L ".join(fmt(pts[i]) for i in hull)
            parts.append(f'<path class="hull" d="M {d} Z" fill="none" stroke="#888" '
                         f'stroke-width="{width:g}" stroke-dasharray="{4 * width:g} {2 * width:g}"/>')
    if poly is not None:
        d = " L ".join(fmt(pts[i]) for i in poly.order)
        parts.append(f'<path class="polygon" d="M {d} Z" fill="#9cf" fill-opacity="0.5" '
                     f'stroke="#036" stroke-width="{width:g}"/>')
    parts.append('<g class="points" fill="#c00">')
    parts.extend(f'<circle cx="{x}" cy="{y0 + y1 - y}" r="{r:g}"/>' for x, y in pts)
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def export_svg(inst: Instance, poly: Polygonization | None, path) -> None:
    Path(path).write_text(render_svg(inst, poly), encoding="utf-8")
