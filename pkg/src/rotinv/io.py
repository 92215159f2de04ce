"""Readers and writers for the supported input formats.

Rasters arrive as PGM, either P2 (ASCII) or P5 (binary); binary samples are
one byte up to maxval 255 and two bytes big-endian up to 65535.  Point
clouds arrive as CSV lines ``x,y,w`` with an optional weight defaulting to
1.0 and ``#`` comments allowed.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError
from .moments import PointCloud, RasterImage


def _pgm_tokens(data: bytes):
    """Header tokenizer: whitespace separated, '#' starts a comment."""
    i = 0
    n = len(data)
    while i < n:
        c = data[i : i + 1]
        if c == b"#":
            while i < n and data[i : i + 1] not in (b"\n", b"\r"):
                i += 1
        elif c.isspace():
            i += 1
        else:
            j = i
            while j < n and not data[j : j + 1].isspace() and data[j : j + 1] != b"#":
                j += 1
            yield data[i:j].decode("ascii"), j
            i = j


def read_pgm(path) -> RasterImage:
    """Load a P2 or P5 PGM file into a raster."""
    with open(path, "rb") as fh:
        data = fh.read()
    tokens = _pgm_tokens(data)
    try:
        magic, _ = next(tokens)
        if magic not in ("P2", "P5"):
            raise DomainError(f"not a PGM file (magic {magic!r})")
        width, _ = next(tokens)
        height, _ = next(tokens)
        maxval, end = next(tokens)
        width, height, maxval = int(width), int(height), int(maxval)
    except StopIteration:
        raise DomainError("truncated PGM header") from None
    if not (0 < maxval <= 65535):
        raise DomainError(f"unsupported PGM maxval {maxval}")
    count = width * height
    if magic == "P2":
        values = []
        for tok, _ in tokens:
            values.append(int(tok))
            if len(values) == count:
                break
        if len(values) != count:
            raise DomainError("truncated P2 pixel data")
        pixels = np.asarray(values, dtype=np.float64)
    else:
        body = data[end + 1 :]  # single whitespace byte after maxval
        if maxval <= 255:
            raw = np.frombuffer(body[:count], dtype=np.uint8)
        else:
            raw = np.frombuffer(body[: 2 * count], dtype=">u2")
        if len(raw) != count:
            raise DomainError("truncated P5 pixel data")
        pixels = raw.astype(np.float64)
    return RasterImage(width, height, pixels.reshape(height, width))


def write_pgm(img: RasterImage, path, maxval=255, binary=True):
    """Write a raster as PGM, scaling its peak to maxval."""
    if not (0 < maxval <= 65535):
        raise DomainError(f"unsupported PGM maxval {maxval}")
    peak = float(img.pixels.max())
    scale = maxval / peak if peak > 0 else 0.0
    quantized = np.rint(img.pixels * scale).astype(np.uint32)
    header = f"{'P5' if binary else 'P2'}\n{img.width} {img.height}\n{maxval}\n"
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        if binary:
            dtype = np.uint8 if maxval <= 255 else ">u2"
            fh.write(quantized.astype(dtype).tobytes())
        else:
            lines = [" ".join(str(v) for v in row) for row in quantized]
            fh.write(("\n".join(lines) + "\n").encode("ascii"))


def read_point_cloud_csv(path) -> PointCloud:
    """Load ``x,y[,w]`` CSV lines into a point cloud."""
    points = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            parts = [p.strip() for p in body.split(",")]
            if len(parts) not in (2, 3):
                raise DomainError(f"line {lineno}: expected x,y[,w]")
            try:
                points.append(tuple(float(p) for p in parts))
            except ValueError:
                raise DomainError(f"line {lineno}: non-numeric field") from None
    if not points:
        raise DomainError("point cloud file has no points")
    return PointCloud.from_points(points)


def write_point_cloud_csv(pc: PointCloud, path):
    with open(path, "w", encoding="utf-8") as fh:
        for x, y, w in zip(pc.xs, pc.ys, pc.ws):
            fh.write(f"{float(x)!r},{float(y)!r},{float(w)!r}\n")
