"""Geometric, central and normalized moments, and numeric invariant values.

Sources are weighted point clouds (rotation is exact on them, so they drive
the verification harness) or raster images sampled at pixel centers with the
midpoint rule.  Rasters are flipped to mathematical axes at load time so a
positive angle rotates counterclockwise for both source kinds; with that
convention, rotating a source by theta multiplies the (p, q) complex moment
by exp(i (p - q) theta).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import _accel
from .errors import DegenerateInputError, DomainError, IncompleteTableError
from .eigen import ExponentVector, LinearForm, eigenvector


@dataclass
class PointCloud:
    """Weighted planar points; weights model a density, not a length."""

    xs: np.ndarray
    ys: np.ndarray
    ws: np.ndarray

    @classmethod
    def from_points(cls, points):
        """Build from (x, y) or (x, y, w) tuples; missing weights are 1."""
        xs, ys, ws = [], [], []
        for pt in points:
            if len(pt) == 2:
                x, y = pt
                w = 1.0
            else:
                x, y, w = pt
            xs.append(float(x))
            ys.append(float(y))
            ws.append(float(w))
        return cls(np.asarray(xs), np.asarray(ys), np.asarray(ws))

    def __len__(self):
        return len(self.xs)

    def total_weight(self):
        return float(self.ws.sum())

    def translated(self, dx, dy):
        return PointCloud(self.xs + dx, self.ys + dy, self.ws.copy())

    def scaled(self, s):
        """Uniform scaling as a density pushforward: weights pick up s**2.

        A point mass stands for an integral of the underlying density over
        a patch of plane, and scaling the plane by s multiplies areas by
        s**2; this is the convention under which normalized moments are
        scale invariant.
        """
        if s <= 0:
            raise DomainError("scale factor must be positive")
        return PointCloud(self.xs * s, self.ys * s, self.ws * (s * s))


def rotate_point_cloud(pc: PointCloud, theta: float) -> PointCloud:
    """Exact counterclockwise rotation of every point; weights unchanged."""
    c, s = math.cos(theta), math.sin(theta)
    return PointCloud(c * pc.xs - s * pc.ys, s * pc.xs + c * pc.ys, pc.ws.copy())


@dataclass
class RasterImage:
    """Grayscale raster with non-negative pixels, row-major top-to-bottom."""

    width: int
    height: int
    pixels: np.ndarray  # shape (height, width), float64

    def __post_init__(self):
        self.pixels = np.asarray(self.pixels, dtype=np.float64)
        if self.pixels.shape != (self.height, self.width):
            raise DomainError("pixel array shape does not match width/height")

    def rotated(self, theta: float) -> "RasterImage":
        """Bilinear resampling rotation about the image center."""
        return RasterImage(
            self.width, self.height, _accel.bilinear_rotate(self.pixels, theta)
        )

    def sample_coordinates(self):
        """Pixel centers in math axes: x right, y up, origin bottom-left."""
        rows, cols = np.meshgrid(
            np.arange(self.height), np.arange(self.width), indexing="ij"
        )
        x = cols.ravel() + 0.5
        y = self.height - rows.ravel() - 0.5
        return x, y, self.pixels.ravel()


@dataclass
class MomentTable:
    """Map (p, q) -> moment value of one kind.

    kind is 'geometric', 'central' or 'normalized'; normalized tables only
    carry orders p + q >= 2.
    """

    kind: str
    entries: dict
    max_order: int

    def __getitem__(self, key):
        return self.require(*key)

    def get(self, p, q, default=None):
        return self.entries.get((p, q), default)

    def require(self, p, q):
        try:
            return self.entries[(p, q)]
        except KeyError:
            raise IncompleteTableError(f"missing moment ({p}, {q})") from None


def geometric_moments(src, max_order: int) -> MomentTable:
    """Raw moments of a point cloud or raster up to the given total order.

    Point clouds contribute w * x^p * y^q per point; rasters use the
    midpoint rule with unit pixel area.  Raises on zero total mass.
    """
    if max_order < 2:
        raise DomainError("max_order must be at least 2")
    if isinstance(src, PointCloud):
        x, y, w = src.xs, src.ys, src.ws
    elif isinstance(src, RasterImage):
        x, y, w = src.sample_coordinates()
    else:
        raise DomainError(f"unsupported source type {type(src).__name__}")
    if len(x) == 0 or float(np.sum(w)) <= 0.0:
        raise DegenerateInputError("source has no positive total mass")
    sums = _accel.raw_moments(
        np.asarray(x, dtype=np.float64),
        np.asarray(y, dtype=np.float64),
        np.asarray(w, dtype=np.float64),
        max_order,
    )
    entries = {
        (p, q): float(sums[p, q])
        for p in range(max_order + 1)
        for q in range(max_order + 1 - p)
    }
    return MomentTable("geometric", entries, max_order)


def central_moments(m: MomentTable) -> MomentTable:
    """Binomial shift of a geometric table to the centroid."""
    m00 = m.require(0, 0)
    if m00 == 0:
        raise DegenerateInputError("zero total mass")
    xbar = m.require(1, 0) / m00
    ybar = m.require(0, 1) / m00
    entries = {}
    for p in range(m.max_order + 1):
        for q in range(m.max_order + 1 - p):
            acc = 0.0
            for i in range(p + 1):
                for j in range(q + 1):
                    acc += (
                        comb(p, i)
                        * comb(q, j)
                        * (-xbar) ** (p - i)
                        * (-ybar) ** (q - j)
                        * m.require(i, j)
                    )
            entries[(p, q)] = acc
    return MomentTable("central", entries, m.max_order)


def normalized_moments(mu: MomentTable) -> MomentTable:
    """Scale-normalized moments mu[p,q] / mu[0,0]^(1 + (p+q)/2), p+q >= 2."""
    mu00 = mu.require(0, 0)
    if mu00 <= 0:
        raise DegenerateInputError("total mass must be positive")
    entries = {
        (p, q): v / mu00 ** (1.0 + (p + q) / 2.0)
        for (p, q), v in mu.entries.items()
        if p + q >= 2
    }
    return MomentTable("normalized", entries, mu.max_order)


def moment_pipeline(src, max_order: int) -> MomentTable:
    """geometric -> central -> normalized in one call."""
    return normalized_moments(central_moments(geometric_moments(src, max_order)))


def evaluate_form(form: LinearForm, eta: MomentTable) -> complex:
    """Numeric value of a linear eigenform on a moment table."""
    n = form.order
    total = 0j
    for j, coef in enumerate(form.coefficients):
        total += complex(coef) * eta.require(n - j, j)
    return total


def evaluate_invariant(item, eta: MomentTable) -> complex:
    """Numeric value of an eigenform monomial (or rational generator)."""
    factors = getattr(item, "factors", item)
    if not isinstance(factors, ExponentVector):
        factors = ExponentVector.make(factors)
    value = 1 + 0j
    for sym, e in factors.exponents:
        value *= evaluate_form(eigenvector(sym.n, sym.s), eta) ** e
    return value


@dataclass
class GeneratorCheck:
    """Stability record of one generator across the tested angles."""

    name: str
    label: str
    value: complex
    max_rel_dev: float
    degenerate: bool


@dataclass
class InvarianceReport:
    """Outcome of the rotation-invariance harness on one source."""

    d: int
    anchor: tuple
    angles: tuple
    rows: list = field(default_factory=list)
    max_rel_dev: float = 0.0
    degenerate: bool = False

    def to_json(self):
        return {
            "d": self.d,
            "anchor": list(self.anchor),
            "angles": list(self.angles),
            "max_rel_dev": self.max_rel_dev,
            "degenerate": self.degenerate,
            "generators": [
                {
                    "name": r.name,
                    "label": r.label,
                    "value": [r.value.real, r.value.imag],
                    "max_rel_dev": r.max_rel_dev,
                    "degenerate": r.degenerate,
                }
                for r in self.rows
            ],
        }


# a linear-form value smaller than this fraction of its absolute term sum
# has lost the digits that relative comparisons need (true zeros included)
CANCELLATION_TOL = 1e-9


def _form_conditioning(form: LinearForm, eta: MomentTable) -> float:
    """|form value| / sum|terms|; 0 for a table of exact zeros."""
    n = form.order
    total = 0j
    mag = 0.0
    for j, coef in enumerate(form.coefficients):
        term = complex(coef) * eta.require(n - j, j)
        total += term
        mag += abs(term)
    return abs(total) / mag if mag > 0 else 0.0


def _is_degenerate(factors: ExponentVector, eta: MomentTable) -> bool:
    return any(
        _form_conditioning(eigenvector(sym.n, sym.s), eta) < CANCELLATION_TOL
        for sym, _ in factors.exponents
    )


def verify_invariance(src, d: int, p: int, q: int, angles) -> InvarianceReport:
    """Measure how stable every anchored rational generator is under rotation.

    Point clouds are rotated exactly; rasters by bilinear resampling (so
    raster deviations measure discretization, not the invariants).  A
    generator is flagged degenerate and excluded from the aggregate maximum
    when one of its linear factors nearly cancels on this shape, which is
    where relative deviation stops being meaningful (a symmetric shape
    zeroing a factor is the typical case).
    """
    from .rational import rational_generators

    gens = rational_generators(d, p, q)
    eta = moment_pipeline(src, d)
    if isinstance(src, PointCloud):
        rotate = lambda theta: rotate_point_cloud(src, theta)
    else:
        rotate = lambda theta: src.rotated(theta)
    report = InvarianceReport(d=d, anchor=(p, q), angles=tuple(angles))
    worst = 0.0
    any_degenerate = False
    rotated_tables = [moment_pipeline(rotate(theta), d) for theta in angles]
    for i, g in enumerate(gens):
        ref = evaluate_invariant(g, eta)
        if _is_degenerate(g.factors, eta):
            report.rows.append(
                GeneratorCheck(f"b{i + 1}", g.label(), ref, math.nan, True)
            )
            any_degenerate = True
            continue
        dev = 0.0
        for eta_rot in rotated_tables:
            val = evaluate_invariant(g, eta_rot)
            dev = max(dev, abs(val - ref) / abs(ref))
        worst = max(worst, dev)
        report.rows.append(GeneratorCheck(f"b{i + 1}", g.label(), ref, dev, False))
    report.max_rel_dev = worst
    report.degenerate = any_degenerate
    return report
