"""Sampling-based geometric certificates on polar grids.

Starlikeness and convexity are open conditions on every circle
``|z| = r``; the certificates here evaluate the corresponding ratio on
a dense polar grid and report the minimum with its location.  They are
numerical evidence with explicit margins, not proofs.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .classify import membership
from .core import LayeredMap, PolarPoint, PolyharmonicMap, apply_L, jacobian

DENOMINATOR_FLOOR = 1e-12

_TWO_PI = 2.0 * math.pi


class DenominatorCollapse(ArithmeticError):
    """A certificate denominator fell below the floor at a grid point."""

    def __init__(self, quantity: str, point: PolarPoint, magnitude: float):
        self.quantity = quantity
        self.point = point
        self.magnitude = magnitude
        super().__init__(
            f"|{quantity}| = {magnitude:.3e} at r={point.r:.6f}, "
            f"theta={point.theta:.6f} is below the floor {DENOMINATOR_FLOOR:g}"
        )


class PolarGrid:
    """Product grid radii x angles, strictly inside the punctured disk."""

    __slots__ = ("radii", "angles", "_mesh")

    def __init__(self, radii, angles):
        radii = np.asarray(radii, dtype=float)
        angles = np.asarray(angles, dtype=float)
        if radii.ndim != 1 or radii.size < 8:
            raise ValueError("need at least 8 radii")
        if angles.ndim != 1 or angles.size < 64:
            raise ValueError("need at least 64 angles")
        if not np.all(np.isfinite(radii)) or not np.all(np.isfinite(angles)):
            raise ValueError("grid values must be finite")
        if not np.all(np.diff(radii) > 0.0):
            raise ValueError("radii must be strictly increasing")
        if radii[0] <= 0.0 or radii[-1] >= 1.0:
            raise ValueError("radii must lie strictly inside (0, 1)")
        if np.any(angles < 0.0) or np.any(angles >= _TWO_PI):
            raise ValueError("angles must lie in [0, 2*pi)")
        radii.flags.writeable = False
        angles.flags.writeable = False
        self.radii = radii
        self.angles = angles
        self._mesh = None

    @classmethod
    def default(cls, r_min: float = 0.05, r_max: float = 0.99,
                radii: int = 64, angles: int = 512) -> "PolarGrid":
        """Chebyshev-style radius spacing, denser toward r_max."""
        t = np.linspace(0.0, 1.0, radii)
        r = r_min + (r_max - r_min) * np.sin(0.5 * np.pi * t)
        ang = np.linspace(0.0, _TWO_PI, angles, endpoint=False)
        return cls(r, ang)

    def points(self) -> np.ndarray:
        """Complex mesh of shape (len(radii), len(angles)); cached."""
        if self._mesh is None:
            mesh = self.radii[:, None] * np.exp(1j * self.angles[None, :])
            mesh.flags.writeable = False
            self._mesh = mesh
        return self._mesh

    def point_at(self, i: int, j: int) -> PolarPoint:
        return PolarPoint(float(self.radii[i]), float(self.angles[j]))


@dataclasses.dataclass(frozen=True)
class CertificateReport:
    """Minimum of a sampled functional with verdict and diagnostics.

    ``argmin`` is None when the closed-form origin value undercuts every
    grid point (only possible for the sense check, which includes z=0).
    ``origin_bound`` carries the closed-form small-r value or limit bound
    where one exists; ``inner_row_min`` is the minimum over the smallest
    sampled radius, kept for continuity checks against that bound.
    """

    name: str
    min_value: float
    argmin: PolarPoint | None
    passed: bool
    auxiliary_min: float
    tolerance: float = 0.0
    origin_bound: float | None = None
    inner_row_min: float | None = None

    def record(self) -> str:
        r = 0.0 if self.argmin is None else self.argmin.r
        theta = 0.0 if self.argmin is None else self.argmin.theta
        verdict = "true" if self.passed else "false"
        return (f"name={self.name} min_value={self.min_value:.17g} "
                f"argmin_r={r:.17g} argmin_theta={theta:.17g} pass={verdict}")


@dataclasses.dataclass(frozen=True)
class AngleSearchResult:
    """Best (alpha, beta) found by the lattice search, with its grid minimum."""

    alpha: float
    beta: float
    min_value: float
    passed: bool

    def record(self) -> str:
        verdict = "true" if self.passed else "false"
        return (f"alpha={self.alpha:.17g} beta={self.beta:.17g} "
                f"min_value={self.min_value:.17g} pass={verdict}")


def locate_minimum(values: np.ndarray, grid: PolarGrid):
    """Smallest sampled value and the grid point attaining it."""
    flat = int(np.argmin(values))
    i, j = np.unravel_index(flat, values.shape)
    return float(values[i, j]), grid.point_at(int(i), int(j))


def _guard_denominator(magnitudes: np.ndarray, grid: PolarGrid, quantity: str) -> float:
    aux, point = locate_minimum(magnitudes, grid)
    if aux <= DENOMINATOR_FLOOR:
        raise DenominatorCollapse(quantity, point, aux)
    return aux


def ratio_certificate(values: np.ndarray, grid: PolarGrid, name: str,
                      auxiliary_min: float, tolerance: float = 0.0,
                      origin_bound: float | None = None) -> CertificateReport:
    """Package a grid of real sample values into a report."""
    min_value, argmin = locate_minimum(values, grid)
    passed = min_value > tolerance and auxiliary_min > DENOMINATOR_FLOOR
    return CertificateReport(
        name=name, min_value=min_value, argmin=argmin, passed=passed,
        auxiliary_min=auxiliary_min, tolerance=tolerance,
        origin_bound=origin_bound, inner_row_min=float(values[0].min()),
    )


def origin_ratio_bound(F: PolyharmonicMap) -> float:
    """Closed-form lower bound (1-|b|^2)/(1+|b|)^2 for the r -> 0 limit."""
    beta = abs(F.layers[0].anti_analytic.coeffs[0])
    return (1.0 - beta ** 2) / (1.0 + beta) ** 2


def starlike_certificate(F: PolyharmonicMap, grid: PolarGrid | None = None,
                         tolerance: float = 0.0) -> CertificateReport:
    """Minimum of Re(L[F]/F) over the grid; positive means starlike evidence."""
    if grid is None:
        grid = PolarGrid.default()
    Z = grid.points()
    denominator = F(Z)
    auxiliary = _guard_denominator(np.abs(denominator), grid, "F")
    values = (apply_L(F)(Z) / denominator).real
    return ratio_certificate(values, grid, "starlike", auxiliary, tolerance,
                             origin_bound=origin_ratio_bound(F))


def convex_certificate(F: PolyharmonicMap, grid: PolarGrid | None = None,
                       tolerance: float = 0.0) -> CertificateReport:
    """Minimum of Re(L[L[F]]/L[F]) over the grid; positive means convex evidence."""
    if grid is None:
        grid = PolarGrid.default()
    Z = grid.points()
    LF = apply_L(F)
    denominator = LF(Z)
    auxiliary = _guard_denominator(np.abs(denominator), grid, "L[F]")
    values = (apply_L(LF)(Z) / denominator).real
    return ratio_certificate(values, grid, "convex", auxiliary, tolerance,
                             origin_bound=origin_ratio_bound(F))


def sense_preserving_check(F: PolyharmonicMap, grid: PolarGrid | None = None,
                           tolerance: float = 0.0) -> CertificateReport:
    """Minimum Jacobian over the grid plus the exact origin value 1 - |b|^2."""
    if grid is None:
        grid = PolarGrid.default()
    values = jacobian(F, grid.points())
    grid_min, argmin = locate_minimum(values, grid)
    origin_value = jacobian(F, 0.0)
    if origin_value < grid_min:
        min_value, argmin = origin_value, None
    else:
        min_value = grid_min
    return CertificateReport(
        name="sense-preserving", min_value=min_value, argmin=argmin,
        passed=min_value > tolerance, auxiliary_min=math.inf,
        tolerance=tolerance, origin_bound=origin_value,
        inner_row_min=float(values[0].min()),
    )


def _angle_fields(F: LayeredMap, grid: PolarGrid) -> np.ndarray:
    """Precomputed per-point fields for the two-angle positivity form.

    With A = sum_k |z|^(2(k-1)) h_k'(z), B the same over g_k', and
    u = alpha + beta, v = alpha - beta, the sampled quantity is
    Re(e^{iu} S) + Re(e^{iv} T) where S = A - conj(B) zbar^2 and
    T = conj(B) - A z^2.  Returns the (N, 4) matrix mapping
    (cos u, sin u, cos v, sin v) to values.
    """
    Z = grid.points()
    r2 = (Z * Z.conjugate()).real
    A = np.zeros(Z.shape, dtype=complex)
    B = np.zeros(Z.shape, dtype=complex)
    weight = np.ones(Z.shape)
    for k, layer in enumerate(F.layers):
        if k:
            weight = weight * r2
        A = A + weight * layer.analytic.derivative()(Z)
        B = B + weight * layer.anti_analytic.derivative()(Z)
    S = A - np.conjugate(B) * np.conjugate(Z) ** 2
    T = np.conjugate(B) - A * Z ** 2
    return np.column_stack([S.real.ravel(), -S.imag.ravel(),
                            T.real.ravel(), -T.imag.ravel()])


def _angle_scores(fields: np.ndarray, alphas: np.ndarray, betas: np.ndarray,
                  chunk: int = 256) -> np.ndarray:
    """Grid-minimum score for each (alpha, beta) pair (paired arrays)."""
    u = alphas + betas
    v = alphas - betas
    W = np.stack([np.cos(u), np.sin(u), np.cos(v), np.sin(v)])
    scores = np.empty(alphas.size)
    for start in range(0, alphas.size, chunk):
        sl = slice(start, start + chunk)
        scores[sl] = (fields @ W[:, sl]).min(axis=0)
    return scores


def angle_condition_min(F: LayeredMap, alpha: float, beta: float,
                        grid: PolarGrid | None = None) -> float:
    """Grid minimum of the two-angle positivity form at fixed angles."""
    if grid is None:
        grid = PolarGrid.default()
    fields = _angle_fields(F, grid)
    return float(_angle_scores(fields, np.array([alpha]), np.array([beta]))[0])


def angle_witness_search(F: PolyharmonicMap, angle_steps: int = 180,
                         grid: PolarGrid | None = None) -> AngleSearchResult:
    """Search for an angle pair making the directional form positive.

    The map must satisfy the convex-class coefficient condition.  A
    coarse angle_steps x angle_steps lattice over [0, 2pi)^2 is scored
    by each pair's grid minimum, then the best pair is refined by five
    step-halving passes over its 3x3 neighborhood.  Ties prefer the
    smallest alpha, then beta.  A failed search is just absence of a
    witness, not a disproof.
    """
    if angle_steps < 2:
        raise ValueError("angle_steps must be at least 2")
    if grid is None:
        grid = PolarGrid.default()
    if not membership(F, "convex").member:
        raise ValueError("map does not satisfy the convex coefficient condition")
    fields = _angle_fields(F, grid)

    step = _TWO_PI / angle_steps
    lattice = step * np.arange(angle_steps)
    A, B = np.meshgrid(lattice, lattice, indexing="ij")  # row-major: alpha outer
    scores = _angle_scores(fields, A.ravel(), B.ravel())
    best = int(np.argmax(scores))  # first occurrence = smallest (alpha, beta)
    alpha, beta = float(A.ravel()[best]), float(B.ravel()[best])
    value = float(scores[best])

    h = step
    for _ in range(5):
        h *= 0.5
        offsets = np.array([-h, 0.0, h])
        ca = (alpha + offsets[:, None]).repeat(3, axis=1).ravel() % _TWO_PI
        cb = np.tile(beta + offsets, 3) % _TWO_PI
        cand = _angle_scores(fields, ca, cb)
        order = np.lexsort((cb, ca, -cand))  # best score, then smallest angles
        top = order[0]
        if cand[top] > value:
            alpha, beta, value = float(ca[top]), float(cb[top]), float(cand[top])

    return AngleSearchResult(alpha=alpha, beta=beta, min_value=value,
                             passed=value > 0.0)
