"""Constructive close-to-convex harmonic maps and Fekete-Szego bounds.

Maps f = h + conj(g) are built so that g'(z) = e^{i theta} z h'(z) and
Re(1 + z h''/h') > -1/2.  The analytic part comes from a coefficient
recurrence driven by a positive-real-part function, which is in turn
parameterized by a finite atomic measure on the circle: exact
coefficient formulas, no quadrature.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .core import HarmonicLayer, PolyharmonicMap, PowerSeries
from .geometry import (
    DENOMINATOR_FLOOR,
    CertificateReport,
    DenominatorCollapse,
    PolarGrid,
    locate_minimum,
    ratio_certificate,
)

FS_TOL = 1e-9

_TWO_PI = 2.0 * math.pi

WITNESS_KINDS = ("a", "b+", "b-")


class HerglotzMeasure:
    """Finite atomic measure on the circle with unit total weight."""

    __slots__ = ("angles", "weights")

    def __init__(self, angles, weights):
        angles = np.asarray(angles, dtype=float)
        weights = np.asarray(weights, dtype=float)
        if angles.ndim != 1 or angles.size == 0:
            raise ValueError("need at least one atom")
        if weights.shape != angles.shape:
            raise ValueError("angles and weights must pair up")
        if not np.all(np.isfinite(angles)) or not np.all(np.isfinite(weights)):
            raise ValueError("atoms must be finite")
        if np.any(weights < 0.0):
            raise ValueError("weights must be nonnegative")
        if abs(weights.sum() - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1")
        angles = angles % _TWO_PI
        angles.flags.writeable = False
        weights.flags.writeable = False
        self.angles = angles
        self.weights = weights

    @classmethod
    def random(cls, rng: np.random.Generator, max_atoms: int = 8) -> "HerglotzMeasure":
        n = int(rng.integers(1, max_atoms + 1))
        angles = rng.uniform(0.0, _TWO_PI, size=n)
        weights = rng.dirichlet(np.ones(n))
        return cls(angles, weights / weights.sum())

    def rotated(self, shift: float) -> "HerglotzMeasure":
        return HerglotzMeasure(self.angles + shift, self.weights)

    def caratheodory_coefficients(self, order: int) -> np.ndarray:
        """Coefficients c_1..c_order of the induced positive-real-part function.

        The measure represents p(z) = (3/2) sum_m w_m (1 + e_m z)/(1 - e_m z)
        with e_m = e^{i phi_m}, so c_j = 3 sum_m w_m e^{i j phi_m} and
        |c_j| <= 2 Re c_0 = 3.
        """
        if order < 1:
            raise ValueError("order must be at least 1")
        j = np.arange(1, order + 1)
        return 3.0 * (self.weights[:, None] * np.exp(1j * np.outer(self.angles, j))).sum(axis=0)


class CloseToConvexMap:
    """Harmonic f = h + conj(g) with companion g'(z) = e^{i theta} z h'(z)."""

    __slots__ = ("h", "g", "theta")

    def __init__(self, h: PowerSeries, g: PowerSeries, theta: float):
        if h.low != 1 or g.low != 1:
            raise ValueError("series must start at power 1")
        if h.truncation != g.truncation:
            raise ValueError("h and g must share the truncation order")
        if h.truncation < 3:
            raise ValueError("truncation order must be at least 3")
        if h.coeffs[0] != 1.0 + 0.0j:
            raise ValueError("h must be normalized with unit leading coefficient")
        # coefficient form of the companion condition: j b_j = e^{i theta}(j-1) a_{j-1}
        phase = np.exp(1j * theta)
        j = np.arange(1, h.truncation + 1)
        expected = np.empty_like(h.coeffs)
        expected[0] = 0.0
        expected[1:] = phase * (j[1:] - 1) * h.coeffs[:-1] / j[1:]
        if np.max(np.abs(g.coeffs - expected)) > 1e-12:
            raise ValueError("companion series does not satisfy the coefficient link")
        self.h = h
        self.g = g
        self.theta = float(theta)

    @property
    def truncation(self) -> int:
        return self.h.truncation

    @classmethod
    def from_analytic(cls, coeffs, theta: float) -> "CloseToConvexMap":
        """Attach the companion series to a given analytic part."""
        a = np.asarray(coeffs, dtype=complex)
        phase = np.exp(1j * theta)
        j = np.arange(1, a.size + 1)
        b = np.zeros_like(a)
        b[1:] = phase * (j[1:] - 1) * a[:-1] / j[1:]
        return cls(PowerSeries(a), PowerSeries(b), theta)

    @classmethod
    def from_measure(cls, measure: HerglotzMeasure, theta: float,
                     order: int) -> "CloseToConvexMap":
        """Build the map whose h solves z h''/h' = p(z) - 3/2.

        Coefficients follow the recurrence
        a_{j+1} = (1/(j(j+1))) sum_{g=1..j} g a_g c_{j+1-g}, a_1 = 1.
        """
        if order < 3:
            raise ValueError("order must be at least 3")
        c = measure.caratheodory_coefficients(order)
        a = np.zeros(order, dtype=complex)
        a[0] = 1.0
        gamma = np.arange(1, order + 1)
        for j in range(1, order):
            a[j] = (gamma[:j] * a[:j]) @ c[j - 1 :: -1] / (j * (j + 1))
        return cls.from_analytic(a, theta)

    def as_map(self) -> PolyharmonicMap:
        """The same function as a one-layer polyharmonic map."""
        return PolyharmonicMap([HarmonicLayer(self.h, self.g)])

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.h(z) + np.conjugate(self.g(z))
        return out if np.shape(out) else complex(out)

    def __repr__(self):
        return f"CloseToConvexMap(truncation={self.truncation}, theta={self.theta})"


@dataclasses.dataclass(frozen=True)
class FeketeSzegoResult:
    """Both functional values |a3 - lam a2^2|, |b3 - lam b2^2| and their bounds."""

    lam: float
    value_a: float
    value_b: float
    bound_a: float
    bound_b: float

    @property
    def within_a(self) -> bool:
        return self.value_a <= self.bound_a + FS_TOL

    @property
    def within_b(self) -> bool:
        return self.value_b <= self.bound_b + FS_TOL

    @property
    def holds(self) -> bool:
        return self.within_a and self.within_b


def fekete_szego(f: CloseToConvexMap, lam: float) -> FeketeSzegoResult:
    """Evaluate both Fekete-Szego functionals of f at real weight lam.

    The sharp bounds for this family are max(1/2, |8-9 lam|/4) on the
    analytic side and 1 + |lam|/4 on the anti-analytic side.
    """
    a2, a3 = f.h.coefficient(2), f.h.coefficient(3)
    b2, b3 = f.g.coefficient(2), f.g.coefficient(3)
    return FeketeSzegoResult(
        lam=float(lam),
        value_a=abs(a3 - lam * a2 ** 2),
        value_b=abs(b3 - lam * b2 ** 2),
        bound_a=max(0.5, abs(8.0 - 9.0 * lam) / 4.0),
        bound_b=1.0 + abs(lam) / 4.0,
    )


def extremal_witness(kind: str, order: int = 10) -> CloseToConvexMap:
    """Witness maps attaining the Fekete-Szego bounds.

    ``a``   single atom at angle 0, theta 0 (a2 = 3/2, a3 = 2); attains
            the analytic bound whenever |8 - 9 lam| >= 2.
    ``b-``  single atom at angle pi, theta 0 (b3 = -1); attains the
            anti-analytic bound for lam >= 0.
    ``b+``  single atom at angle 0, theta 0 (b3 = +1); attains it for
            lam < 0.
    """
    if kind not in WITNESS_KINDS:
        raise ValueError(f"kind must be one of {WITNESS_KINDS}, got {kind!r}")
    angle = math.pi if kind == "b-" else 0.0
    measure = HerglotzMeasure([angle], [1.0])
    return CloseToConvexMap.from_measure(measure, 0.0, order)


def verify_condition(f: CloseToConvexMap, grid: PolarGrid | None = None) -> CertificateReport:
    """Grid minimum of Re(1 + z h''/h') + 1/2 for the defining condition.

    Positive minimum is the numerical check that f stays in the class at
    its truncation order.  A vanishing h' on the grid is reported as a
    denominator collapse (the truncated map leaves the class there).
    """
    if grid is None:
        grid = PolarGrid.default()
    Z = grid.points()
    hp = f.h.derivative()
    denominator = hp(Z)
    magnitude = np.abs(denominator)
    auxiliary, point = locate_minimum(magnitude, grid)
    if auxiliary <= DENOMINATOR_FLOOR:
        raise DenominatorCollapse("h'", point, auxiliary)
    values = (1.0 + Z * hp.derivative()(Z) / denominator).real + 0.5
    return ratio_certificate(values, grid, "close-to-convex-condition", auxiliary)


@dataclasses.dataclass(frozen=True)
class SweepRow:
    """Per-lam empirical maxima over a sample pool, next to the bounds."""

    lam: float
    max_a: float
    bound_a: float
    max_b: float
    bound_b: float

    @property
    def within(self) -> bool:
        return self.max_a <= self.bound_a + FS_TOL and self.max_b <= self.bound_b + FS_TOL


def sample_pool(count: int, seed: int = 0, order: int = 10,
                max_atoms: int = 8) -> list[CloseToConvexMap]:
    """Seeded pool of random maps, one derived stream per sample.

    The per-sample stream depends only on (seed, index), so pools are
    reproducible and order-independent.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    pool = []
    for i in range(count):
        rng = np.random.default_rng((seed, i))
        measure = HerglotzMeasure.random(rng, max_atoms=max_atoms)
        theta = rng.uniform(0.0, _TWO_PI)
        pool.append(CloseToConvexMap.from_measure(measure, theta, order))
    return pool


def fekete_szego_sweep(mu_samples: int, lambdas, seed: int = 0, order: int = 10,
                       include_witnesses: bool = True) -> list[SweepRow]:
    """Empirical maxima of both functionals over a random pool, per lam.

    The three extremal witnesses join the pool by default so the maxima
    touch the bounds where those are attained.
    """
    pool = sample_pool(mu_samples, seed=seed, order=order)
    if include_witnesses:
        pool = [extremal_witness(kind, order) for kind in WITNESS_KINDS] + pool
    rows = []
    for lam in lambdas:
        results = [fekete_szego(f, lam) for f in pool]
        rows.append(SweepRow(
            lam=float(lam),
            max_a=max(res.value_a for res in results),
            bound_a=results[0].bound_a,
            max_b=max(res.value_b for res in results),
            bound_b=results[0].bound_b,
        ))
    return rows
