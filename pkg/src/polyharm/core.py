"""Data model for truncated polyharmonic mappings of the unit disk.

A map is stored as p layers, layer k contributing
``|z|^(2(k-1)) * (h_k(z) + conj(g_k(z)))`` where h_k and g_k are
polynomials vanishing at the origin.  Everything here is plain
double-precision coefficient arithmetic; no symbolic algebra.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable

import numpy as np

DEFAULT_TRUNCATION = 32

_TWO_PI = 2.0 * math.pi


def _require_inside_disk(z: np.ndarray) -> None:
    if not np.all(np.isfinite(z)):
        raise ValueError("evaluation point must be finite")
    if np.any(np.abs(z) >= 1.0):
        raise ValueError("evaluation point must satisfy |z| < 1")


class PowerSeries:
    """Finite power series ``sum_j c_j z^j`` with a fixed lowest power.

    Map layers use ``low = 1`` (no constant term, so the map vanishes at
    the origin).  Differentiation produces ``low = 0`` series, which is
    the only other supported offset.
    """

    __slots__ = ("coeffs", "low")

    def __init__(self, coeffs: Iterable[complex], low: int = 1):
        arr = np.array(coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a non-empty 1-D sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        if low not in (0, 1):
            raise ValueError("lowest power must be 0 or 1")
        arr.flags.writeable = False
        self.coeffs = arr
        self.low = low

    @property
    def truncation(self) -> int:
        """Highest power carried by the series."""
        return self.low + self.coeffs.size - 1

    def coefficient(self, j: int) -> complex:
        if self.low <= j <= self.truncation:
            return complex(self.coeffs[j - self.low])
        return 0.0 + 0.0j

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        acc = np.full(z.shape, self.coeffs[-1])
        for c in self.coeffs[-2::-1]:
            acc = acc * z + c
        if self.low:
            acc = acc * z
        return acc if acc.shape else complex(acc)

    def derivative(self) -> "PowerSeries":
        """Term-wise derivative; a ``low = 1`` input gains a constant term."""
        powers = np.arange(self.low, self.low + self.coeffs.size)
        d = powers * self.coeffs
        if self.low == 1:
            return PowerSeries(d, low=0)
        d = d[1:]
        if d.size == 0:
            d = np.zeros(1, dtype=complex)
        return PowerSeries(d, low=0)

    def __repr__(self):
        return f"PowerSeries({self.coeffs.tolist()!r}, low={self.low})"


class HarmonicLayer:
    """One layer: analytic series a_j and anti-analytic series b_j.

    The layer evaluates to ``h(z) + conj(g(z))``, which is harmonic.
    """

    __slots__ = ("analytic", "anti_analytic")

    def __init__(self, analytic, anti_analytic):
        if not isinstance(analytic, PowerSeries):
            analytic = PowerSeries(analytic)
        if not isinstance(anti_analytic, PowerSeries):
            anti_analytic = PowerSeries(anti_analytic)
        if analytic.low != 1 or anti_analytic.low != 1:
            raise ValueError("layer series must start at power 1")
        if analytic.truncation != anti_analytic.truncation:
            raise ValueError("both series of a layer must share the truncation order")
        self.analytic = analytic
        self.anti_analytic = anti_analytic

    @property
    def truncation(self) -> int:
        return self.analytic.truncation


class LayeredMap:
    """Raw coefficient stack ``sum_k |z|^(2(k-1)) (h_k(z) + conj(g_k(z)))``.

    No normalization is imposed; this is the output type of coefficient
    operators.  See :class:`PolyharmonicMap` for the normalized object.
    """

    __slots__ = ("layers",)

    def __init__(self, layers: Iterable[HarmonicLayer]):
        layers = tuple(layers)
        if not layers:
            raise ValueError("a map needs at least one layer")
        J = layers[0].truncation
        for layer in layers:
            if not isinstance(layer, HarmonicLayer):
                raise TypeError("layers must be HarmonicLayer instances")
            if layer.truncation != J:
                raise ValueError("all layers must share one truncation order")
        self.layers = layers

    @property
    def p(self) -> int:
        return len(self.layers)

    @property
    def truncation(self) -> int:
        return self.layers[0].truncation

    def __call__(self, z):
        """Evaluate the map at z (scalar or array), strictly inside the disk."""
        z = np.asarray(z, dtype=complex)
        _require_inside_disk(z)
        r2 = (z * z.conjugate()).real
        total = np.zeros(z.shape, dtype=complex)
        weight = np.ones(z.shape)
        for k, layer in enumerate(self.layers):
            if k:
                weight = weight * r2
            total = total + weight * (layer.analytic(z) + np.conjugate(layer.anti_analytic(z)))
        return total if total.shape else complex(total)

    def __repr__(self):
        return f"{type(self).__name__}(p={self.p}, truncation={self.truncation})"


class PolyharmonicMap(LayeredMap):
    """Layered map normalized so the unit analytic coefficient is 1.

    Invariants: a_{1,1} = 1 exactly and |b_{1,1}| < 1.
    """

    __slots__ = ()

    def __init__(self, layers):
        super().__init__(layers)
        a11 = self.layers[0].analytic.coeffs[0]
        if a11 != 1.0 + 0.0j:
            raise ValueError("unit analytic coefficient must equal 1 exactly")
        if abs(self.layers[0].anti_analytic.coeffs[0]) >= 1.0:
            raise ValueError("anti-analytic unit coefficient out of range")

    @classmethod
    def from_coefficients(cls, p, truncation, analytic=None, anti_analytic=None,
                          insert_unit=True):
        """Build a map from sparse ``{(k, j): value}`` dicts.

        Keys are 1-based layer and power indices.  The (1, 1) analytic
        slot defaults to 1 when ``insert_unit`` is set and no entry is
        given.
        """
        if p < 1:
            raise ValueError("layer count must be at least 1")
        if truncation < 1:
            raise ValueError("truncation order must be at least 1")
        a = np.zeros((p, truncation), dtype=complex)
        b = np.zeros((p, truncation), dtype=complex)
        for target, entries, label in ((a, analytic, "analytic"),
                                       (b, anti_analytic, "anti-analytic")):
            for (k, j), value in (entries or {}).items():
                if not 1 <= k <= p:
                    raise ValueError(f"{label} entry ({k},{j}): layer index out of range 1..{p}")
                if not 1 <= j <= truncation:
                    raise ValueError(f"{label} entry ({k},{j}): power out of range 1..{truncation}")
                target[k - 1, j - 1] = value
        if insert_unit and (analytic is None or (1, 1) not in analytic):
            a[0, 0] = 1.0
        return cls(HarmonicLayer(a[k], b[k]) for k in range(p))


@dataclasses.dataclass(frozen=True)
class PolarPoint:
    """Point re^{i theta} strictly inside the punctured disk."""

    r: float
    theta: float

    def __post_init__(self):
        if not (0.0 < self.r < 1.0) or not math.isfinite(self.r):
            raise ValueError("radius must lie strictly inside (0, 1)")
        if not math.isfinite(self.theta):
            raise ValueError("angle must be finite")
        object.__setattr__(self, "theta", self.theta % _TWO_PI)

    @property
    def z(self) -> complex:
        return self.r * complex(math.cos(self.theta), math.sin(self.theta))


def apply_L(F: LayeredMap) -> LayeredMap:
    """Coefficient image under the rotational operator z d/dz - conj(z) d/dconj(z).

    Layer weights |z|^(2(k-1)) are annihilated, so the rule is purely
    coefficient-wise: (a_{k,j}, b_{k,j}) -> (j a_{k,j}, -j b_{k,j}).
    The result is raw (not normalized).
    """
    J = F.truncation
    powers = np.arange(1, J + 1)
    return LayeredMap(
        HarmonicLayer(powers * layer.analytic.coeffs, -powers * layer.anti_analytic.coeffs)
        for layer in F.layers
    )


def jacobian(F: LayeredMap, z):
    """Jacobian |F_z|^2 - |F_zbar|^2 from term-wise Wirtinger derivatives.

    At z = 0 this equals 1 - |b_{1,1}|^2 exactly for normalized maps.
    """
    z = np.asarray(z, dtype=complex)
    _require_inside_disk(z)
    zb = z.conjugate()
    r2 = (z * zb).real
    fz = np.zeros(z.shape, dtype=complex)
    fzb = np.zeros(z.shape, dtype=complex)
    for s, layer in enumerate(F.layers):
        hp = layer.analytic.derivative()(z)
        gp = layer.anti_analytic.derivative()(z)
        if s == 0:
            fz = fz + hp
            fzb = fzb + np.conjugate(gp)
        else:
            common = layer.analytic(z) + np.conjugate(layer.anti_analytic(z))
            w = r2 ** (s - 1)
            fz = fz + w * (r2 * hp + s * zb * common)
            fzb = fzb + w * (r2 * np.conjugate(gp) + s * z * common)
    out = np.abs(fz) ** 2 - np.abs(fzb) ** 2
    return out if out.shape else float(out)


def rotated(F: LayeredMap, angle: float) -> LayeredMap:
    """Conjugation by a disk rotation: z -> e^{-i s} F(e^{i s} z).

    Coefficient rule: a_{k,j} picks up e^{i(j-1)s}, b_{k,j} picks up
    e^{i(j+1)s}.  Normalization is preserved, so the type is too.
    """
    J = F.truncation
    powers = np.arange(1, J + 1)
    phase_a = np.exp(1j * angle * (powers - 1))
    phase_b = np.exp(1j * angle * (powers + 1))
    return type(F)(
        HarmonicLayer(phase_a * layer.analytic.coeffs, phase_b * layer.anti_analytic.coeffs)
        for layer in F.layers
    )


def theta_derivative_check(F: LayeredMap, pt: PolarPoint, step: float) -> float:
    """Gap between i * L[F] and a central finite difference in theta at pt.

    The finite difference is the independent oracle for apply_L; this is
    a test utility, not part of the evaluation path.
    """
    if not (0.0 < step <= 1e-4):
        raise ValueError("step must lie in (0, 1e-4]")
    z = pt.r * np.exp(1j * pt.theta)
    operator_value = 1j * apply_L(F)(z)
    zp = pt.r * np.exp(1j * (pt.theta + step))
    zm = pt.r * np.exp(1j * (pt.theta - step))
    difference = (F(zp) - F(zm)) / (2.0 * step)
    return abs(operator_value - difference)
