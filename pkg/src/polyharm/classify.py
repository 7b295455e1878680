"""Coefficient-class membership tests, bound reports, and member samplers.

Two nested classes of polyharmonic maps are decided here, both defined
by one weighted coefficient budget:

* ``starlike`` kind: weight 2(k-1) + j on each (k, j >= 2) slot;
* ``convex`` kind: weight 2(k-1) + j^2 (a subset of the starlike kind).

In both, the available budget is what the first-order coefficients
leave over from 1.  Membership is sufficient for the matching geometric
property, which the certificates in :mod:`polyharm.geometry` sample.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .core import HarmonicLayer, PolyharmonicMap

KINDS = ("starlike", "convex")

STRICTNESS = 1e-12
BOUND_TOL = 1e-9


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def _weights(kind: str, k: int, powers: np.ndarray) -> np.ndarray:
    # powers holds j >= 2; k is 1-based
    if kind == "starlike":
        return 2.0 * (k - 1) + powers
    return 2.0 * (k - 1) + powers.astype(float) ** 2


def _first_order_budget(F: PolyharmonicMap) -> float:
    budget = abs(F.layers[0].anti_analytic.coeffs[0])
    for k, layer in enumerate(F.layers[1:], start=2):
        budget += (2 * k - 1) * (abs(layer.analytic.coeffs[0]) + abs(layer.anti_analytic.coeffs[0]))
    return float(budget)


@dataclasses.dataclass(frozen=True)
class MembershipReport:
    """Outcome of one weighted-budget test.

    ``lhs`` is the weighted sum over j >= 2 slots, ``rhs`` the budget the
    first-order slots leave, ``slack = rhs - lhs``, and
    ``first_order_budget = 1 - rhs``.
    """

    kind: str
    member: bool
    lhs: float
    rhs: float
    slack: float
    first_order_budget: float


@dataclasses.dataclass(frozen=True)
class CoefficientBoundRow:
    j: int
    total: float
    bound: float
    within: bool
    tight: bool


@dataclasses.dataclass(frozen=True)
class CoefficientBoundReport:
    kind: str
    rows: tuple[CoefficientBoundRow, ...]

    @property
    def all_within(self) -> bool:
        return all(row.within for row in self.rows)


def membership(F: PolyharmonicMap, kind: str) -> MembershipReport:
    """Decide membership of F in the named coefficient class.

    Boundary equality (slack 0) counts as membership; the strict
    first-order condition is enforced with a 1e-12 margin.
    """
    _check_kind(kind)
    budget = _first_order_budget(F)
    rhs = 1.0 - budget
    lhs = 0.0
    if F.truncation >= 2:
        powers = np.arange(2, F.truncation + 1)
        for k, layer in enumerate(F.layers, start=1):
            mags = np.abs(layer.analytic.coeffs[1:]) + np.abs(layer.anti_analytic.coeffs[1:])
            lhs += float(_weights(kind, k, powers) @ mags)
    member = (lhs <= rhs + STRICTNESS) and (rhs > -STRICTNESS) and (budget < 1.0 - STRICTNESS)
    return MembershipReport(kind=kind, member=member, lhs=lhs, rhs=rhs,
                            slack=rhs - lhs, first_order_budget=budget)


def starlike_membership(F: PolyharmonicMap) -> MembershipReport:
    return membership(F, "starlike")


def convex_membership(F: PolyharmonicMap) -> MembershipReport:
    return membership(F, "convex")


def coefficient_bounds(F: PolyharmonicMap, kind: str) -> CoefficientBoundReport:
    """Per-degree coefficient sums against the sharp 1/j or 1/j^2 bounds.

    Only meaningful for members; a non-member input is rejected.
    """
    _check_kind(kind)
    if not membership(F, kind).member:
        raise ValueError(f"map does not satisfy the {kind} coefficient condition")
    rows = []
    for j in range(2, F.truncation + 1):
        total = 0.0
        for layer in F.layers:
            total += abs(layer.analytic.coeffs[j - 1]) + abs(layer.anti_analytic.coeffs[j - 1])
        bound = 1.0 / j if kind == "starlike" else 1.0 / j ** 2
        rows.append(CoefficientBoundRow(
            j=j, total=float(total), bound=bound,
            within=total <= bound + BOUND_TOL,
            tight=abs(total - bound) <= BOUND_TOL,
        ))
    return CoefficientBoundReport(kind=kind, rows=tuple(rows))


def sample_member(kind: str, p: int, truncation: int, fill: float = 1.0,
                  seed: int = 0) -> PolyharmonicMap:
    """Draw a random member of the named class, deterministically per seed.

    First-order slots consume at most half the unit budget (a margin that
    keeps samples safely away from the degenerate corner).  The j >= 2
    block is then rescaled so its weighted sum equals ``fill`` times the
    remaining budget, hence slack is (1 - fill) * rhs up to rounding.
    """
    _check_kind(kind)
    if p < 1:
        raise ValueError("layer count must be at least 1")
    if truncation < 2:
        raise ValueError("truncation order must be at least 2")
    if not (0.0 < fill <= 1.0):
        raise ValueError("fill must lie in (0, 1]")
    rng = np.random.default_rng(seed)
    J = truncation

    a = np.zeros((p, J), dtype=complex)
    b = np.zeros((p, J), dtype=complex)

    # First-order block: column 0 is a_{k,1}, column 1 is b_{k,1}.
    mags = rng.uniform(size=(p, 2))
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(p, 2))
    mags[0, 0] = 0.0  # a_{1,1} is pinned to 1, not sampled
    k_weights = 2.0 * np.arange(2, p + 1) - 1.0
    raw_budget = float(mags[0, 1] + (k_weights @ mags[1:].sum(axis=1) if p > 1 else 0.0))
    target_budget = 0.5 * rng.uniform()
    scale = target_budget / raw_budget if raw_budget > 0.0 else 0.0
    first = scale * mags * np.exp(1j * phases)
    a[:, 0] = first[:, 0]
    b[:, 0] = first[:, 1]
    a[0, 0] = 1.0

    # Higher block: random sparse support, at least one live slot.
    support = rng.uniform(size=(p, J - 1, 2)) < 0.4
    high_mags = rng.uniform(size=(p, J - 1, 2)) * support
    high_phases = rng.uniform(0.0, 2.0 * np.pi, size=(p, J - 1, 2))
    if not high_mags.any():
        high_mags[0, 0, 0] = 1.0

    powers = np.arange(2, J + 1)
    weights = np.stack([_weights(kind, k, powers) for k in range(1, p + 1)])
    raw_lhs = float((weights * high_mags.sum(axis=2)).sum())

    # rhs recomputed from the realized complex values so the rescale
    # matches the membership arithmetic bit for bit.
    budget = abs(b[0, 0])
    for k in range(2, p + 1):
        budget += (2 * k - 1) * (abs(a[k - 1, 0]) + abs(b[k - 1, 0]))
    rhs = 1.0 - budget
    high = (fill * rhs / raw_lhs) * high_mags * np.exp(1j * high_phases)
    a[:, 1:] = high[:, :, 0]
    b[:, 1:] = high[:, :, 1]

    return PolyharmonicMap(HarmonicLayer(a[k], b[k]) for k in range(p))
