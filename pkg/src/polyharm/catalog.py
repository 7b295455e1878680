"""Named example mappings used by the CLI, docs, and tests."""

from __future__ import annotations

import math

import numpy as np

from .close_to_convex import WITNESS_KINDS, extremal_witness
from .core import PolyharmonicMap

WITNESS_TOKENS = WITNESS_KINDS + ("extremal-h", "f1", "f2", "f3", "f4")


def identity(truncation: int = 1) -> PolyharmonicMap:
    return PolyharmonicMap.from_coefficients(1, truncation)


def f1() -> PolyharmonicMap:
    """z + (1/3) conj(z) + (1/6) |z|^2 conj(z); biharmonic, convex-class."""
    return PolyharmonicMap.from_coefficients(
        2, 1, anti_analytic={(1, 1): 1.0 / 3.0, (2, 1): 1.0 / 6.0})


def f2(degree: int = 3, phase: float = math.pi / 6.0) -> PolyharmonicMap:
    """z + z^degree e^{i phase} / degree; starlike-class with zero slack."""
    if degree < 2:
        raise ValueError("degree must be at least 2")
    value = np.exp(1j * phase) / degree
    return PolyharmonicMap.from_coefficients(1, degree, analytic={(1, degree): value})


def f3(degree: int = 3, phase: float = math.pi / 6.0) -> PolyharmonicMap:
    """z + z^degree e^{i phase} / degree^2; convex-class with zero slack."""
    if degree < 2:
        raise ValueError("degree must be at least 2")
    value = np.exp(1j * phase) / degree ** 2
    return PolyharmonicMap.from_coefficients(1, degree, analytic={(1, degree): value})


def f4() -> PolyharmonicMap:
    """z + (1/9)|z|^2 z + (1/4) conj(z) + (1/9)|z|^2 conj(z)."""
    return PolyharmonicMap.from_coefficients(
        2, 1,
        analytic={(2, 1): 1.0 / 9.0},
        anti_analytic={(1, 1): 1.0 / 4.0, (2, 1): 1.0 / 9.0})


def coefficient_extremal(order: int = 10) -> PolyharmonicMap:
    """Analytic map with a_j = (j+1)/2, the coefficient-bound equality case.

    Not a member of the coefficient-inequality classes; it is the harmonic
    witness showing the (j+1)/2 growth rate is attained.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    js = np.arange(2, order + 1)
    coeffs = {(1, int(j)): (j + 1) / 2.0 for j in js}
    return PolyharmonicMap.from_coefficients(1, order, analytic=coeffs)


def witness_map(kind: str, degree: int = 3, phase: float = math.pi / 6.0,
                order: int = 10) -> PolyharmonicMap:
    """Resolve a witness token (CLI ``--kind``) to a concrete map."""
    if kind in WITNESS_KINDS:
        return extremal_witness(kind, order=order).as_map()
    if kind == "extremal-h":
        return coefficient_extremal(order)
    if kind == "f1":
        return f1()
    if kind == "f2":
        return f2(degree, phase)
    if kind == "f3":
        return f3(degree, phase)
    if kind == "f4":
        return f4()
    raise ValueError(f"unknown witness kind {kind!r}")
