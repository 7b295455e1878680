"""Mapping-spec documents: JSON serialization of a map's coefficients.

Schema (UTF-8 JSON, unknown keys rejected)::

    {
      "name": "f1",                -- optional
      "p": 2,
      "truncation": 8,
      "layers": [
        {"k": 1,
         "analytic": [[1, 1.0, 0.0], ...],      -- [j, re, im] triples
         "anti_analytic": [[1, 0.25, 0.0], ...]}
      ]
    }

Absent (k, j) slots are zero.  The (1, 1) analytic entry must be
``[1, 1.0, 0.0]`` or absent (it is defaulted).  ``parse_spec`` and
``serialize`` round-trip every finite double bit-exactly, signed zeros
included.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .core import PolyharmonicMap

_TOP_KEYS = {"name", "p", "truncation", "layers"}
_LAYER_KEYS = {"k", "analytic", "anti_analytic"}

# p * truncation slots get materialized as dense arrays; refuse documents
# that would allocate absurdly more than any real use.
_MAX_SLOTS = 1_000_000


class SpecDocumentError(ValueError):
    """Raised for malformed or out-of-contract mapping-spec documents."""


def _require_index(value, label: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecDocumentError(f"{label}: expected an integer, got {value!r}")
    return value


def _require_real(value, label: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecDocumentError(f"{label}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise SpecDocumentError(f"{label}: value must be finite")
    return value


def _parse_entries(raw, label: str, truncation: int) -> dict[int, complex]:
    if not isinstance(raw, list):
        raise SpecDocumentError(f"{label}: expected a list of [j, re, im] triples")
    out: dict[int, complex] = {}
    for i, triple in enumerate(raw):
        where = f"{label}[{i}]"
        if not isinstance(triple, list) or len(triple) != 3:
            raise SpecDocumentError(f"{where}: expected a [j, re, im] triple")
        j = _require_index(triple[0], f"{where}: j")
        if not 1 <= j <= truncation:
            raise SpecDocumentError(f"{where}: power {j} out of range 1..{truncation}")
        if j in out:
            raise SpecDocumentError(f"{where}: duplicate entry for power {j}")
        re = _require_real(triple[1], f"{where}: re")
        im = _require_real(triple[2], f"{where}: im")
        out[j] = complex(re, im)
    return out


def parse_spec(document: str) -> PolyharmonicMap:
    """Parse a mapping-spec document into a validated map."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SpecDocumentError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SpecDocumentError("top level: expected an object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise SpecDocumentError(f"unknown top-level keys: {sorted(unknown)}")
    for field in ("p", "truncation", "layers"):
        if field not in doc:
            raise SpecDocumentError(f"missing required field {field!r}")
    if "name" in doc and not isinstance(doc["name"], str):
        raise SpecDocumentError("name: expected a string")

    p = _require_index(doc["p"], "p")
    truncation = _require_index(doc["truncation"], "truncation")
    if p < 1:
        raise SpecDocumentError("p: must be at least 1")
    if truncation < 1:
        raise SpecDocumentError("truncation: must be at least 1")
    if p * truncation > _MAX_SLOTS:
        raise SpecDocumentError(f"document too large: p * truncation exceeds {_MAX_SLOTS}")

    if not isinstance(doc["layers"], list):
        raise SpecDocumentError("layers: expected a list")
    analytic: dict[tuple[int, int], complex] = {}
    anti_analytic: dict[tuple[int, int], complex] = {}
    seen_k: set[int] = set()
    for li, layer in enumerate(doc["layers"]):
        where = f"layers[{li}]"
        if not isinstance(layer, dict):
            raise SpecDocumentError(f"{where}: expected an object")
        unknown = set(layer) - _LAYER_KEYS
        if unknown:
            raise SpecDocumentError(f"{where}: unknown keys: {sorted(unknown)}")
        if "k" not in layer:
            raise SpecDocumentError(f"{where}: missing required field 'k'")
        k = _require_index(layer["k"], f"{where}: k")
        if not 1 <= k <= p:
            raise SpecDocumentError(f"{where}: k {k} out of range 1..{p}")
        if k in seen_k:
            raise SpecDocumentError(f"{where}: duplicate layer k={k}")
        seen_k.add(k)
        for field, target in (("analytic", analytic), ("anti_analytic", anti_analytic)):
            entries = _parse_entries(layer.get(field, []), f"{where}.{field}", truncation)
            for j, value in entries.items():
                target[(k, j)] = value

    unit = analytic.get((1, 1))
    if unit is not None and unit != 1.0 + 0.0j:
        raise SpecDocumentError("unit analytic coefficient must equal 1 exactly")
    anti_unit = anti_analytic.get((1, 1))
    if anti_unit is not None and abs(anti_unit) >= 1.0:
        raise SpecDocumentError("anti-analytic unit coefficient out of range")

    return PolyharmonicMap.from_coefficients(
        p, truncation, analytic=analytic, anti_analytic=anti_analytic)


def _emit_entries(coeffs: np.ndarray) -> list[list]:
    # Keep any slot that is nonzero or carries a signed zero, so parsing
    # the output reproduces the array bit for bit.
    out = []
    for idx, value in enumerate(coeffs):
        re, im = float(value.real), float(value.imag)
        if re == 0.0 and im == 0.0 and math.copysign(1.0, re) > 0 and math.copysign(1.0, im) > 0:
            continue
        out.append([idx + 1, re, im])
    return out


def serialize(F: PolyharmonicMap, name: str | None = None) -> str:
    """Render a map as a mapping-spec document (JSON text).

    One line per layer keeps documents diff-friendly; floats use their
    shortest round-tripping decimal form.
    """
    head = []
    if name is not None:
        head.append(f'  "name": {json.dumps(name)},')
    head.append(f'  "p": {F.p},')
    head.append(f'  "truncation": {F.truncation},')
    layer_lines = []
    for k, layer in enumerate(F.layers, start=1):
        entry = {"k": k,
                 "analytic": _emit_entries(layer.analytic.coeffs),
                 "anti_analytic": _emit_entries(layer.anti_analytic.coeffs)}
        layer_lines.append("    " + json.dumps(entry, separators=(", ", ": ")))
    return ("{\n" + "\n".join(head) + '\n  "layers": [\n'
            + ",\n".join(layer_lines) + "\n  ]\n}\n")
