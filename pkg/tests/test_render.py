"""SVG output structure, determinism, and the self-intersection sweep."""

from __future__ import annotations

import math
import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from polyharm import (
    PolyharmonicMap,
    RenderConfig,
    polyline_is_simple,
    render_disk_image,
    sample_circle,
)
from polyharm.catalog import f2, identity
from polyharm.render import sample_ray


def _xy(w):
    return np.column_stack([w.real, w.imag])


def test_config_validation():
    for field in ("circles", "rays", "samples_per_curve", "canvas"):
        with pytest.raises(ValueError, match=field):
            RenderConfig(**{field: 1})
    for bad in (0.0, 1.0, 1.5):
        with pytest.raises(ValueError, match="r_max"):
            RenderConfig(r_max=bad)
    with pytest.raises(ValueError, match="widths"):
        RenderConfig(stroke_width=0.0)
    with pytest.raises(ValueError, match="widths"):
        RenderConfig(boundary_width=-1.0)


def test_svg_structure():
    doc = render_disk_image(identity())
    assert doc.startswith('<?xml version="1.0" encoding="UTF-8"?>\n')
    assert 'version="1.1"' in doc and 'width="800"' in doc
    assert doc.endswith("</svg>\n")
    assert doc.count("<polyline") == 12 + 24
    assert doc.count('stroke="#16243f"') == 1          # emphasized boundary
    assert doc.count('stroke-width="2.0"') == 1
    assert doc.count('stroke="#46629e"') == 35


def test_polyline_count_follows_config():
    cfg = RenderConfig(circles=5, rays=7, samples_per_curve=64)
    doc = render_disk_image(identity(), cfg)
    assert doc.count("<polyline") == 12


def test_boundary_is_last_circle():
    root = ET.fromstring(render_disk_image(identity()))
    polylines = list(root)
    assert len(polylines) == 36
    strokes = [el.get("stroke") for el in polylines]
    assert strokes[11] == "#16243f"
    assert all(s == "#46629e" for i, s in enumerate(strokes) if i != 11)
    assert all(el.get("fill") == "none" for el in polylines)


def test_identity_bbox_margin():
    # disk image spans [-R, R]^2; 5% margin maps that to canvas * [1/22, 21/22]
    doc = render_disk_image(identity())
    coords = np.array([float(tok) for tok in re.findall(r"-?\d+\.\d\d\d", doc)])
    assert abs(coords.min() - 800.0 / 22.0) <= 0.01
    assert abs(coords.max() - 800.0 * 21.0 / 22.0) <= 0.01


def test_render_is_deterministic():
    first = render_disk_image(f2())
    assert render_disk_image(f2()) == first
    assert ET.fromstring(first) is not None


def test_circle_and_ray_samplers():
    w = sample_circle(identity(), 0.5, 8)
    expected = 0.5 * np.exp(2j * math.pi * np.arange(8) / 8)
    assert np.max(np.abs(w - expected)) <= 1e-15
    ray = sample_ray(identity(), 0.0, 0.9, 10)
    assert np.array_equal(ray.real, np.linspace(0.0, 0.9, 10))
    assert np.max(np.abs(ray.imag)) == 0.0


def test_polyline_simple_basic_shapes():
    bowtie = np.array([[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]])
    assert not polyline_is_simple(bowtie)
    bent = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    assert polyline_is_simple(bent)
    assert polyline_is_simple(bent, closed=True)
    triangle = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, 1.0]])
    assert polyline_is_simple(triangle, closed=True)


def test_polyline_touching_counts_as_crossing():
    # final segment lands on the interior of the first one
    tee = np.array([[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 0.0]])
    assert not polyline_is_simple(tee)
    overlap = np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 0.5], [1.0, -0.5]])
    assert not polyline_is_simple(overlap)
    collinear = np.array([[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [3.0, 0.0], [1.0, 0.0]])
    assert not polyline_is_simple(collinear)


def test_polyline_shape_validation():
    with pytest.raises(ValueError):
        polyline_is_simple(np.zeros(4))
    with pytest.raises(ValueError):
        polyline_is_simple(np.zeros((1, 2)))
    with pytest.raises(ValueError):
        polyline_is_simple(np.zeros((3, 3)))


def test_circle_images_simplicity():
    assert polyline_is_simple(_xy(sample_circle(identity(), 0.9, 256)), closed=True)
    assert polyline_is_simple(_xy(sample_circle(f2(), 0.999, 360)), closed=True)
    # z + z^2 maps |z| = 0.9 to a limacon with an inner loop
    loop = PolyharmonicMap.from_coefficients(1, 2, analytic={(1, 2): 1.0})
    assert not polyline_is_simple(_xy(sample_circle(loop, 0.9, 256)), closed=True)
