import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from apollonian.geometry import build_packing
from apollonian.svg import RenderOptions, render_svg

NS = "{http://www.w3.org/2000/svg}"


def parse(data: bytes):
    return ET.fromstring(data)


@pytest.fixture(scope="module")
def gasket():
    return build_packing((-1, 2, 2, 3), 100)


def test_one_circle_per_disk(gasket):
    root = parse(render_svg(gasket))
    circles = root.findall(f".//{NS}circle")
    assert len(circles) == len(gasket.disks)
    assert [int(c.get("data-curvature")) for c in circles] == [d.beta for d in gasket.disks]


def test_deterministic(gasket):
    assert render_svg(gasket) == render_svg(build_packing((-1, 2, 2, 3), 100))
    opts = RenderOptions(labels=True)
    assert render_svg(gasket, opts) == render_svg(gasket, opts)


def test_canvas_geometry(gasket):
    root = parse(render_svg(gasket))
    vb = [float(x) for x in root.get("viewBox").split()]
    assert vb == pytest.approx([-1.04, -1.04, 2.08, 2.08])
    group = root.find(f"{NS}g")
    assert float(group.get("stroke-width")) == pytest.approx(0.003)


def test_labels_match_curvatures(gasket):
    root = parse(render_svg(gasket, RenderOptions(labels=True)))
    by_center = {}
    for c in root.findall(f".//{NS}circle"):
        by_center[(c.get("cx"), c.get("cy"))] = int(c.get("data-curvature"))
    texts = root.findall(f".//{NS}text")
    assert len(texts) == len(gasket.disks) - 1
    for t in texts:
        assert int(t.text) == by_center[(t.get("x"), t.get("y"))]
        assert float(t.get("font-size")) == pytest.approx(0.8 / int(t.text), abs=1e-6)


def test_circle_positions(gasket):
    root = parse(render_svg(gasket))
    for c, d in zip(root.findall(f".//{NS}circle"), gasket.disks):
        cx, cy = d.center
        assert float(c.get("cx")) == pytest.approx(float(cx), abs=1e-6)
        assert float(c.get("cy")) == pytest.approx(-float(cy), abs=1e-6)
        assert float(c.get("r")) == pytest.approx(float(abs(d.radius)), abs=1e-6)


def test_strip_renders_lines():
    p = build_packing((0, 0, 1, 1), 50)
    root = parse(render_svg(p))
    lines = root.findall(f".//{NS}line")
    assert len(lines) == 2
    assert sorted(float(l.get("x1")) for l in lines) == [-1, 1]
    assert len(root.findall(f".//{NS}circle")) == len(p.disks) - 2
