import re

import pytest

from surfcycles.errors import MissingLayout
from surfcycles.generators import cube, grid_torus, schema_surface
from surfcycles.render import render_svg


def _polylines(svg):
    return re.findall(r'<polyline points="([^"]*)"', svg)


def test_systole_is_one_polyline_of_four_segments():
    s = grid_torus(4, 4)
    svg = render_svg(s, [("systole", [0, 1, 2, 3])])
    lines = _polylines(svg)
    assert len(lines) == 1 and len(lines[0].split()) == 5


def test_plain_graph_has_no_cycles_or_legend():
    svg = render_svg(grid_torus(4, 4))
    assert not _polylines(svg) and 'class="legend"' not in svg


def test_wraparound_edges_split_at_frame():
    # 32 edges, 8 of them wrap around and are drawn as two halves
    svg = render_svg(grid_torus(4, 4))
    assert svg.count("<line") == 40


def test_two_cycles_two_colours_and_legend():
    svg = render_svg(grid_torus(5, 5), [("a", [0, 1, 2, 3, 4]), ("b", [0, 5, 10, 15, 20])])
    strokes = re.findall(r'<g class="cycle" stroke="([^"]*)"', svg)
    assert len(set(strokes)) == 2
    assert svg.count("<text") == 2


def test_opacity_follows_weight():
    svg = render_svg(grid_torus(4, 4, "random", seed=1, lo=1, hi=9))
    opacities = {float(x) for x in re.findall(r'stroke-opacity="([0-9.]+)"', svg)}
    assert len(opacities) > 1 and max(opacities) == pytest.approx(1.0)


def test_schema_layout_renders_without_wrapping():
    s = schema_surface(2, 3)
    assert render_svg(s).count("<line") == s.n_edges


def test_missing_layout():
    with pytest.raises(MissingLayout):
        render_svg(cube())
