import pytest

from prudentwalks.render import render_ascii, render_svg
from prudentwalks.walks import SquareWalk, TriWalk


def test_empty_walk_single_marker():
    svg = render_svg(SquareWalk(""))
    assert "<circle" in svg
    assert "<polyline" not in svg


def test_nes_three_segments():
    svg = render_svg(SquareWalk("NES"), box=True)
    assert svg.count("<polyline") == 1
    pts = svg.split('points="')[1].split('"')[0].split()
    assert len(pts) == 4  # three segments
    # bounding rectangle 1x1 drawn as the box outline
    assert 'width="20" height="20"' in svg


def test_svg_deterministic():
    w = SquareWalk("NNEESSWWN"[:6])
    assert render_svg(w) == render_svg(w)


def test_triangular_walk_inside_box_outline():
    w = TriWalk("21013")
    svg = render_svg(w, box=True)
    assert "<polygon" in svg  # triangle outline
    assert "<polyline" in svg


def test_ascii_square():
    art = render_ascii(SquareWalk("NES"))
    assert art.splitlines() == ["*-*", "| |", "O X"]


def test_ascii_rejects_triangular():
    with pytest.raises(ValueError):
        render_ascii(TriWalk("210"))
