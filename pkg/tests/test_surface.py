from fractions import Fraction

import pytest

from surfcycles.errors import (CycleNotInGraph, Disconnected, NegativeWeight, NonManifold,
                               NonOrientable, NotSimple, ParseError)
from surfcycles.generators import cube, grid_torus, schema_surface, triangle
from surfcycles.surface import (SidedCycle, build_from_faces, cut_along_simple_cycle, dual,
                                format_decimal, parse_surf, serialize)


def test_grid_torus_counts():
    s = grid_torus(3, 3)
    assert (s.n_vertices, s.n_edges, s.n_faces) == (9, 18, 9)
    assert s.genus == 1 and s.is_closed


def test_triangle_is_a_disk():
    s = triangle()
    assert s.genus == 0 and s.boundary_count == 1 and s.euler_characteristic() == 1


def test_cube_is_a_sphere():
    assert cube().genus == 0


def test_euler_formula_holds():
    for s in (grid_torus(5, 7), schema_surface(2, 3), schema_surface(3, 2)):
        assert s.euler_characteristic() == 2 - 2 * s.genus - s.boundary_count


def test_sigma_is_next_of_twin():
    s = grid_torus(4, 5)
    for h in range(len(s.origin)):
        assert s.rotate(h) == s.next[h ^ 1]
        assert s.origin[s.rotate(h)] == s.origin[h]


def test_rotation_visits_every_half_edge_once():
    s = schema_surface(2, 3)
    seen = [h for v in range(s.n_vertices) for h in s.rotation(v)]
    assert sorted(seen) == list(range(len(s.origin)))


def test_parse_serialize_round_trip():
    s = grid_torus(4, 4, "random", seed=3)
    t = parse_surf(serialize(s, "round trip"))
    assert t.weights == s.weights and t.layout == s.layout
    assert [t.face_vertices(f) for f in t.real_faces()] == [s.face_vertices(f) for f in s.real_faces()]


def test_decimal_weights_are_scaled_exactly():
    text = "v 3\nf 0 1 2\nw 0 1 0.25\nw 1 2 1.5\n"
    s = parse_surf(text)
    assert s.scale == 4
    assert sorted(s.weights) == [1, 4, 6]
    assert format_decimal(Fraction(s.walk_length(range(0, 6, 2)), s.scale)) in {"2.75"}


@pytest.mark.parametrize("text, exc", [
    ("f 0 1 2\n", ParseError),
    ("v 3\nf 0 1\n", ParseError),
    ("v 3\nf 0 1 2\nw 0 1 -1\n", NegativeWeight),
    ("v 3\nf 0 1 2\nbogus\n", ParseError),
    ("v 3\nf 0 1 5\n", ParseError),
    ("v 3\nf 0 1 2\nw 0 7 1\n", ParseError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_surf(text)


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as info:
        parse_surf("v 3\nf 0 1 2\nw 0 1 x\n")
    assert info.value.line == 3


def test_inconsistent_orientation_rejected():
    with pytest.raises(NonOrientable):
        build_from_faces([[0, 1, 2], [0, 1, 3]])


def test_edge_on_three_faces_rejected():
    with pytest.raises((NonManifold, NonOrientable)):
        build_from_faces([[0, 1, 2], [1, 0, 3], [0, 1, 4]])


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        build_from_faces([[0, 1, 2], [3, 4, 5]])


def test_dual_of_triangle():
    d = dual(triangle())
    assert d.n_vertices == 4 and len(d.edges) == 3


def test_cut_row_of_torus_keeps_chi_and_adds_two_boundaries():
    s = grid_torus(4, 4)
    cut = cut_along_simple_cycle(s, SidedCycle.from_vertices(s, [0, 1, 2, 3]))
    t = cut.surface
    assert t.connected_components()[0] == 1
    assert t.euler_characteristic() == 0 and t.boundary_count == 2


def test_cut_weight_doubles_on_boundary():
    s = grid_torus(5, 5, "random", seed=1)
    cyc = SidedCycle.from_vertices(s, [0, 1, 2, 3, 4])
    t = cut_along_simple_cycle(s, cyc).surface
    boundary = sum(t.weights[h >> 1] for f in t.boundary_faces() for h in t.face_half_edges(f))
    assert boundary == 2 * cyc.length(s)


def test_cut_face_boundary_separates_a_disk():
    s = cube()
    cyc = SidedCycle(tuple(s.face_half_edges(s.real_faces()[0])))
    t = cut_along_simple_cycle(s, cyc).surface
    assert t.connected_components()[0] == 2


def test_cut_rejects_non_simple_and_foreign_cycles():
    s = grid_torus(4, 4)
    with pytest.raises(CycleNotInGraph):
        cut_along_simple_cycle(s, SidedCycle((0, 0, 0)))
    h = s.half_edges_from_vertices([0, 1, 5, 4])
    walk = h + h
    with pytest.raises(NotSimple):
        cut_along_simple_cycle(s, SidedCycle(tuple(walk)))


def test_random_grid_weights_reproducible():
    a = grid_torus(5, 6, "random", seed=9)
    b = grid_torus(5, 6, "random", seed=9)
    c = grid_torus(5, 6, "random", seed=10)
    assert a.weights == b.weights and a.weights != c.weights
