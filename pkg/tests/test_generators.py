import pytest

from surfcycles.errors import TooSmall
from surfcycles.generators import (dumbbell, grid_cylinder, grid_torus, remove_face,
                                   schema_surface)


def _simple_graph(s):
    pairs = [frozenset(s.endpoints(e)) for e in range(s.n_edges)]
    return len(set(pairs)) == len(pairs) and all(len(p) == 2 for p in pairs)


@pytest.mark.parametrize("g, sub", [(1, 2), (2, 2), (2, 5), (3, 3)])
def test_schema_genus_and_simplicity(g, sub):
    s = schema_surface(g, sub)
    assert s.genus == g and s.is_closed and _simple_graph(s)


def test_schema_genus_two_euler():
    assert schema_surface(2, 3).euler_characteristic() == -2


def test_grid_torus_5x7():
    assert grid_torus(5, 7).genus == 1


def test_grid_torus_too_small():
    with pytest.raises(TooSmall):
        grid_torus(2, 5)


def test_cylinder_is_an_annulus():
    c = grid_cylinder(4, 6, diagonals=True, seed=2)
    assert c.genus == 0 and c.boundary_count == 2 and c.euler_characteristic() == 0


def test_dumbbell_is_genus_two():
    s = dumbbell(4, 2)
    assert s.genus == 2 and s.is_closed and _simple_graph(s)


def test_remove_face_makes_one_hole():
    s = remove_face(grid_torus(4, 4, "random", seed=1), 5)
    assert s.genus == 1 and s.boundary_count == 1
