import pytest

from surfcycles.classify import CycleClass
from surfcycles.errors import BoundarySurface, TooLarge
from surfcycles.generators import cube, dumbbell, grid_torus, remove_face, schema_surface
from surfcycles.oracle import (NONCONTRACTIBLE, NONSEPARATING, exhaustive_both,
                               exhaustive_shortest_nontrivial, per_vertex_both,
                               per_vertex_loop_oracle)
from surfcycles.surface import build_from_faces


def test_exhaustive_3x3():
    res = exhaustive_both(grid_torus(3, 3))
    assert res[NONSEPARATING].length == 3 and res[NONCONTRACTIBLE].length == 3


def test_sphere_has_no_answer():
    assert exhaustive_shortest_nontrivial(cube(), NONSEPARATING) is None
    assert per_vertex_loop_oracle(cube(), NONCONTRACTIBLE) is None


def test_heavy_row_is_avoided():
    s = grid_torus(3, 3)
    faces = [s.face_vertices(f) for f in s.real_faces()]
    row = {frozenset((0, 1)), frozenset((1, 2)), frozenset((2, 0))}
    w = {(u, f[(i + 1) % 4]): 9 if frozenset((u, f[(i + 1) % 4])) in row else 1
         for f in faces for i, u in enumerate(f)}
    heavy = build_from_faces(faces, w, 9)
    res = exhaustive_shortest_nontrivial(heavy, NONSEPARATING)
    used = {frozenset((heavy.origin[h], heavy.origin[h ^ 1])) for h in res.half_edges}
    assert res.length == 3
    assert not used & row


def test_per_vertex_5x7():
    assert per_vertex_loop_oracle(grid_torus(5, 7), NONSEPARATING).length == 5


def test_per_vertex_finds_separating_waist():
    res = per_vertex_both(dumbbell(5, 2))
    assert res[NONCONTRACTIBLE].cls is CycleClass.SEPARATING_NONCONTRACTIBLE
    assert res[NONCONTRACTIBLE].length == 4 and res[NONSEPARATING].length == 5


@pytest.mark.parametrize("s", [grid_torus(3, 4, "random", seed=s) for s in range(6)]
                         + [schema_surface(2, 2, "random", seed=s) for s in range(3)])
def test_oracles_agree(s):
    a, b = exhaustive_both(s), per_vertex_both(s)
    for o in (NONCONTRACTIBLE, NONSEPARATING):
        assert a[o].length == b[o].length


def test_guard_rails():
    with pytest.raises(TooLarge):
        exhaustive_both(grid_torus(10, 10))
    with pytest.raises(BoundarySurface):
        per_vertex_both(remove_face(grid_torus(4, 4), 0))
