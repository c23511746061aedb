import pytest

from surfcycles.errors import DegreeTooSmall, UsesHeavyEdge
from surfcycles.generators import (grid_cylinder, grid_torus, remove_face, schema_surface,
                                   triangle)
from surfcycles.surgery import HEAVY, blow_up_basepoint, close_boundaries, project_chain

SURFACES = [grid_torus(3, 3), grid_torus(5, 7, "random", seed=3),
            grid_torus(12, 9, "random", seed=5), schema_surface(2, 2), schema_surface(3, 3),
            schema_surface(2, 6, "random", seed=1)]


@pytest.mark.parametrize("s", SURFACES)
def test_split_keeps_genus_and_loop_lengths(prepare, s):
    p = prepare(s)
    t = p.split.surface
    assert t.is_closed and t.genus == s.genus
    assert [lp.length for lp in p.split.loops] == [lp.length for lp in p.loops]


@pytest.mark.parametrize("s", SURFACES)
def test_split_loops_meet_only_at_root(prepare, s):
    p = prepare(s)
    t = p.split.surface
    seen = set()
    for lp in p.split.loops:
        inner = [t.origin[h] for h in lp.half_edges][1:]
        assert not seen & set(inner)
        seen |= set(inner)


@pytest.mark.parametrize("s", SURFACES)
def test_split_loops_project_back(prepare, s):
    p = prepare(s)
    for new, old in zip(p.split.loops, p.loops):
        assert p.split.stage.project_walk(new.half_edges) == old.half_edges


@pytest.mark.parametrize("s", SURFACES)
def test_blow_up_keeps_genus_and_adds_two_spokes(prepare, s):
    p = prepare(s)
    b = p.blow.surface
    assert b.genus == s.genus and b.is_closed
    for new, old in zip(p.blown_loops, p.split.loops):
        assert new.length - 2 * p.blow.big_weight == old.length


def test_blow_up_dominating_weight(prepare):
    p = prepare(grid_torus(4, 4, "random", seed=2))
    assert p.blow.big_weight > p.split.surface.total_weight()


def test_heavy_projection_raises(prepare):
    p = prepare(grid_torus(4, 4))
    spoke = 2 * p.blow.spokes[0]
    assert p.blow.stage.edge_map[spoke >> 1] == HEAVY
    with pytest.raises(UsesHeavyEdge):
        project_chain([spoke], [p.split.stage, p.blow.stage])


def test_ring_path_has_zero_weight(prepare):
    p = prepare(schema_surface(2, 3))
    ring = p.blow.ring
    path = p.blow.ring_path(ring[0], ring[-1])
    assert len(path) == len(ring) - 1 and p.blow.surface.walk_length(path) == 0


def test_blow_up_needs_degree_three():
    with pytest.raises(DegreeTooSmall):
        blow_up_basepoint(triangle(), 0)


@pytest.mark.parametrize("s, genus", [(remove_face(grid_torus(4, 4), 0), 2),
                                      (grid_cylinder(3, 8), 2)])
def test_close_boundaries_adds_one_handle_per_hole(s, genus):
    c = close_boundaries(s)
    assert c.surface.is_closed and c.surface.genus == genus
    assert c.big_weight > s.total_weight()
