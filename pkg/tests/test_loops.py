import pytest

from surfcycles.generators import grid_torus, schema_surface
from surfcycles.loops import shortest_path_tree, system_of_loops, tree_cotree

SURFACES = [grid_torus(3, 3), grid_torus(6, 4, "random", seed=2), schema_surface(2, 3),
            schema_surface(3, 2, "random", seed=5)]


@pytest.mark.parametrize("s", SURFACES)
def test_leftover_count_is_twice_genus(s):
    tc = tree_cotree(s, shortest_path_tree(s, 0))
    assert len(tc.leftover) == 2 * s.genus
    assert len(tc.tree_edges) == s.n_vertices - 1
    assert len(tc.cotree_edges) == s.n_faces - 1


@pytest.mark.parametrize("s", SURFACES)
def test_loops_are_closed_walks_at_the_root(s):
    loops, _ = system_of_loops(s, 0)
    for lp in loops:
        hs = lp.half_edges
        assert s.origin[hs[0]] == 0 and s.head(hs[-1]) == 0
        for a, b in zip(hs, hs[1:]):
            assert s.head(a) == s.origin[b]
        assert lp.length == s.walk_length(hs)


def test_tree_distances_are_shortest():
    s = grid_torus(7, 7, "random", seed=4)
    tree = shortest_path_tree(s, 0)
    for v in range(s.n_vertices):
        assert s.walk_length(tree.path_from_root(v)) == tree.dist[v]
