from collections import Counter

import pytest

from surfcycles.cover import (CrossingToken, LoopSides, build_glued_space, canonical_word,
                              classify_space, count_crossings, cut_along_loops, cyclic_reduce,
                              enumerate_meta_words, inverse_word, is_valid_word, meta_lift)
from surfcycles.generators import grid_torus, schema_surface
from surfcycles.surface import SidedCycle

A, a = CrossingToken(0, 0), CrossingToken(0, 1)
B, b = CrossingToken(1, 0), CrossingToken(1, 1)


def test_token_inverse_and_reduction():
    assert A.inverse() == a and a.inverse() == A
    assert cyclic_reduce((A, B, b, a, B)) == (B,)
    assert inverse_word((A, B)) == (b, a)


def test_canonical_word_is_rotation_invariant():
    w = (A, B, a)
    assert canonical_word(w) == canonical_word((B, a, A)) == canonical_word((a, A, B))


def test_word_validity_bounds():
    assert is_valid_word((A, B), 1)
    assert not is_valid_word((A, A, A), 1)      # three uses of one loop
    assert not is_valid_word((A, a), 1)         # backtracking
    assert not is_valid_word((A, B) * 3, 1)     # longer than 4g


@pytest.mark.parametrize("g, max_len, count", [(1, None, 17), (3, 4, 2047)])
def test_word_counts(g, max_len, count):
    assert len(enumerate_meta_words(g, max_len)) == count


def _domain(prepare, s):
    p = prepare(s)
    return p, cut_along_loops(p.blow.surface, p.blown_loops)


@pytest.mark.parametrize("s, arcs", [(grid_torus(3, 3), 4), (schema_surface(2, 2), 8)])
def test_domain_is_a_disk(prepare, s, arcs):
    _, d = _domain(prepare, s)
    assert d.surface.euler_characteristic() == 1 and d.cut_euler == 1
    assert len(d.arcs) == arcs and d.x_copies == arcs


@pytest.mark.parametrize("s, max_len", [(grid_torus(3, 3), None),
                                        (grid_torus(5, 5, "random", seed=1), None),
                                        (schema_surface(2, 2), 3)])
def test_every_word_glues_to_a_manifold_cylinder(prepare, s, max_len):
    _, d = _domain(prepare, s)
    kinds = Counter()
    for w in enumerate_meta_words(s.genus, max_len):
        space = build_glued_space(d, w)
        assert space.manifold
        kinds[classify_space(space).cylinder] += 1
    assert kinds[True] > 0


def test_single_token_word_is_an_annulus(prepare):
    _, d = _domain(prepare, grid_torus(4, 4))
    space = build_glued_space(d, (A,))
    assert space.is_cylinder and space.euler == 0 and len(space.boundary_faces) == 2


def test_pushed_off_torus_loop_crosses_its_partner_once(prepare):
    p = prepare(grid_torus(4, 4))
    surf = p.blow.surface
    sides = LoopSides(surf, p.blown_loops)
    for lp in p.blown_loops:
        body = lp.half_edges[1:-1]
        ring = p.blow.ring_path(surf.origin[body[-1] ^ 1], surf.origin[body[0]])
        cyc = SidedCycle(tuple(body + ring), tuple([1] * len(body) + [0] * len(ring)))
        other = 1 - lp.index
        assert [t.loop for t in cyclic_reduce(meta_lift(cyc, sides))] == [other]
        assert count_crossings(cyc, other, sides) == 1
        assert count_crossings(cyc, lp.index, sides) == 0
