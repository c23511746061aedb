import json

import pytest

from surfcycles.classify import CycleClass
from surfcycles.errors import NoNontrivialCycle
from surfcycles.generators import (cube, dumbbell, grid_cylinder, grid_torus, remove_face,
                                   schema_surface, triangle)
from surfcycles.oracle import NONCONTRACTIBLE, NONSEPARATING, per_vertex_both
from surfcycles.solver import solve
from surfcycles.surface import parse_surf


def test_4x4_unit_torus():
    res = solve(grid_torus(4, 4)).results
    assert res[NONCONTRACTIBLE].length_scaled == 4 and res[NONSEPARATING].length_scaled == 4


def test_sphere_raises():
    with pytest.raises(NoNontrivialCycle):
        solve(cube())


@pytest.mark.parametrize("s", [schema_surface(2, 3), schema_surface(2, 4, "random", seed=2),
                               schema_surface(3, 3, "random", seed=5),
                               grid_torus(7, 9, "random", seed=1)])
def test_matches_per_vertex_oracle(s):
    res = solve(s).results
    ref = per_vertex_both(s)
    for o in (NONCONTRACTIBLE, NONSEPARATING):
        assert res[o].length_scaled == ref[o].length


def test_separating_optimum():
    res = solve(dumbbell(5, 2)).results
    assert res[NONCONTRACTIBLE].cls is CycleClass.SEPARATING_NONCONTRACTIBLE
    assert res[NONCONTRACTIBLE].length_scaled == 4
    assert res[NONSEPARATING].cls is CycleClass.NONSEPARATING
    assert res[NONSEPARATING].length_scaled == 5


def test_reported_cycle_is_a_closed_simple_walk():
    s = grid_torus(6, 5, "random", seed=8)
    r = solve(s).results[NONSEPARATING]
    assert len(set(r.vertices)) == len(r.vertices)
    assert [a for a, _ in r.edges] == r.vertices
    assert [b for _, b in r.edges] == r.vertices[1:] + r.vertices[:1]
    assert s.walk_length(r.half_edges) == r.length_scaled


def test_decimal_weights_descaled():
    s = grid_torus(3, 3)
    text = "v 9\n" + "\n".join("f " + " ".join(map(str, s.face_vertices(f)))
                               for f in s.real_faces())
    text += "\n" + "\n".join(f"w {u} {v} 0.5" for u, v in
                             (s.endpoints(e) for e in range(s.n_edges)))
    r = solve(parse_surf(text)).results[NONSEPARATING]
    assert r.to_json()["length"] == "1.5" and r.length_scaled == 3


def test_cylinder_core_is_found_through_closing():
    # the annulus's core circle is non-contractible but separating once capped
    res = solve(grid_cylinder(4, 5)).results
    assert res[NONCONTRACTIBLE].length_scaled == 5
    assert res[NONCONTRACTIBLE].cls is CycleClass.SEPARATING_NONCONTRACTIBLE
    assert res[NONSEPARATING] is None


def test_disk_has_no_essential_cycle():
    res = solve(triangle()).results
    assert res[NONCONTRACTIBLE] is None and res[NONSEPARATING] is None


def test_cheap_hole_boundary_is_non_contractible():
    s = grid_torus(6, 6)
    holed = remove_face(s, 14)
    r = solve(holed).results[NONCONTRACTIBLE]
    assert r.length_scaled == 4 and r.cls is CycleClass.SEPARATING_NONCONTRACTIBLE
    assert set(r.vertices) == set(s.face_vertices(14))


def test_holed_torus_keeps_nonseparating_answer():
    s = grid_torus(6, 6)
    holed = remove_face(s, 14)
    assert (solve(holed).results[NONSEPARATING].length_scaled
            == solve(s).results[NONSEPARATING].length_scaled)


def test_single_objective():
    r = solve(grid_torus(4, 4), (NONSEPARATING,))
    assert list(r.results) == [NONSEPARATING]


def test_json_is_deterministic():
    s = schema_surface(2, 3, "random", seed=4)
    a = json.dumps(solve(s).to_json(include_time=False))
    b = json.dumps(solve(s).to_json(include_time=False))
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"genus", "boundaries", "noncontractible", "nonseparating", "stats"}
    assert set(doc["nonseparating"]) == {"length", "length_scaled", "vertices", "edges",
                                         "class", "meta_word"}


def test_stats_invariants():
    r = solve(schema_surface(3, 3, "random", seed=7))
    s = r.stats
    assert s.loops == 2 * s.genus and s.domain_euler == 1 and s.cut_euler == 1
    assert s.non_manifold == 0 and s.spine_crossing_failures == 0 and s.roundtrip_failures == 0
    assert s.invalid_winner_words == 0
