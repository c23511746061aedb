"""End-to-end pipeline: shortest non-contractible and non-separating cycles."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .classify import CycleClass, HomologyClassifier, classify_simple_cycle, is_simple
from .cover import (
    LoopSides,
    MetaWord,
    build_glued_space,
    canonical_word,
    classify_space,
    cut_along_loops,
    cyclic_reduce,
    is_valid_word,
    lift_to_source,
    meta_lift,
    search_meta_words,
)
from .cylinder import shortest_boundary_homotopic_cycle
from .errors import NoNontrivialCycle, UsesHeavyEdge
from .loops import system_of_loops
from .oracle import NONCONTRACTIBLE, NONSEPARATING, OBJECTIVES
from .surface import LEFT, SidedCycle, Surface, format_decimal
from .surgery import (
    COLLAPSE,
    HEAVY,
    blow_up_basepoint,
    close_boundaries,
    reroute_loops_through_blowup,
    split_loops,
)


@dataclass
class Candidate:
    length: int
    cls: CycleClass
    half_edges: list[int]          # on the input surface
    closed_half_edges: list[int]   # on the closed surface
    lifted: SidedCycle             # on the blown-up surface
    source_word: MetaWord | None   # word of the cylinder it came from, None for seeds


@dataclass
class ObjectiveResult:
    length: Fraction
    length_scaled: int
    vertices: list[int]
    edges: list[tuple[int, int]]
    cls: CycleClass
    meta_word: MetaWord
    half_edges: list[int]
    source_word: MetaWord | None
    witness_matches: bool          # lifted word equals the word of its cylinder

    def to_json(self) -> dict:
        return {
            "length": format_decimal(self.length),
            "length_scaled": self.length_scaled,
            "vertices": self.vertices,
            "edges": [list(e) for e in self.edges],
            "class": self.cls.value,
            "meta_word": [[t.loop + 1, t.label()] for t in self.meta_word],
        }


@dataclass
class SolveStats:
    genus: int = 0
    boundaries: int = 0
    loops: int = 0
    domain_euler: int = 0
    cut_euler: int = 0
    meta_words: int = 0
    prefixes: int = 0
    cylinders: int = 0
    other_spaces: int = 0
    non_manifold: int = 0
    candidates: int = 0
    roundtrip_failures: int = 0
    spine_crossing_failures: int = 0
    max_word_length: int = 0
    invalid_winner_words: int = 0
    time_ms: float = 0.0
    tied_classes: list[str] = field(default_factory=list)


@dataclass
class SolveResult:
    results: dict[str, ObjectiveResult | None]
    stats: SolveStats
    scale: int

    def to_json(self, include_time: bool = True) -> dict:
        s = self.stats
        out = {"genus": s.genus, "boundaries": s.boundaries}
        key = {NONCONTRACTIBLE: "noncontractible", NONSEPARATING: "nonseparating"}
        for obj, res in self.results.items():
            out[key[obj]] = None if res is None else res.to_json()
        stats = {"meta_words": s.meta_words, "cylinders": s.cylinders,
                 "candidates": s.candidates, "prefixes": s.prefixes}
        if s.tied_classes:
            stats["tied_classes"] = s.tied_classes
        if include_time:
            stats["time_ms"] = round(s.time_ms, 3)
        out["stats"] = stats
        return out


def _qualifies(cls: CycleClass, objective: str) -> bool:
    if objective == NONSEPARATING:
        return cls is CycleClass.NONSEPARATING
    return cls.noncontractible


def _canonical_key(surface: Surface, half_edges: list[int]) -> tuple:
    verts = [surface.origin[h] for h in half_edges]
    i = verts.index(min(verts))
    fwd = verts[i:] + verts[:i]
    rev = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, rev))


class _Pipeline:
    def __init__(self, surface: Surface, objectives):
        self.input = surface
        self.objectives = tuple(objectives)
        self.stats = SolveStats(boundaries=surface.boundary_count)
        if surface.boundary_count:
            self.closing = close_boundaries(surface)
            self.closed = self.closing.surface
        else:
            self.closing = None
            self.closed = surface
        self.stats.genus = self.closed.genus if self.closing is None else surface.genus
        if self.closed.genus == 0:
            raise NoNontrivialCycle("genus 0: every cycle is contractible")
        root = 0
        loops, tc = system_of_loops(self.closed, root)
        self.stats.loops = len(loops)
        if len(loops) != 2 * self.closed.genus:
            raise AssertionError(f"{len(loops)} loops but genus is {self.closed.genus}")
        self.split = split_loops(self.closed, loops, tc.tree)
        self.blow = blow_up_basepoint(self.split.surface, root)
        self.loops = reroute_loops_through_blowup(self.split.loops, self.blow)
        self.surface = self.blow.surface
        self.domain = cut_along_loops(self.surface, self.loops)
        self.stats.domain_euler = self.domain.surface.euler_characteristic()
        self.stats.cut_euler = self.domain.cut_euler
        self.sides = LoopSides(self.surface, self.loops)
        self.classifier = HomologyClassifier(self.closed, tc)
        self.heavy = self.blow.big_weight
        self.cap = self.closing.big_weight if self.closing else self.heavy
        # a planar input has no non-separating cycle, and a disk no essential one
        self.searched = tuple(o for o in self.objectives if surface.genus > 0 or (
            o == NONCONTRACTIBLE and surface.boundary_count > 1))
        self.best: dict[str, Candidate | None] = {o: None for o in OBJECTIVES}
        self.best_key: dict[str, tuple] = {}

    # --------------------------------------------------------- candidates
    def upper_bound(self) -> float:
        bounds = []
        for o in self.searched:
            c = self.best[o]
            # walks costing a heavy edge never yield a candidate
            bounds.append(self.cap if c is None else c.length)
        return max(bounds, default=0)

    def _project(self, h: int) -> int | None:
        """Blown-up half-edge to a closed-surface half-edge (None if collapsed)."""
        for st in (self.blow.stage, self.split.stage):
            m = st.edge_map[h >> 1]
            if m == COLLAPSE:
                return None
            if m == HEAVY:
                raise UsesHeavyEdge("walk uses a spoke")
            a = st.vertex_map[st.target.origin[h]]
            h = 2 * m if st.source.origin[2 * m] == a else 2 * m + 1
        return h

    def _zero_path(self, a: int, b: int) -> list[int]:
        """Zero-weight path between two blown-up vertices over one closed vertex."""
        if a == b:
            return []
        ring = self.blow.ring
        if a in ring or b in ring:
            return self.blow.ring_path(a, b)
        return self.split.zero_path(a, b)

    def _pieces(self, walk: SidedCycle):
        """Split a closed walk into pieces that are simple on the closed surface.

        Every piece is returned as a closed walk on the blown-up surface
        (closed up with zero-weight rung or ring paths) together with its
        projection.
        """
        hs, tags = list(walk.half_edges), list(walk.sides)
        proj = [self._project(h) for h in hs]
        starts = [i for i, p in enumerate(proj) if p is not None]
        if not starts:
            return []
        i0 = starts[0]
        hs, tags, proj = hs[i0:] + hs[:i0], tags[i0:] + tags[:i0], proj[i0:] + proj[:i0]
        c_origin = self.closed.origin
        b_origin = self.surface.origin
        stack: list[tuple[int, int, int | None]] = []
        pos = {c_origin[proj[0]]: 0}
        pieces = []
        for h, t, p in zip(hs, tags, proj):
            stack.append((h, t, p))
            if p is None:
                continue
            v = c_origin[p ^ 1]
            if v in pos:
                k = pos[v]
                piece = stack[k:]
                del stack[k:]
                for item in piece:
                    if item[2] is not None:
                        pos.pop(c_origin[item[2] ^ 1], None)
                pos[v] = k
                start_b = b_origin[piece[0][0]]
                end_b = b_origin[piece[-1][0] ^ 1]
                piece = piece + [(z, 0, None) for z in self._zero_path(end_b, start_b)]
                stack.extend((z, 0, None) for z in self._zero_path(start_b, end_b))
                pieces.append(piece)
            else:
                pos[v] = len(stack)
        if stack:
            pieces.append(stack)
        out = []
        for piece in pieces:
            closed = [p for _, _, p in piece if p is not None]
            if len(closed) < 3:
                continue
            out.append((SidedCycle(tuple(h for h, _, _ in piece),
                                   tuple(t for _, t, _ in piece)), closed))
        return out

    def consider(self, walk: SidedCycle, word: MetaWord | None) -> None:
        length = self.surface.walk_length(walk.half_edges)
        if length >= self.heavy:
            return
        try:
            pieces = self._pieces(walk)
        except UsesHeavyEdge:
            return
        for lifted, closed_hs in pieces:
            self.stats.candidates += 1
            plen = self.closed.walk_length(closed_hs)
            if plen >= self.upper_bound() and all(
                    self.best[o] is not None and plen >= self.best[o].length
                    for o in self.searched):
                continue
            if not is_simple(closed_hs, self.closed):
                continue
            cls = self.classifier.classify(closed_hs)
            if not cls.noncontractible:
                continue
            if self.closing is not None:
                try:
                    orig = self.closing.stage.project_walk(closed_hs)
                except UsesHeavyEdge:
                    continue
            else:
                orig = closed_hs
            cand = Candidate(plen, cls, orig, closed_hs, lifted, word)
            key = (plen, _canonical_key(self.input, orig))
            for o in self.searched:
                if _qualifies(cls, o) and (self.best[o] is None or key < self.best_key[o]):
                    self.best[o] = cand
                    self.best_key[o] = key

    # -------------------------------------------------------------- seeds
    def seed(self) -> None:
        """Every loop, closed around the blown-up disk instead of through the basepoint."""
        for lp in self.loops:
            hs = lp.half_edges
            body = hs[1:-1]
            a = self.surface.origin[body[0]]
            b = self.surface.origin[body[-1] ^ 1]
            ring = self.blow.ring_path(b, a)
            walk = SidedCycle(tuple(body + ring), tuple([LEFT] * len(body) + [0] * len(ring)))
            self.consider(walk, None)

    # -------------------------------------------------------------- words
    def solve_word(self, word: MetaWord) -> None:
        self.stats.meta_words += 1
        space = build_glued_space(self.domain, word)
        if not space.manifold:
            self.stats.non_manifold += 1
            return
        cls = classify_space(space)
        if not cls.cylinder:
            self.stats.other_spaces += 1
            return
        self.stats.cylinders += 1
        cyc = shortest_boundary_homotopic_cycle(space.arrays)
        if cyc.spine_crossings != 1:
            self.stats.spine_crossing_failures += 1
        if cyc.length >= self.upper_bound():
            return
        walk = lift_to_source(self.domain, space, cyc.half_edges)
        lifted = canonical_word(cyclic_reduce(meta_lift(walk, self.sides)))
        if lifted and lifted != canonical_word(cyclic_reduce(word)):
            self.stats.roundtrip_failures += 1
        self.consider(walk, word)

    def run(self) -> None:
        if not self.searched:
            return
        self.seed()
        st = search_meta_words(self.domain, self.upper_bound, self.solve_word)
        self.stats.prefixes = st.prefixes


def solve(surface: Surface, objectives=OBJECTIVES, verify: bool = True) -> SolveResult:
    """Shortest non-contractible and non-separating cycles of ``surface``."""
    t0 = time.perf_counter()
    pipe = _Pipeline(surface, objectives)
    pipe.run()
    results: dict[str, ObjectiveResult | None] = {}
    for o in objectives:
        cand = pipe.best[o]
        if cand is None:
            results[o] = None
            continue
        if verify:
            _verify(pipe, cand, o)
        word = canonical_word(cyclic_reduce(meta_lift(cand.lifted, pipe.sides)))
        pipe.stats.max_word_length = max(pipe.stats.max_word_length, len(word))
        witness = (cand.source_word is None
                   or canonical_word(cyclic_reduce(cand.source_word)) == word)
        o_origin = surface.origin
        verts = [o_origin[h] for h in cand.half_edges]
        edges = [(o_origin[h], o_origin[h ^ 1]) for h in cand.half_edges]
        results[o] = ObjectiveResult(Fraction(cand.length, surface.scale), cand.length,
                                     verts, edges, cand.cls, word, cand.half_edges,
                                     cand.source_word, witness)
    if len(results) == 2 and all(results.values()):
        nc, ns = results[NONCONTRACTIBLE], results[NONSEPARATING]
        if nc.length_scaled == ns.length_scaled and nc.cls != ns.cls:
            pipe.stats.tied_classes = [nc.cls.value, ns.cls.value]
    pipe.stats.time_ms = (time.perf_counter() - t0) * 1000
    return SolveResult(results, pipe.stats, surface.scale)


def _verify(pipe: _Pipeline, cand: Candidate, objective: str) -> None:
    s = pipe.input
    if s.walk_length(cand.half_edges) != cand.length:
        raise AssertionError("reported length differs from the re-measured cycle")
    if not is_simple(cand.half_edges, s):
        raise AssertionError("reported cycle is not simple")
    cls = classify_simple_cycle(pipe.closed, SidedCycle(tuple(cand.closed_half_edges)))
    if cls is not cand.cls or not _qualifies(cls, objective):
        raise AssertionError(f"classification mismatch: {cls} vs {cand.cls}")
    word = cyclic_reduce(meta_lift(cand.lifted, pipe.sides))
    if word and not is_valid_word(canonical_word(word), pipe.closed.genus):
        pipe.stats.invalid_winner_words += 1
