"""Flip graphs of triangulations and the rational blowdown graph.

``build_gk`` builds the graph of all triangulations of the (k+1)-gon with one
edge per distinguished-diagonal flip.  ``build_gpq`` keeps only the fillings
for ``(p, q)`` and joins two of them when exactly one flip path connects them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Sequence

from .contfrac import hj_expand
from .errors import InvalidInput, InvalidSelector, InvariantViolation, NotAFilling
from .polygon import apply_flips, enumerate_triangulations, flip, initial_triangulation, phi
from .tuples import (betti, blowdown, check_limit, depth, fillings, height, interior_ones, is_filling,
                     minimal_resolution)

Tup = tuple[int, ...]


@dataclass(frozen=True)
class Vertex:
    id: int
    tuple: Tup
    height: int
    betti: int | None = None


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    flips: tuple[int, ...]
    weights: Tup | None = None


@dataclass
class GradedGraph:
    k: int
    vertices: list[Vertex]
    edges: list[Edge]
    p: int | None = None
    q: int | None = None
    index: dict[Tup, int] = field(init=False, repr=False)
    out: list[list[Edge]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.index = {v.tuple: v.id for v in self.vertices}
        self.out = [[] for _ in self.vertices]
        for e in self.edges:
            self.out[e.src].append(e)

    @property
    def root(self) -> int:
        return 0

    def vid(self, v: int | Sequence[int]) -> int:
        """Vertex id from an id or a tuple."""
        if isinstance(v, int):
            if not 0 <= v < len(self.vertices):
                raise InvalidInput(f"no vertex with id {v}")
            return v
        t = tuple(v)
        if t not in self.index:
            raise InvalidInput(f"{t} is not a vertex of this graph")
        return self.index[t]

    def edge(self, src: int | Sequence[int], dst: int | Sequence[int]) -> Edge | None:
        s, d = self.vid(src), self.vid(dst)
        for e in self.out[s]:
            if e.dst == d:
                return e
        return None


@dataclass(frozen=True)
class RecipeStep:
    src: Tup
    dst: Tup
    flips: tuple[int, ...]
    weights: Tup


@dataclass(frozen=True)
class DepthRecipe:
    stops: tuple[Tup, ...]
    steps: tuple[RecipeStep, ...]


@lru_cache(maxsize=None)
def _gk_cached(k: int) -> GradedGraph:
    if k <= 2:
        u = minimal_resolution(k)
        return GradedGraph(k, [Vertex(0, u, 0)], [])
    tris = {phi(t): t for t in enumerate_triangulations(k)}
    order = sorted(tris)
    ids = {n: x for x, n in enumerate(order)}
    vertices = [Vertex(ids[n], n, height(n)) for n in order]
    edges = []
    for n in order:
        tri = tris[n]
        for i in range(1, k - 1):
            if tri.has_distinguished(i):
                new, _ = flip(tri, i)
                edges.append(Edge(ids[n], ids[phi(new)], (i,)))
    return GradedGraph(k, vertices, edges)


def build_gk(k: int, limit: int | None = None) -> GradedGraph:
    """Graph of all triangulations of the (k+1)-gon under distinguished flips."""
    if k < 1:
        raise InvalidInput(f"need k >= 1, got {k}")
    check_limit(k, limit)
    return _gk_cached(k)


def _reach(g: GradedGraph, u: int) -> tuple[dict[int, int], dict[int, Edge]]:
    """Path counts from ``u`` and, per vertex, the last edge of some path."""
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for e in g.out[x]:
            if e.dst not in seen:
                seen.add(e.dst)
                stack.append(e.dst)
    ways = {u: 1}
    last: dict[int, Edge] = {}
    # every edge raises the height, so height order is topological
    for x in sorted(seen, key=lambda y: g.vertices[y].height):
        w = ways.get(x, 0)
        if not w:
            continue
        for e in g.out[x]:
            ways[e.dst] = ways.get(e.dst, 0) + w
            last[e.dst] = e
    return ways, last


def count_paths(g: GradedGraph, u, v) -> int:
    ways, _ = _reach(g, g.vid(u))
    return ways.get(g.vid(v), 0)


def edge_weights(flips: Sequence[int]) -> Tup:
    """Plumbing weights attached to a contiguous run of flips."""
    flips = list(flips)
    if not flips:
        raise InvalidInput("empty flip sequence")
    w = [4]
    for x, y in zip(flips, flips[1:]):
        if x == y:
            raise InvalidInput(f"repeated consecutive flip index {x}")
        if x < y:
            w = [2] + w
            w[-1] += 1
        else:
            w = w + [2]
            w[0] += 1
    return tuple(w)


def _check_pq(p: int, q: int) -> None:
    if not (isinstance(p, int) and isinstance(q, int)) or not p > q >= 1:
        raise InvalidInput(f"need p > q >= 1, got ({p},{q})")
    if gcd(p, q) != 1:
        raise InvalidInput(f"{p} and {q} are not coprime")


def build_gpq(p: int, q: int, limit: int | None = None) -> GradedGraph:
    """Rational blowdown graph of the fillings for ``(p, q)``."""
    _check_pq(p, q)
    b = hj_expand(p, p - q)
    k = len(b)
    check_limit(k, limit)
    gk = build_gk(k, limit)
    fills = fillings(b, limit)
    vertices = [Vertex(x, n, height(n), betti(n, p, q)) for x, n in enumerate(fills)]
    ids = {n: x for x, n in enumerate(fills)}
    edges = []
    for n in fills:
        src = gk.index[n]
        ways, last = _reach(gk, src)
        for m in fills:
            dst = gk.index[m]
            if dst == src or ways.get(dst) != 1:
                continue
            path = []
            x = dst
            while x != src:
                e = last[x]
                path.append(e.flips[0])
                x = e.src
            path.reverse()
            edges.append(Edge(ids[n], ids[m], tuple(path), edge_weights(path)))
    edges.sort(key=lambda e: (e.src, e.dst))
    return GradedGraph(k, vertices, edges, p, q)


def graph_distance(g: GradedGraph, u, v) -> int | None:
    """Length of a shortest directed path, or None when unreachable."""
    s, t = g.vid(u), g.vid(v)
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            return dist[x]
        for e in g.out[x]:
            if e.dst not in dist:
                dist[e.dst] = dist[x] + 1
                queue.append(e.dst)
    return None


SELECTORS = ("leftmost", "rightmost", "middle", "only")


def _select(sel, ones: list[int]) -> int:
    """Resolve a selector to a 1-based index into ``ones``."""
    c = len(ones)
    if isinstance(sel, str) and sel.lstrip("-").isdigit():
        sel = int(sel)
    if isinstance(sel, int):
        if not 1 <= sel <= c:
            raise InvalidSelector(f"selector {sel} out of range 1..{c}")
        return sel
    if sel == "leftmost":
        return 1
    if sel == "rightmost":
        return c
    if sel == "middle":
        if c % 2 == 0:
            raise InvalidSelector(f"no middle among {c} interior 1s")
        return (c + 1) // 2
    if sel == "only":
        if c != 1:
            raise InvalidSelector(f"'only' needs exactly one interior 1, found {c}")
        return 1
    raise InvalidSelector(f"unknown selector {sel!r}")


def depth_recipe(p: int, q: int, n: Sequence[int], strategy: Sequence | None = None) -> DepthRecipe:
    """Reach ``n`` from the minimal resolution in at most depth(n) blowdowns.

    Each phase blows down the selected interior 1 repeatedly until the depth
    drops; its blowdowns translate into one run of flips from the root side.
    """
    _check_pq(p, q)
    n = tuple(n)
    b = hj_expand(p, p - q)
    if not is_filling(n, b):
        raise NotAFilling(f"{n} is not a filling for ({p},{q})")
    d = depth(n)
    if strategy is None:
        strategy = ["leftmost"] * d
    strategy = list(strategy)
    if len(strategy) < d:
        raise InvalidSelector(f"need {d} selectors, got {len(strategy)}")
    if d == 0:
        return DepthRecipe((n,), ())
    k = len(n)
    cur = n
    labels = list(range(1, k + 1))
    phases = []
    for sel in strategy[:d]:
        ones = interior_ones(cur)
        v = _select(sel, ones)
        target = len(ones) - 1
        run = []
        while depth(cur) > target:
            pos = interior_ones(cur)[v - 1]
            run.append(labels[pos - 1] - 1)
            del labels[pos - 1]
            cur = blowdown(cur, pos)
        phases.append(run)
    if depth(cur) != 0 or cur != minimal_resolution(len(cur)):
        raise InvariantViolation(f"blowdowns of {n} ended at {cur}")
    tri = initial_triangulation(k)
    stops = [phi(tri)]
    steps = []
    for run in phases:
        tri, _ = apply_flips(tri, run)
        stop = phi(tri)
        if not is_filling(stop, b):
            raise InvariantViolation(f"intermediate stop {stop} is not a filling")
        steps.append(RecipeStep(stops[-1], stop, tuple(run), edge_weights(run)))
        stops.append(stop)
    if stops[-1] != n:
        raise InvariantViolation(f"recipe for {n} ended at {stops[-1]}")
    return DepthRecipe(tuple(stops), tuple(steps))
