"""Triangulations of a convex polygon with a distinguished vertex.

Vertices are labelled ``0..k`` counterclockwise; ``0`` is the distinguished
vertex.  The diagonal ``d_i`` is ``{0, i+1}`` for ``1 <= i <= k-2``.  The map
``phi`` sends a triangulation to the number of triangles at each of the
vertices ``1..k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .contfrac import cf_eval
from .errors import InvalidInput, MissingDiagonal, NotAnEar, NotInZk

Pair = tuple[int, int]


def _crosses(e: Pair, f: Pair) -> bool:
    a, b = e
    c, d = f
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class FlipQuad:
    """Quadrilateral ``(0, a, t, b)`` cut by the flipped diagonal ``{0, t}``."""

    a: int
    t: int
    b: int

    def __iter__(self):
        return iter((self.a, self.t, self.b))


@dataclass(frozen=True)
class Triangulation:
    k: int
    diagonals: tuple[Pair, ...]

    @classmethod
    def from_diagonals(cls, k: int, diagonals: Iterable[Sequence[int]]) -> "Triangulation":
        """Build and validate a triangulation of the (k+1)-gon."""
        if k < 2:
            raise InvalidInput(f"need k >= 2, got {k}")
        diags = set()
        for d in diagonals:
            a, b = sorted(int(x) for x in d)
            if a < 0 or b > k or b - a < 2 or (a == 0 and b == k):
                raise InvalidInput(f"{(a, b)} is not a diagonal of the {k + 1}-gon")
            diags.add((a, b))
        if len(diags) != k - 2:
            raise InvalidInput(f"need {k - 2} diagonals, got {len(diags)}")
        ds = sorted(diags)
        for x, e in enumerate(ds):
            for f in ds[x + 1:]:
                if _crosses(e, f):
                    raise InvalidInput(f"diagonals {e} and {f} cross")
        return cls(k, tuple(ds))

    @cached_property
    def _adjacency(self) -> list[set[int]]:
        k = self.k
        adj = [set() for _ in range(k + 1)]
        for v in range(k + 1):
            w = (v + 1) % (k + 1)
            adj[v].add(w)
            adj[w].add(v)
        for a, b in self.diagonals:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        # in a maximal outerplanar graph every 3-cycle bounds a face
        adj = self._adjacency
        out = []
        for a in range(self.k + 1):
            for b in sorted(x for x in adj[a] if x > a):
                for c in sorted(x for x in adj[b] if x > b):
                    if c in adj[a]:
                        out.append((a, b, c))
        return tuple(out)

    def star_neighbors(self) -> list[int]:
        """Neighbours of the distinguished vertex in increasing order."""
        return sorted(self._adjacency[0])

    def has_distinguished(self, i: int) -> bool:
        return (0, i + 1) in self.diagonals and 1 <= i <= self.k - 2


def initial_triangulation(k: int) -> Triangulation:
    if k < 2:
        raise InvalidInput(f"need k >= 2, got {k}")
    return Triangulation(k, tuple((0, i + 1) for i in range(1, k - 1)))


def phi(tri: Triangulation) -> tuple[int, ...]:
    counts = [0] * (tri.k + 1)
    for t in tri.triangles:
        for v in t:
            counts[v] += 1
    return tuple(counts[1:])


def phi_inverse(n: Sequence[int]) -> Triangulation:
    """Rebuild the triangulation with triangle counts ``n`` by peeling ears."""
    n = tuple(n)
    k = len(n)
    if k < 2 or any(x < 1 for x in n) or cf_eval(n) != 0:
        raise NotInZk(f"{n} is not in Z_k")
    counts = {v: n[v - 1] for v in range(1, k + 1)}
    boundary = list(range(k + 1))
    diags = []
    while len(boundary) > 3:
        ears = [v for v in boundary if v != 0 and counts[v] == 1]
        if not ears:
            raise NotInZk(f"{n} is not in Z_k")
        v = min(ears)
        pos = boundary.index(v)
        prev, nxt = boundary[pos - 1], boundary[(pos + 1) % len(boundary)]
        diags.append((min(prev, nxt), max(prev, nxt)))
        for w in (prev, nxt):
            if w:
                counts[w] -= 1
        del boundary[pos]
    if any(counts[v] != 1 for v in boundary if v):
        raise NotInZk(f"{n} is not in Z_k")
    tri = Triangulation.from_diagonals(k, diags)
    if phi(tri) != n:
        raise NotInZk(f"{n} is not in Z_k")
    return tri


def flip(tri: Triangulation, i: int) -> tuple[Triangulation, FlipQuad]:
    """Flip the distinguished diagonal ``d_i``."""
    if not tri.has_distinguished(i):
        raise MissingDiagonal(f"d_{i} is not a diagonal of this triangulation")
    t = i + 1
    nbrs = tri.star_neighbors()
    pos = nbrs.index(t)
    a, b = nbrs[pos - 1], nbrs[pos + 1]
    diags = sorted(set(tri.diagonals) - {(0, t)} | {(a, b)})
    return Triangulation(tri.k, tuple(diags)), FlipQuad(a, t, b)


def apply_flips(tri: Triangulation, seq: Iterable[int]) -> tuple[Triangulation, list[FlipQuad]]:
    quads = []
    for i in seq:
        tri, quad = flip(tri, i)
        quads.append(quad)
    return tri, quads


def is_contiguous(tri: Triangulation, seq: Sequence[int]) -> bool:
    """True iff each consecutive pair of flipped diagonals bounds a triangle
    of the triangulation current when the first of the two is flipped."""
    ok = True
    for x, i in enumerate(seq):
        if x + 1 < len(seq):
            j = seq[x + 1]
            if not (tri.has_distinguished(i) and tri.has_distinguished(j)):
                ok = False
            else:
                nbrs = tri.star_neighbors()
                if abs(nbrs.index(i + 1) - nbrs.index(j + 1)) != 1:
                    ok = False
        # keep flipping so an illegal sequence still raises
        tri, _ = flip(tri, i)
    return ok


def peel_ear(tri: Triangulation, v: int) -> Triangulation:
    """Remove the ear triangle at ``v`` and relabel the remaining vertices."""
    k = tri.k
    if not 1 <= v <= k or k < 3:
        raise NotAnEar(f"cannot peel vertex {v} of a {k + 1}-gon")
    if sum(1 for t in tri.triangles if v in t) != 1:
        raise NotAnEar(f"vertex {v} lies in more than one triangle")
    prev, nxt = v - 1, (v + 1) % (k + 1)
    side = (min(prev, nxt), max(prev, nxt))

    def relabel(x: int) -> int:
        return x - 1 if x > v else x

    diags = [
        tuple(sorted((relabel(a), relabel(b))))
        for a, b in tri.diagonals
        if (a, b) != side
    ]
    return Triangulation(k - 1, tuple(sorted(diags)))


def enumerate_triangulations(k: int) -> Iterator[Triangulation]:
    """All triangulations of the (k+1)-gon."""
    if k < 2:
        raise InvalidInput(f"need k >= 2, got {k}")

    def rec(vs: list[int]) -> Iterator[list[Pair]]:
        if len(vs) < 3:
            yield []
            return
        first, last = vs[0], vs[-1]
        for j in range(1, len(vs) - 1):
            apex = vs[j]
            own = []
            if j > 1:
                own.append((first, apex))
            if j < len(vs) - 2:
                own.append((apex, last))
            for left in rec(vs[: j + 1]):
                for right in rec(vs[j:]):
                    yield own + left + right

    for diags in rec(list(range(k + 1))):
        yield Triangulation(k, tuple(sorted(diags)))
