"""Dehn twist words on the k-holed disk and lantern substitutions.

Curves are symbolic.  ``Gamma(r)`` encloses holes ``1..r``, ``Delta(s, t)``
encloses ``s..t`` and ``Beta(i, t, j)`` encloses ``1..i`` together with
``t+1..j``.  A word is a signed multiset of curves, stored as one signed
multiplicity per curve so that opposite twists cancel automatically.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .contfrac import hj_expand
from .errors import InvalidInput, InvalidPath, InvalidQuad, InvariantViolation, SubstitutionCurveMissing
from .polygon import FlipQuad, flip, initial_triangulation, phi, phi_inverse
from .tuples import betti, height, is_filling, is_zk, minimal_resolution

_RANK = {"g": 0, "a": 1, "d": 2, "b": 3}


@dataclass(frozen=True)
class Curve:
    family: str  # "g", "a", "d" or "b"
    params: tuple[int, ...]

    def holes(self) -> frozenset[int]:
        f, p = self.family, self.params
        if f == "g":
            return frozenset(range(1, p[0] + 1))
        if f == "a":
            return frozenset(p)
        if f == "d":
            return frozenset(range(p[0], p[1] + 1))
        i, t, j = p
        return frozenset(range(1, i + 1)) | frozenset(range(t + 1, j + 1))

    def sort_key(self) -> tuple:
        return (_RANK[self.family], self.params)

    def __str__(self) -> str:
        f, p = self.family, self.params
        if f in ("g", "a"):
            return f"{f}{p[0]}"
        return f"{f}({','.join(map(str, p))})"


def Gamma(r: int) -> Curve:
    return Curve("g", (r,))


def Delta(s: int, t: int) -> Curve:
    if not 1 <= s <= t:
        raise InvalidInput(f"bad delta curve ({s},{t})")
    if s == 1:
        return Gamma(t)
    if s == t:
        return Curve("a", (s,))
    return Curve("d", (s, t))


def Alpha(s: int) -> Curve:
    return Delta(s, s)


def Beta(i: int, t: int, j: int) -> Curve:
    if not 1 <= i < t < j:
        raise InvalidInput(f"bad beta curve ({i},{t},{j})")
    return Curve("b", (i, t, j))


class TwistWord:
    """Signed multiset of Dehn twists on the k-holed disk."""

    __slots__ = ("k", "_m")

    def __init__(self, k: int, mult: Mapping[Curve, int] | None = None):
        self.k = k
        self._m = {c: m for c, m in (mult or {}).items() if m}

    @classmethod
    def from_twists(cls, k: int, twists: Iterable[tuple[Curve, int]]) -> "TwistWord":
        m: Counter = Counter()
        for c, sign in twists:
            if sign not in (1, -1):
                raise InvalidInput(f"sign must be +1 or -1, got {sign}")
            m[c] += sign
        return cls(k, m)

    def multiplicity(self, c: Curve) -> int:
        return self._m.get(c, 0)

    def items(self) -> list[tuple[Curve, int]]:
        return sorted(self._m.items(), key=lambda cm: cm[0].sort_key())

    @property
    def n_positive(self) -> int:
        return sum(m for m in self._m.values() if m > 0)

    @property
    def n_negative(self) -> int:
        return -sum(m for m in self._m.values() if m < 0)

    def __len__(self) -> int:
        return self.n_positive + self.n_negative

    def __eq__(self, other) -> bool:
        return isinstance(other, TwistWord) and self.k == other.k and self._m == other._m

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self._m.items())))

    def __str__(self) -> str:
        out = []
        for c, m in self.items():
            sign = "+" if m > 0 else "-"
            out.extend([f"{sign}{c}"] * abs(m))
        return " ".join(out)

    def __repr__(self) -> str:
        return f"TwistWord(k={self.k}, {str(self)!r})"


def initial_word(p: int, q: int) -> TwistWord:
    """Positive word of the minimal resolution."""
    if not p > q >= 1:
        raise InvalidInput(f"need p > q >= 1, got ({p},{q})")
    b = hj_expand(p, p - q)
    k = len(b)
    u = minimal_resolution(k)
    m: Counter = Counter()
    for s in range(2, k + 1):
        m[Alpha(s)] += 1
    for i in range(1, k + 1):
        m[Gamma(i)] += b[i - 1] - u[i - 1]
    return TwistWord(k, m)


def lantern_curves(quad: FlipQuad) -> tuple[list[Curve], list[Curve]]:
    """The four boundary curves consumed and the three curves produced."""
    i, t, j = quad
    consumed = [Gamma(i), Delta(i + 1, t), Delta(t + 1, j), Gamma(j)]
    produced = [Beta(i, t, j), Gamma(t), Delta(i + 1, j)]
    return consumed, produced


def lantern_substitute(w: TwistWord, quad: FlipQuad, b: Sequence[int], new_tuple: Sequence[int]) -> TwistWord:
    """Apply the lantern relation attached to a flip with quadrilateral ``quad``."""
    i, t, j = quad
    k = w.k
    if not 1 <= i < t < j <= k or len(b) != k or len(new_tuple) != k:
        raise InvalidQuad(f"quad {tuple(quad)} does not fit a word on {k} holes")
    m = dict(w._m)
    consumed, produced = lantern_curves(quad)
    for c in consumed[1:3]:
        if m.get(c, 0) <= 0:
            raise SubstitutionCurveMissing(f"no positive twist along {c}")
    for c, r in ((consumed[0], i), (consumed[3], j)):
        # a cancelling pair +c -c may be inserted only when the new entry
        # exceeds the bound
        if m.get(c, 0) <= 0 and not new_tuple[r - 1] > b[r - 1]:
            raise SubstitutionCurveMissing(f"no positive twist along {c}")
    for c in consumed:
        m[c] = m.get(c, 0) - 1
    for c in produced:
        m[c] = m.get(c, 0) + 1
    return TwistWord(k, m)


def lex_first_path(n: Sequence[int]) -> list[int]:
    """Lexicographically smallest flip sequence from the fan to ``n``."""
    n = tuple(n)
    target = phi_inverse(n)
    wanted = {t for t in target.triangles if t[0] != 0}
    tri = initial_triangulation(len(n))
    path = []
    while tri != target:
        for i in range(1, tri.k - 1):
            if tri.has_distinguished(i):
                new, quad = flip(tri, i)
                if (quad.a, quad.t, quad.b) in wanted:
                    path.append(i)
                    tri = new
                    break
        else:
            raise InvariantViolation(f"no flip path found towards {n}")
    return path


def word_for(p: int, q: int, n: Sequence[int], path: Sequence[int] | None = None) -> TwistWord:
    """Evolve the initial word along a flip path ending at ``n``."""
    n = tuple(n)
    b = hj_expand(p, p - q)
    k = len(b)
    if len(n) != k or not is_zk(n):
        raise InvalidInput(f"{n} is not in Z_{k}")
    w = initial_word(p, q)
    if k < 3:
        if path:
            raise InvalidPath("no flips exist for k < 3")
        return w
    if path is None:
        path = lex_first_path(n)
    tri = initial_triangulation(k)
    for i in path:
        try:
            tri, quad = flip(tri, i)
        except InvalidInput as exc:
            raise InvalidPath(str(exc)) from None
        w = lantern_substitute(w, quad, b, phi(tri))
    if phi(tri) != n:
        raise InvalidPath(f"path {list(path)} ends at {phi(tri)}, not {n}")
    return w


def word_stats(w: TwistWord, p: int, q: int, n: Sequence[int]) -> dict[str, int | bool]:
    n = tuple(n)
    stats = {"positive": w.n_negative == 0, "length": len(w), "lanterns": height(n)}
    b = hj_expand(p, p - q)
    if stats["positive"] and is_filling(n, b) and len(w) != len(n) + betti(n, p, q):
        raise InvariantViolation(f"word length {len(w)} disagrees with k + betti")
    return stats
