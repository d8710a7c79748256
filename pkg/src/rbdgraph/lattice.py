"""Integer intersection lattices: plumbings, short vectors, sphere chains."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import floor
from typing import Iterator, Sequence

from .errors import InvalidInput, NotNegativeDefinite

Vec = tuple[int, ...]


@dataclass(frozen=True)
class IntForm:
    m: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntForm":
        m = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(m)
        if any(len(r) != n for r in m):
            raise InvalidInput("matrix is not square")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
            raise InvalidInput("matrix is not symmetric")
        return cls(m)

    @property
    def dim(self) -> int:
        return len(self.m)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(u[i] * self.m[i][j] * v[j] for i in range(self.dim) for j in range(self.dim))

    def square(self, v: Sequence[int]) -> int:
        return self.pair(v, v)

    def gram(self, vs: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.pair(u, v) for v in vs) for u in vs)


def plumbing_form(weights: Sequence[int]) -> IntForm:
    """Intersection form of the linear plumbing with the given (negated) weights."""
    w = tuple(weights)
    if not w or any(x < 2 for x in w):
        raise InvalidInput(f"weights must be >= 2: {w}")
    n = len(w)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = -w[i]
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = 1
    return IntForm.from_rows(rows)


def is_even(form: IntForm) -> bool:
    return all(form.m[i][i] % 2 == 0 for i in range(form.dim))


def adjunction_c1(weights: Sequence[int]) -> Vec:
    return tuple(2 - w for w in weights)


def _cholesky(form: IntForm) -> list[list[Fraction]]:
    """Completed-square coefficients of ``-F``; raises unless positive definite.

    Afterwards ``-v.F.v = sum_i Q[i][i] * (v_i + sum_{j>i} Q[i][j] v_j)^2``.
    """
    n = form.dim
    q = [[Fraction(-form.m[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise NotNegativeDefinite("form is not negative definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for r in range(i + 1, n):
            for s in range(r, n):
                q[r][s] -= q[r][i] * q[i][s]
    return q


def is_negative_definite(form: IntForm) -> bool:
    try:
        _cholesky(form)
    except NotNegativeDefinite:
        return False
    return True


def _solutions(form: IntForm, norm: int) -> Iterator[Vec]:
    """All ``v`` with ``-v.F.v == norm``, by depth-first coordinate bounds."""
    q = _cholesky(form)
    n = form.dim
    x = [0] * n

    def rec(i: int, budget: Fraction) -> Iterator[Vec]:
        if i < 0:
            if budget == 0:
                yield tuple(x)
            return
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        base = floor(center)
        # the quadratic term is convex in x_i: walk down, then up, from the center
        for step in (-1, 1):
            xi = base if step < 0 else base + 1
            while True:
                cost = q[i][i] * (xi - center) ** 2
                if cost > budget:
                    break
                x[i] = xi
                yield from rec(i - 1, budget - cost)
                xi += step
        x[i] = 0

    yield from rec(n - 1, Fraction(norm))


def _first_nonzero_positive(v: Sequence[int]) -> bool:
    for c in v:
        if c:
            return c > 0
    return True


def _neg(v: Sequence[int]) -> Vec:
    return tuple(-c for c in v)


def vectors_of_square(form: IntForm, c: int) -> list[Vec]:
    """Classes of square ``c``, one per sign pair, sorted."""
    if c >= 0:
        raise InvalidInput(f"square must be negative, got {c}")
    return sorted(v for v in _solutions(form, -c) if _first_nonzero_positive(v))


def chain_embeddings(
    form: IntForm,
    squares: Sequence[int],
    c1: Sequence[int] | None = None,
    normalize: bool = True,
) -> list[tuple[Vec, ...]]:
    """Chains ``v_1..v_m`` of the given squares meeting consecutively once.

    With ``c1``, each class must also satisfy ``<c1, v> = 2 + v.v``.  With
    ``normalize`` the first class is taken with a positive leading
    coefficient whenever the constraints allow both of its signs; the later
    signs are then forced.  Without it every solution is returned.
    """
    squares = tuple(squares)
    if c1 is not None and len(c1) != form.dim:
        raise InvalidInput("c1 has the wrong length")
    _cholesky(form)
    if not squares:
        return [()]
    cands = []
    for s in squares:
        vs = []
        for v in vectors_of_square(form, s):
            for w in (v, _neg(v)):
                if c1 is None or sum(a * b for a, b in zip(c1, w)) == 2 + s:
                    vs.append(w)
        cands.append(sorted(set(vs)))

    found = set()

    def rec(chain: list[Vec]) -> None:
        x = len(chain)
        if x == len(squares):
            found.add(tuple(chain))
            return
        for v in cands[x]:
            if x and form.pair(chain[-1], v) != 1:
                continue
            if any(form.pair(u, v) for u in chain[:-1]):
                continue
            chain.append(v)
            rec(chain)
            chain.pop()

    if normalize:
        first = set(cands[0])
        cands[0] = [v for v in cands[0] if _first_nonzero_positive(v) or _neg(v) not in first]
    rec([])
    return sorted(found)


def fixture_names() -> list[str]:
    files = resources.files(__package__) / "fixtures"
    return sorted(f.name[:-4] for f in files.iterdir() if f.name.endswith(".txt"))


def parse_matrix(text: str) -> IntForm:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            try:
                rows.append([int(x) for x in line.split()])
            except ValueError:
                raise InvalidInput(f"bad matrix row {line!r}") from None
    if not rows:
        raise InvalidInput("empty matrix")
    return IntForm.from_rows(rows)


def load_fixture(name: str) -> IntForm:
    path = resources.files(__package__) / "fixtures" / f"{name}.txt"
    if not path.is_file():
        raise InvalidInput(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
    return parse_matrix(path.read_text())
