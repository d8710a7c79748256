"""Zero continued fractions: blowups, blowdowns, grading and enumeration."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .contfrac import cf_eval, hj_expand
from .errors import InvalidInput, InvalidSite, LimitExceeded, NotAFilling, NotBlowdownSite, NotInZk

DEFAULT_MAX_K = 12


def max_k() -> int:
    """Enumeration limit, overridable through ``RBD_MAX_K``."""
    raw = os.environ.get("RBD_MAX_K")
    if raw is None:
        return DEFAULT_MAX_K
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"RBD_MAX_K must be an integer, got {raw!r}") from None


def check_limit(k: int, limit: int | None = None) -> None:
    limit = max_k() if limit is None else limit
    if k > limit:
        raise LimitExceeded(f"k={k} exceeds the enumeration limit {limit} (set RBD_MAX_K)")


@dataclass(frozen=True)
class BlowSite:
    kind: str  # "initial", "interior" or "exterior"
    j: int = 0

    @classmethod
    def initial(cls) -> "BlowSite":
        return cls("initial")

    @classmethod
    def interior(cls, j: int) -> "BlowSite":
        return cls("interior", j)

    @classmethod
    def exterior(cls) -> "BlowSite":
        return cls("exterior")


def minimal_resolution(k: int) -> tuple[int, ...]:
    """``u_k = (1, 2, ..., 2, 1)``; ``u_1 = (0)``."""
    if k < 1:
        raise InvalidInput(f"need k >= 1, got {k}")
    if k == 1:
        return (0,)
    return (1,) + (2,) * (k - 2) + (1,)


def is_zk(n: Sequence[int]) -> bool:
    n = tuple(n)
    if n == (0,):
        return True
    if len(n) < 2 or any(x < 1 for x in n):
        return False
    return cf_eval(n) == 0


def _require_zk(n: Sequence[int]) -> tuple[int, ...]:
    n = tuple(n)
    if not is_zk(n):
        raise NotInZk(f"{n} is not in Z_{len(n)}")
    return n


def blowup(t: Sequence[int], site: BlowSite) -> tuple[int, ...]:
    t = tuple(t)
    if site.kind == "initial":
        if t != (0,):
            raise InvalidSite("the initial blowup applies only to (0)")
        return (1, 1)
    if t == (0,) or not t:
        raise InvalidSite("(0) admits only the initial blowup")
    if site.kind == "exterior":
        return t[:-1] + (t[-1] + 1, 1)
    if site.kind == "interior":
        j = site.j
        if not 1 <= j <= len(t) - 1:
            raise InvalidSite(f"interior site {j} out of range for length {len(t)}")
        return t[: j - 1] + (t[j - 1] + 1, 1, t[j] + 1) + t[j + 1:]
    raise InvalidSite(f"unknown blowup kind {site.kind!r}")


def blowdown(t: Sequence[int], i: int) -> tuple[int, ...]:
    """Undo a blowup at the 1-based position ``i``."""
    t = tuple(t)
    k = len(t)
    if not 1 <= i <= k or t[i - 1] != 1:
        raise NotBlowdownSite(f"position {i} of {t} is not a 1")
    if k == 2:
        if t == (1, 1):
            return (0,)
        raise NotBlowdownSite(f"{t} has no blowdown")
    if 1 < i < k:
        if t[i - 2] < 2 or t[i] < 2:
            raise NotBlowdownSite(f"neighbours of position {i} in {t} must be >= 2")
        return t[: i - 2] + (t[i - 2] - 1, t[i] - 1) + t[i + 1:]
    if i == k:
        if t[k - 2] < 2:
            raise NotBlowdownSite(f"neighbour of position {i} in {t} must be >= 2")
        return t[: k - 2] + (t[k - 2] - 1,)
    # leading 1: mirror image of the exterior case
    if t[1] < 2:
        raise NotBlowdownSite(f"neighbour of position 1 in {t} must be >= 2")
    return (t[1] - 1,) + t[2:]


def height(n: Sequence[int]) -> int:
    n = _require_zk(n)
    return sum(n) - 2 * (len(n) - 1)


def interior_ones(n: Sequence[int]) -> list[int]:
    """1-based positions of the interior entries equal to 1."""
    return [i + 1 for i in range(1, len(n) - 1) if n[i] == 1]


def depth(n: Sequence[int]) -> int:
    return len(interior_ones(n))


@lru_cache(maxsize=None)
def _zk(k: int) -> tuple[tuple[int, ...], ...]:
    from .polygon import enumerate_triangulations, phi

    if k == 1:
        return ((0,),)
    return tuple(sorted(phi(t) for t in enumerate_triangulations(k)))


def enumerate_zk(k: int, limit: int | None = None) -> list[tuple[int, ...]]:
    """All of Z_k in lexicographic order."""
    if k < 1:
        raise InvalidInput(f"need k >= 1, got {k}")
    check_limit(k, limit)
    return list(_zk(k))


def fillings(b: Sequence[int], limit: int | None = None) -> list[tuple[int, ...]]:
    """Elements of Z_k bounded entrywise by ``b``."""
    b = tuple(b)
    if not b or any(x < 2 for x in b):
        raise InvalidInput(f"entries must be >= 2: {b}")
    return [n for n in enumerate_zk(len(b), limit) if all(x <= y for x, y in zip(n, b))]


def is_filling(n: Sequence[int], b: Sequence[int]) -> bool:
    n, b = tuple(n), tuple(b)
    return len(n) == len(b) and is_zk(n) and all(x <= y for x, y in zip(n, b))


def betti(n: Sequence[int], p: int, q: int) -> int:
    """Second Betti number of the filling ``n`` of ``(p, q)``."""
    n = tuple(n)
    b = hj_expand(p, p - q)
    if not is_filling(n, b):
        raise NotAFilling(f"{n} is not a filling for ({p},{q})")
    r = len(hj_expand(p, q))
    return r + 2 * (len(n) - 1) - sum(n)
