"""Hirzebruch-Jung continued fractions.

A tuple ``(b1, ..., bk)`` stands for ``b1 - 1/(b2 - 1/(... - 1/bk))``.
All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .errors import InvalidInput


class _Inadmissible:
    """Marker returned by ``cf_eval`` when some tail is not positive."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INADMISSIBLE"


INADMISSIBLE = _Inadmissible()


@dataclass(frozen=True)
class WahlParams:
    s: int
    h: int


def _check_hj(b: Sequence[int]) -> tuple[int, ...]:
    t = tuple(int(x) for x in b)
    if not t:
        raise InvalidInput("empty tuple")
    if any(x < 2 for x in t):
        raise InvalidInput(f"entries must be >= 2: {t}")
    return t


def hj_expand(num: int, den: int) -> tuple[int, ...]:
    """Expand ``num/den > 1`` as a Hirzebruch-Jung continued fraction."""
    if den < 1 or num <= den:
        raise InvalidInput(f"need num > den >= 1, got {num}/{den}")
    if gcd(num, den) != 1:
        raise InvalidInput(f"{num} and {den} are not coprime")
    out = []
    # x = num/den; next x = 1/(b - x) = den/(b*den - num)
    while True:
        b = -(-num // den)
        out.append(b)
        rest = b * den - num
        if rest == 0:
            return tuple(out)
        num, den = den, rest


def cf_eval(t: Sequence[int]) -> Fraction | _Inadmissible:
    """Evaluate ``t``; INADMISSIBLE unless every tail after the first is > 0."""
    if not t:
        raise InvalidInput("empty tuple")
    # tail u = a/c with c > 0; n - 1/u = (n*a - c)/a
    a, c = t[-1], 1
    for n in reversed(t[:-1]):
        if a <= 0:
            return INADMISSIBLE
        a, c = n * a - c, a
    return Fraction(a, c)


def riemenschneider_dual(b: Sequence[int]) -> tuple[int, ...]:
    """Dual expansion: ``p/(p-q)`` goes to ``p/q``."""
    b = _check_hj(b)
    v = cf_eval(b)
    p, d = v.numerator, v.denominator
    return hj_expand(p, p - d)


def wahl_params(weights: Sequence[int]) -> WahlParams | None:
    """Return ``(s, h)`` when the weights expand ``s^2/(sh-1)``."""
    w = _check_hj(weights)
    v = cf_eval(w)
    p, q = v.numerator, v.denominator
    s = isqrt(p)
    if s * s != p or s < 2 or (q + 1) % s:
        return None
    h = (q + 1) // s
    if not (1 <= h < s) or gcd(s, h) != 1:
        return None
    return WahlParams(s, h)


def is_wahl_family(weights: Sequence[int]) -> bool:
    """Decide membership in the family grown from (4) by the two 2-insertions."""
    w = list(weights)
    if not w:
        return False
    while len(w) > 1:
        if w[0] == 2 and w[-1] >= 3:
            w = w[1:]
            w[-1] -= 1
        elif w[-1] == 2 and w[0] >= 3:
            w = w[:-1]
            w[0] -= 1
        else:
            return False
    return w == [4]
