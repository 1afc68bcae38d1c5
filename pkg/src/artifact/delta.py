"""Han's delta function and its weighted variant tau.

delta(p, t) is the normalized syzygy gap of (X^a1, Y^a2, (X+Y)^a3) in
characteristic p, extended to rational triples.  Off the strict triangle it
is 2*max(t) - sum(t).  Inside, it is (1 - D)/p^s for the unique s where the
taxicab distance D from p^s*t to the odd lattice drops below 1, and 0 if no
such s exists.

  delta(3, (1/7, 1/7, 1/7)) -> 1/63   (s = 2, D = 6/7)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence, Tuple

Triple = Tuple[Fraction, Fraction, Fraction]
Corner = Tuple[int, int, int]


class DeltaError(ValueError):
    """Invalid delta input."""


def _triple(t: Sequence) -> Triple:
    if len(t) != 3:
        raise DeltaError(f"expected three components, got {len(t)}")
    out = tuple(Fraction(x) for x in t)
    if any(x < 0 for x in out):
        raise DeltaError(f"components must be >= 0, got {t}")
    return out


def _check_prime(p: int) -> None:
    if p < 2 or any(p % k == 0 for k in range(2, math.isqrt(p) + 1)):
        raise DeltaError(f"{p} is not prime")


def _corners(t: Triple):
    choices = [{math.floor(x), math.ceil(x)} for x in t]
    return [c for c in product(*choices) if sum(c) % 2 == 1]


def nearest_odd_corner(t: Sequence) -> Tuple[Fraction, Optional[Corner]]:
    """Taxicab distance to the nearest odd-sum floor/ceil corner and that corner.

    A lattice point with even coordinate sum has no odd corner; its distance
    to the odd lattice is exactly 1 and no corner is reported.
    """
    t = _triple(t)
    best: Optional[Tuple[Fraction, Corner]] = None
    for c in _corners(t):
        dist = sum(abs(x - u) for x, u in zip(t, c))
        if best is None or dist < best[0]:
            best = (dist, c)
    if best is None:
        return Fraction(1), None
    return best


def dist_to_odd_lattice(t: Sequence) -> Fraction:
    return nearest_odd_corner(t)[0]


def s_bounds(p: int, t: Sequence) -> Tuple[int, int]:
    """Scan range for s.

    lower is the smallest s with p^s * (3/2) * max(t) > 1: below it every
    coordinate of p^s*t is at most 2/3 and the distance cannot drop below 1.
    upper is one less than the first repeat of the residues p^u*num(t_i)
    modulo 2*lcm(denominators), u = 1, 2, ...; past it no new distances occur.
    """
    _check_prime(p)
    t = _triple(t)
    m = max(t)
    if m == 0:
        raise DeltaError("all components are zero")
    target = Fraction(3, 2) * m
    lower = 0
    if target > 1:
        while target * _pow(p, lower - 1) > 1:
            lower -= 1
    else:
        while target * _pow(p, lower) <= 1:
            lower += 1
    modulus = 2 * math.lcm(*(x.denominator for x in t))
    nums = [x.numerator for x in t]
    seen = set()
    u = 1
    while True:
        key = tuple(pow(p, u, modulus) * n % modulus for n in nums)
        if key in seen:
            return lower, u - 1
        seen.add(key)
        u += 1


def _pow(p: int, s: int) -> Fraction:
    return Fraction(p) ** s


@dataclass(frozen=True)
class DeltaResult:
    value: Fraction
    s: Optional[int] = None
    witness_corner: Optional[Corner] = None


def delta_details(p: int, t: Sequence) -> DeltaResult:
    _check_prime(p)
    t = _triple(t)
    m, total = max(t), sum(t)
    if 2 * m >= total:
        return DeltaResult(2 * m - total)
    lower, upper = s_bounds(p, t)
    for s in range(lower, upper + 1):
        scale = _pow(p, s)
        dist, corner = nearest_odd_corner(tuple(scale * x for x in t))
        if dist < 1:
            return DeltaResult((1 - dist) / scale, s, corner)
    return DeltaResult(Fraction(0))


def delta(p: int, t: Sequence) -> Fraction:
    return delta_details(p, t).value


def tau(p: int, a: int, b: int, c: int, d: int, t: Sequence) -> Fraction:
    """Gap function for (U^a1, V^a2, (U^c + V^d)^a3) with Deg U = a, Deg V = b."""
    if min(a, b, c, d) < 1:
        raise DeltaError("a, b, c, d must be positive")
    if a * c != b * d:
        raise DeltaError(f"a*c = {a * c} differs from b*d = {b * d}")
    t = _triple(t)
    return a * c * delta(p, (t[0] / c, t[1] / d, t[2]))
