"""Hilbert series as exact rational functions in t.

A series is N(t) / prod (1 - t^a) with N an integer Laurent polynomial.
The canonical form cancels shared factors (1 - t^a), retrying the largest a
after every success.  Equality between series is rational-function equality
and does not depend on that form.

For R = k[X, Y1, Y2]/(c*X^d + G(Y1, Y2)) and
M_a = Syz(X^a*V_1, ..., X^a*V_m, V_{m+1}, ...) with a = d*q + r:

  K_M = ((t^(alpha*r) - t^(alpha*d)) K_{S_q} + (1 - t^(alpha*r)) K_{S_{q+1}})
        / (1 - t^(alpha*d))

where alpha = deg X and S_j = Syz(G^j*V_1, ..., G^j*V_m, V_{m+1}, ...) is
computed in k[Y1, Y2] and extended freely to R.

  E6 = X^2 + Y^3 + Z^4, weights (6, 4, 3), M_1 = Syz(X, Y, Z)
      -> (t^7 + t^9 + t^10 + t^12) / ((1 - t^4)(1 - t^3))
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .oracle import HilbertFunctionResult, OracleError, syz_generator_degrees
from .polyring import (
    UNDEFINED_ZERO,
    GaussianIntegers,
    Poly,
    WeightedRingSpec,
    weighted_degree,
)

Laurent = Dict[int, int]
PolyLike = Union[Poly, str]

DEFAULT_PRIME = 101
DEFAULT_CHECK_PRIME = 103
# 103 has no square root of -1; data over Z[i] is checked at the next prime = 1 mod 4
DEFAULT_CHECK_PRIME_GAUSS = 109


class SeriesError(ValueError):
    """Invalid Hilbert-series input."""


# -- Laurent polynomial helpers -----------------------------------------------

def _clean(p: Mapping[int, int]) -> Laurent:
    return {e: c for e, c in p.items() if c}


def _add(p: Mapping[int, int], q: Mapping[int, int], sign: int = 1) -> Laurent:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + sign * c
    return _clean(out)


def _mul(p: Mapping[int, int], q: Mapping[int, int]) -> Laurent:
    out: Laurent = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return _clean(out)


def _one_minus(a: int) -> Laurent:
    return {0: 1, a: -1}


def _mul_factors(p: Mapping[int, int], factors: Iterable[int]) -> Laurent:
    out = dict(p)
    for a in factors:
        out = _mul(out, _one_minus(a))
    return out


def _div_one_minus(p: Mapping[int, int], a: int) -> Optional[Laurent]:
    """p / (1 - t^a) if the division is exact, else None."""
    if not p:
        return {}
    classes: Dict[int, int] = {}
    for e, c in p.items():
        classes[e % a] = classes.get(e % a, 0) + c
    if any(classes.values()):
        return None
    lo, hi = min(p), max(p)
    out: Laurent = {}
    for k in range(lo, hi - a + 1):
        c = p.get(k, 0) + out.get(k - a, 0)
        if c:
            out[k] = c
    return out


def _term_str(e: int, c: int) -> str:
    if e == 0:
        return str(c)
    mono = "t" if e == 1 else f"t^{e}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def laurent_to_string(p: Mapping[int, int]) -> str:
    if not p:
        return "0"
    out = ""
    for e in sorted(p):
        s = _term_str(e, p[e])
        out += s if not out or s.startswith("-") else "+" + s
    return out


# -- the series type ----------------------------------------------------------

@dataclass(frozen=True)
class HilbertSeries:
    """numerator / prod_{a in den} (1 - t^a).

    numerator is a sorted tuple of (exponent, coefficient) pairs; den is sorted
    descending.  Arithmetic keeps the uncancelled form; the public series
    functions return canonical() results.
    """

    numerator: Tuple[Tuple[int, int], ...]
    den: Tuple[int, ...] = ()

    def __post_init__(self):
        num = _clean(dict(self.numerator))
        den = sorted((int(a) for a in self.den), reverse=True)
        if any(a < 1 for a in den):
            raise SeriesError(f"denominator exponents must be positive, got {self.den}")
        object.__setattr__(self, "numerator", tuple(sorted(num.items())))
        object.__setattr__(self, "den", tuple(den) if num else ())

    def canonical(self) -> "HilbertSeries":
        """Cancel shared factors (1 - t^a), always retrying from the largest a."""
        num, den = self.num, list(self.den)
        changed = True
        while changed:
            changed = False
            for a in sorted(set(den), reverse=True):
                quot = _div_one_minus(num, a)
                if quot is not None:
                    num = quot
                    den.remove(a)
                    changed = True
                    break
        return HilbertSeries.make(num, den)

    @classmethod
    def make(cls, num: Mapping[int, int], den: Iterable[int] = ()) -> "HilbertSeries":
        return cls(tuple(num.items()), tuple(den))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "HilbertSeries":
        return cls.make({e: c})

    @classmethod
    def polynomial(cls, coeffs: Sequence[int]) -> "HilbertSeries":
        return cls.make(dict(enumerate(coeffs)))

    @property
    def num(self) -> Laurent:
        return dict(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    # arithmetic over a common denominator (multiset maximum)
    def _common(self, other: "HilbertSeries") -> Tuple[Laurent, Laurent, List[int]]:
        c1, c2 = Counter(self.den), Counter(other.den)
        common = c1 | c2
        n1 = _mul_factors(self.num, (common - c1).elements())
        n2 = _mul_factors(other.num, (common - c2).elements())
        return n1, n2, list(common.elements())

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        other = _coerce(other)
        n1, n2, den = self._common(other)
        return HilbertSeries.make(_add(n1, n2), den)

    __radd__ = __add__

    def __neg__(self) -> "HilbertSeries":
        return HilbertSeries.make({e: -c for e, c in self.numerator}, self.den)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "HilbertSeries":
        return _coerce(other) - self

    def __mul__(self, other) -> "HilbertSeries":
        other = _coerce(other)
        return HilbertSeries.make(_mul(self.num, other.num), self.den + other.den)

    __rmul__ = __mul__

    def divide_one_minus(self, a: int) -> "HilbertSeries":
        """self / (1 - t^a)."""
        return HilbertSeries.make(self.num, self.den + (a,))

    def shift(self, m: int) -> "HilbertSeries":
        return HilbertSeries.make({e + m: c for e, c in self.numerator}, self.den)

    def _cross(self, other: "HilbertSeries") -> Tuple[Laurent, Laurent]:
        return _mul_factors(self.num, other.den), _mul_factors(other.num, self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        a, b = self._cross(other)
        return a == b

    def __hash__(self) -> int:
        # value at t = 2 is a rational-function invariant
        num = sum(Fraction(2) ** e * c for e, c in self.numerator)
        den = math.prod(1 - 2 ** a for a in self.den)
        return hash(num / den)

    def numerator_string(self) -> str:
        return laurent_to_string(self.num)

    def den_string(self) -> str:
        return "[" + ",".join(str(a) for a in self.den) + "]"

    def __str__(self) -> str:
        num = self.numerator_string()
        if not self.den:
            return num
        den = "".join(f"(1-t^{a})" if a > 1 else "(1-t)" for a in self.den)
        return f"({num})/({den})"

    def as_dict(self) -> dict:
        return {
            "num": self.numerator_string(),
            "den": list(self.den),
            "coefficients": {str(e): c for e, c in self.numerator},
        }


def _coerce(x) -> HilbertSeries:
    if isinstance(x, HilbertSeries):
        return x
    if isinstance(x, int):
        return HilbertSeries.make({0: x})
    raise TypeError(f"cannot combine a Hilbert series with {type(x).__name__}")


def hs_numerator_at_one(h: HilbertSeries) -> int:
    return sum(c for _, c in h.numerator)


def hs_expand(h: HilbertSeries, upto: int) -> List[int]:
    """Power-series coefficients of degrees 0..upto."""
    if h.numerator and h.numerator[0][0] < 0:
        raise SeriesError("numerator has negative exponents; shift the series first")
    out = [0] * (upto + 1)
    for e, c in h.numerator:
        if e <= upto:
            out[e] = c
    for a in h.den:
        for k in range(a, upto + 1):
            out[k] += out[k - a]
    return out


def hs_equal_up_to_shift(h1: HilbertSeries, h2: HilbertSeries) -> Optional[int]:
    """The m with h2 = t^m * h1, or None."""
    a, b = h1._cross(h2)
    if not a or not b:
        return 0 if a == b else None
    m = min(b) - min(a)
    return m if {e + m: c for e, c in a.items()} == b else None


# -- series of rings and syzygy modules --------------------------------------

def hs_ring(spec: WeightedRingSpec) -> HilbertSeries:
    if spec.relation is None:
        return HilbertSeries.make({0: 1}, spec.weights)
    return HilbertSeries.make(_one_minus(spec.rel_degree), spec.weights).canonical()


def _as_poly(spec: WeightedRingSpec, f: PolyLike) -> Poly:
    return spec.parse(f) if isinstance(f, str) else f


def _generator_degree(g: Poly, spec: WeightedRingSpec) -> int:
    d = weighted_degree(g, spec)
    if d is None or d == UNDEFINED_ZERO:
        raise SeriesError(f"{g.to_string(spec.names)} is not a nonzero form")
    return d


def hs_syz_direct(spec: WeightedRingSpec, gens: Sequence[PolyLike],
                  quotient: Union[HilbertFunctionResult, HilbertSeries]) -> HilbertSeries:
    """Series of Syz_R(gens) from the series of R/(gens).

    The quotient is either an artinian Hilbert function or, for quotients of
    positive dimension, a rational series supplied by the caller.
    """
    if isinstance(quotient, HilbertFunctionResult):
        if not quotient.artinian:
            raise SeriesError("the quotient is not artinian; pass its series instead")
        quotient = HilbertSeries.polynomial(quotient.values)
    shifts: Laurent = {}
    for g in gens:
        d = _generator_degree(_as_poly(spec, g), spec)
        shifts[d] = shifts.get(d, 0) + 1
    lead = HilbertSeries.make(_add(shifts, {0: 1}, -1)) * hs_ring(spec)
    return (lead + quotient).canonical()


# -- the recursion for k[X, Y1, Y2]/(X^d + G) --------------------------------

@dataclass(frozen=True)
class RelationSplit:
    """relation = c*X^d + G with G free of X."""

    x: int
    d: int
    alpha: int
    g: Poly                       # in the remaining two variables
    y_weights: Tuple[int, int]


def split_relation(spec: WeightedRingSpec, x: Optional[int] = None) -> RelationSplit:
    """Locate a variable that occurs in the relation only as a pure power."""
    if spec.relation is None or spec.nvars != 3:
        raise SeriesError("a relation in three variables is required")
    rel = spec.relation
    candidates = range(3) if x is None else [x]
    for v in candidates:
        with_v = [e for e in rel.terms if e[v]]
        if len(with_v) != 1 or any(with_v[0][k] for k in range(3) if k != v):
            continue
        rest = {_drop(e, v): c for e, c in rel.terms.items() if not e[v]}
        if not rest:
            continue
        weights = tuple(w for k, w in enumerate(spec.weights) if k != v)
        return RelationSplit(v, with_v[0][v], spec.weights[v],
                             Poly(2, rest, rel.domain), weights)
    raise SeriesError("no variable occurs in the relation only as a pure power")


def _drop(e: Tuple[int, ...], v: int) -> Tuple[int, ...]:
    return tuple(a for k, a in enumerate(e) if k != v)


def _to_y(spec: WeightedRingSpec, split: RelationSplit, f: PolyLike) -> Poly:
    f = _as_poly(spec, f)
    if f.nvars != 3:
        raise SeriesError("generators must live in the three-variable ring")
    if f.is_zero():
        raise SeriesError("generators must be nonzero")
    if any(e[split.x] for e in f.terms):
        raise SeriesError(f"{f.to_string(spec.names)} involves {spec.names[split.x]}; "
                          "pass X-powers through a and the head list")
    return Poly(2, {_drop(e, split.x): c for e, c in f.terms.items()}, f.domain)


def _needs_gauss(polys: Iterable[Poly]) -> bool:
    return any(isinstance(f.domain, GaussianIntegers) for f in polys)


def _check_primes(p: int, check_p: Optional[int], polys: Sequence[Poly]) -> List[int]:
    if check_p == "auto":
        check_p = DEFAULT_CHECK_PRIME_GAUSS if _needs_gauss(polys) else DEFAULT_CHECK_PRIME
    return [p] if check_p is None else [p, check_p]


def _s_gens(split: RelationSplit, j: int, head: Sequence[Poly], tail: Sequence[Poly]) -> List[Poly]:
    gj = split.g ** j
    return [gj * v for v in head] + list(tail)


def s_generator_degrees(spec: WeightedRingSpec, j: int, vhead: Sequence[PolyLike],
                        vtail: Sequence[PolyLike], p: int = DEFAULT_PRIME,
                        check_p="auto", x: Optional[int] = None) -> List[int]:
    """Generator degrees of S_j = Syz(G^j*V_head, V_tail) over k[Y1, Y2]."""
    split = split_relation(spec, x)
    head = [_to_y(spec, split, v) for v in vhead]
    tail = [_to_y(spec, split, v) for v in vtail]
    gens = _s_gens(split, j, head, tail)
    if len(gens) < 2:
        return []
    y_spec = WeightedRingSpec(("Y1", "Y2"), split.y_weights)
    results = []
    for prime in _check_primes(p, check_p, gens + [split.g]):
        try:
            results.append(syz_generator_degrees(y_spec, gens, prime))
        except OracleError as exc:
            raise SeriesError(f"S_{j} over F_{prime}: {exc}") from exc
    if any(r != results[0] for r in results[1:]):
        raise SeriesError(f"S_{j} generator degrees differ between primes: {results}")
    return results[0]


def hs_S(spec: WeightedRingSpec, j: int, vhead: Sequence[PolyLike], vtail: Sequence[PolyLike],
         p: int = DEFAULT_PRIME, check_p="auto", x: Optional[int] = None) -> HilbertSeries:
    degs = s_generator_degrees(spec, j, vhead, vtail, p, check_p, x)
    return (HilbertSeries.make(Counter(degs)) * hs_ring(spec)).canonical()


def hs_Ma(spec: WeightedRingSpec, a: int, vhead: Sequence[PolyLike], vtail: Sequence[PolyLike],
          p: int = DEFAULT_PRIME, check_p="auto", x: Optional[int] = None) -> HilbertSeries:
    """Series of Syz_R(X^a*V_head, V_tail) by the quotient-remainder recursion.

    check_p="auto" re-runs the oracle at a second prime and raises on any
    mismatch; None skips the check.
    """
    if a < 1:
        raise SeriesError(f"a must be >= 1, got {a}")
    if not vhead:
        raise SeriesError("the head list must be nonempty")
    split = split_relation(spec, x)
    q, r = divmod(a, split.d)
    ad, ar = split.alpha * split.d, split.alpha * r
    ks_q = hs_S(spec, q, vhead, vtail, p, check_p, split.x)
    ks_q1 = hs_S(spec, q + 1, vhead, vtail, p, check_p, split.x)
    total = (HilbertSeries.make(_add({ar: 1}, {ad: 1}, -1)) * ks_q
             + HilbertSeries.make(_one_minus(ar) if ar else {}) * ks_q1)
    return total.divide_one_minus(ad).canonical()


def split_monomial_generators(spec: WeightedRingSpec, gens: Sequence[PolyLike],
                              x: Optional[int] = None) -> Tuple[int, List[Poly], List[Poly]]:
    """(a, head, tail) for monomial generators, X^a*V into the head, the rest into the tail."""
    split = split_relation(spec, x)
    a_values = set()
    head: List[Poly] = []
    tail: List[Poly] = []
    for f in gens:
        f = _as_poly(spec, f)
        if not f.is_monomial():
            raise SeriesError(f"{f.to_string(spec.names)} is not a monomial")
        (e,), (c,) = f.terms.keys(), f.terms.values()
        rest = tuple(0 if k == split.x else u for k, u in enumerate(e))
        v = Poly.monomial(rest, c, f.domain)
        if e[split.x]:
            a_values.add(e[split.x])
            head.append(v)
        else:
            tail.append(v)
    if len(a_values) != 1:
        raise SeriesError("generators must contain one common positive power of "
                          f"{spec.names[split.x]} in the head, got {sorted(a_values)}")
    return a_values.pop(), head, tail


def hs_monomial_syz(spec: WeightedRingSpec, gens: Sequence[PolyLike], p: int = DEFAULT_PRIME,
                    check_p="auto", x: Optional[int] = None) -> HilbertSeries:
    a, head, tail = split_monomial_generators(spec, gens, x)
    return hs_Ma(spec, a, head, tail, p, check_p, x)
