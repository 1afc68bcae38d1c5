"""Closed-form Hilbert-Kunz multiplicities of trinomial surface rings.

A homogeneous trinomial F = X^a + X^b + X^c (multi-exponents a, b, c, rows of
a 3x3 matrix) of degree d is put into one of Monsky's two normal forms by a
search over monomial and variable permutations.  With lambda = det/d and the
alpha/beta/gamma bookkeeping, the multiplicity of (X^t1, Y^t2, Z^t3) on
k[X,Y,Z]/(F) is

    mu(t) = (d/4) Q(t) + (lambda^2 / 4d) * delta(alpha/lambda, beta/lambda, gamma/lambda)^2.

Weighted trinomials reduce to this through U -> X^deg(U) and division by the
product of the weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import permutations
from typing import Optional, Sequence, Tuple, Union

from .delta import delta
from .polyring import Poly, substitute_powers, weighted_degree

Row = Tuple[int, int, int]
Matrix = Tuple[Row, Row, Row]
Rat = Union[int, Fraction]

TYPE_I = "TypeI"
TYPE_II = "TypeII"
IRREGULAR = "Irregular"


class HKMError(ValueError):
    """Base class for trinomial classification failures."""


class InhomogeneousRows(HKMError):
    pass


class Irregular(HKMError):
    pass


class DegenerateDeterminant(HKMError):
    pass


def qform(r: Rat, s: Rat, t: Rat) -> Fraction:
    r, s, t = Fraction(r), Fraction(s), Fraction(t)
    return 2 * (r * s + r * t + s * t) - r * r - s * s - t * t


def det3(m: Sequence[Sequence[int]]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True)
class TrinomialSpec:
    """Canonical exponent matrix: row i is monomial i, column j variable j.

    monomial_perm[i] is the input row placed at canonical row i and
    variable_perm[j] the input variable placed at canonical column j.
    """

    exp: Matrix
    d: int
    lam: int
    kind: str
    monomial_perm: Tuple[int, int, int] = (0, 1, 2)
    variable_perm: Tuple[int, int, int] = (0, 1, 2)

    def canonical_t(self, t: Sequence[Rat]) -> Tuple[Fraction, Fraction, Fraction]:
        """Reorder a triple given in input variable order."""
        return tuple(Fraction(t[j]) for j in self.variable_perm)


def _as_matrix(raw) -> Matrix:
    if isinstance(raw, Poly):
        if raw.nvars != 3 or len(raw) != 3:
            raise HKMError("a trinomial in three variables is required")
        rows = [e for e, _ in raw.items()]
    else:
        rows = [tuple(int(x) for x in r) for r in raw]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise HKMError("exponent matrix must be 3x3")
    if any(x < 0 for r in rows for x in r):
        raise HKMError("exponents must be natural numbers")
    if len(set(rows)) != 3:
        raise HKMError("the three monomials must be distinct")
    return tuple(rows)


def _is_type_i(m: Matrix, d: int) -> bool:
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = m
    return 2 * a1 > d and a3 == 0 and b1 == 0 and 2 * b2 > d and c2 == 0 and 2 * c3 > d


def _is_type_ii(m: Matrix, d: int) -> bool:
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = m
    return a1 == d and a2 == 0 and a3 == 0 and 2 * b2 > d and c1 == 0 and 2 * c3 > d


def _permuted(m: Matrix, sigma, pi) -> Matrix:
    return tuple(tuple(m[sigma[i]][pi[j]] for j in range(3)) for i in range(3))


def classify_trinomial(raw, allow_irregular: bool = False) -> TrinomialSpec:
    """Match a trinomial against the type I / type II normal forms.

    Permutations are tried in lexicographic order starting at the identity,
    type I before type II at each one.  With allow_irregular a trinomial that
    fits neither form keeps its variables and gets the row order with positive
    determinant and largest diagonal (kind Irregular); abg then only accepts
    it when no sign split is needed.
    """
    m = _as_matrix(raw)
    degs = {sum(r) for r in m}
    if len(degs) != 1:
        raise InhomogeneousRows(f"row degrees differ: {[sum(r) for r in m]}")
    d = degs.pop()
    perms = list(permutations(range(3)))
    for pi in perms:
        for sigma in perms:
            cand = _permuted(m, sigma, pi)
            for kind, test in ((TYPE_I, _is_type_i), (TYPE_II, _is_type_ii)):
                if test(cand, d):
                    det = det3(cand)
                    if det <= 0:
                        continue
                    return TrinomialSpec(cand, d, det // d, kind, sigma, pi)
    if allow_irregular:
        # keep the variables, give each one the monomial that leans on it most
        best = None
        for sigma in perms:
            cand = _permuted(m, sigma, (0, 1, 2))
            det = det3(cand)
            if det > 0:
                trace = sum(cand[i][i] for i in range(3))
                if best is None or trace > best[0]:
                    best = (trace, cand, sigma, det)
        if best is None:
            raise DegenerateDeterminant("determinant is not positive for any row order")
        _, cand, sigma, det = best
        return TrinomialSpec(cand, d, det // d, IRREGULAR, sigma)
    raise Irregular("no permutation matches the type I or type II pattern")


@dataclass(frozen=True)
class ABGamma:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma)


def abg_primes(spec: TrinomialSpec, t: Sequence[Rat]) -> Tuple[Fraction, Fraction, Fraction]:
    """alpha', beta', gamma' with t in canonical variable order."""
    t1, t2, t3 = (Fraction(x) for x in t)
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = spec.exp
    d = spec.d
    alpha = t1 * d - t1 * b3 - t1 * c2 - t2 * c1 - t3 * b1
    beta = t2 * d - t2 * c1 - t3 * a2 - t1 * c2 - t2 * a3
    gamma = t3 * d - t3 * a2 - t1 * b3 - t3 * b1 - t2 * a3
    return alpha, beta, gamma


def abg(spec: TrinomialSpec, t: Sequence[Rat]) -> ABGamma:
    """alpha, beta, gamma for t given in the input variable order."""
    if any(Fraction(x) < 0 for x in t):
        raise HKMError("t must be non-negative")
    ap, bp, gp = abg_primes(spec, spec.canonical_t(t))
    au, ad = max(ap, 0), max(-ap, 0)
    bu, bd = max(bp, 0), max(-bp, 0)
    gu, gd = max(gp, 0), max(-gp, 0)
    if spec.kind == TYPE_I:
        return ABGamma(au + gd, bu + ad, gu + bd)
    if spec.kind == TYPE_II:
        return ABGamma(au + bd + gd, bu, gu + ad)
    if ad or bd or gd:
        raise Irregular("irregular trinomial with a negative alpha', beta' or gamma'")
    return ABGamma(ap, bp, gp)


@dataclass(frozen=True)
class HKMResult:
    value: Fraction
    lam: int
    kind: str
    delta_args: Tuple[Fraction, Fraction, Fraction]
    delta: Fraction

    def as_dict(self) -> dict:
        return {"value": self.value, "lambda": self.lam, "type": self.kind,
                "delta_args": list(self.delta_args), "delta": self.delta}


def hkm_standard_details(spec: TrinomialSpec, p: int, t: Sequence[Rat]) -> HKMResult:
    ab = abg(spec, t)
    lam = spec.lam
    args = tuple(x / lam for x in ab.as_tuple())
    dv = delta(p, args)
    ct = spec.canonical_t(t)
    value = Fraction(spec.d, 4) * qform(*ct) + Fraction(lam * lam, 4 * spec.d) * dv * dv
    return HKMResult(value, lam, spec.kind, args, dv)


def hkm_standard(spec: TrinomialSpec, p: int, t: Sequence[Rat]) -> Fraction:
    """Multiplicity of (X^t1, Y^t2, Z^t3) on k[X,Y,Z]/(F), t in input order."""
    return hkm_standard_details(spec, p, t).value


def _weighted_rows(weights: Sequence[int], f) -> Tuple[Matrix, Tuple[int, ...]]:
    weights = tuple(int(w) for w in weights)
    if len(weights) != 3 or min(weights) < 1:
        raise HKMError("three positive weights are required")
    if isinstance(f, Poly):
        if weighted_degree(f, weights) is None:
            raise InhomogeneousRows(f"{f} is not homogeneous for weights {weights}")
        g = substitute_powers(f, weights)
        rows = _as_matrix(g)
    else:
        rows = tuple(tuple(e * w for e, w in zip(r, weights)) for r in _as_matrix(f))
    return rows, weights


def hkm_weighted_details(weights: Sequence[int], f, p: int) -> HKMResult:
    """HKM of k[U,V,W]/(f) for a quasi-homogeneous trinomial f.

    f is a Poly or a 3x3 exponent matrix in (U, V, W).  Trinomials that match
    neither normal form are accepted when alpha', beta', gamma' are all
    non-negative, which is the case for the T_{PQ,infinity} singularities.
    """
    rows, weights = _weighted_rows(weights, f)
    spec = classify_trinomial(rows, allow_irregular=True)
    res = hkm_standard_details(spec, p, weights)
    prod = weights[0] * weights[1] * weights[2]
    return HKMResult(res.value / prod, res.lam, res.kind, res.delta_args, res.delta)


def hkm_weighted(weights: Sequence[int], f, p: int) -> Fraction:
    return hkm_weighted_details(weights, f, p).value


def hkm_diagonal(d1: int, d2: int, d3: int, p: int) -> Fraction:
    """HKM of k[U,V,W]/(U^d1 + V^d2 + W^d3)."""
    if min(d1, d2, d3) < 2:
        raise HKMError("diagonal exponents must be >= 2")
    dv = delta(p, (Fraction(1, d1), Fraction(1, d2), Fraction(1, d3)))
    return (2 * (d1 + d2 + d3) - Fraction(d1 * d2, d3) - Fraction(d1 * d3, d2)
            - Fraction(d2 * d3, d1) + d1 * d2 * d3 * dv * dv) / 4


def hkm_binomial(d: int, a: Sequence[int]) -> Fraction:
    """HKM of k[X, Y_1..Y_n]/(X^d - Y_1^a_1 ... Y_n^a_n).

    Zero exponents are allowed, and d = 1 gives the regular value 1; both
    occur as degenerate limits of the families below.
    """
    if d < 1:
        raise HKMError("d must be >= 1")
    if any(x < 0 for x in a) or sum(a) < 1:
        raise HKMError("exponents must be natural numbers with positive sum")
    if any(x >= d for x in a):
        return Fraction(d)
    prod = Fraction(1)
    for x in a:
        prod *= 1 - Fraction(x, d)
    return d * (1 - prod)


def tpq_weights(P: int, Q: int) -> Tuple[int, int, int]:
    """Weights making U^P + V^Q + UVW homogeneous (needs P + Q > 4)."""
    if P < 2 or Q < 2 or P + Q <= 4:
        raise HKMError("T_{PQ,infinity} needs P, Q >= 2 and P + Q > 4")
    return (Q, P, P * Q - P - Q)


# -- families with one growing exponent -------------------------------------

FAMILY_PARAMS = {
    "F1": ("a2", "b2", "b3", "c1", "c3"),
    "FU": ("b1", "b2", "b3", "c2", "c3"),
    "FV": ("a1", "b1", "b3", "c2", "c3"),
    "FW": ("a1", "b1", "b2", "b3", "c2"),
}


@dataclass(frozen=True)
class FamilySpec:
    """One of the trinomial families in (U, V, W) with exponent L growing.

    F1: U^L V^a2 + V^b2 W^b3 + U^c1 W^c3
    FU: U^L + U^b1 V^b2 W^b3 + V^c2 W^c3
    FV: U^a1 + U^b1 V^L W^b3 + V^c2 W^c3
    FW: U^a1 + U^b1 V^b2 W^b3 + V^c2 W^L
    """

    kind: str
    params: Tuple[int, int, int, int, int]

    def __post_init__(self):
        if self.kind not in FAMILY_PARAMS:
            raise HKMError(f"unknown family {self.kind!r}")
        params = tuple(int(x) for x in self.params)
        if len(params) != 5 or min(params) < 0:
            raise HKMError("a family takes five natural-number parameters")
        object.__setattr__(self, "params", params)

    def named(self) -> dict:
        return dict(zip(FAMILY_PARAMS[self.kind], self.params))

    def rows(self, L: int) -> Matrix:
        k = self.named()
        if self.kind == "F1":
            return ((L, k["a2"], 0), (0, k["b2"], k["b3"]), (k["c1"], 0, k["c3"]))
        if self.kind == "FU":
            return ((L, 0, 0), (k["b1"], k["b2"], k["b3"]), (0, k["c2"], k["c3"]))
        if self.kind == "FV":
            return ((k["a1"], 0, 0), (k["b1"], L, k["b3"]), (0, k["c2"], k["c3"]))
        return ((k["a1"], 0, 0), (k["b1"], k["b2"], k["b3"]), (0, k["c2"], L))

    def grading(self, L: int) -> Tuple[int, int, int, int]:
        """(deg U, deg V, deg W, deg f) before removing common factors."""
        k = self.named()
        if self.kind == "F1":
            a2, b2, b3, c1, c3 = (k[x] for x in FAMILY_PARAMS["F1"])
            a = b2 * c3 - a2 * c3 + a2 * b3
            b = (c3 - b3) * L + b3 * c1
            c = b2 * L - b2 * c1 + a2 * c1
            return a, b, c, b2 * c3 * L + a2 * b3 * c1
        if self.kind == "FU":
            b1, b2, b3, c2, c3 = (k[x] for x in FAMILY_PARAMS["FU"])
            a = b2 * c3 - b3 * c2
            b = (c3 - b3) * L - c3 * b1
            c = (b2 - c2) * L + b1 * c2
            return a, b, c, a * L
        if self.kind == "FV":
            a1, b1, b3, c2, c3 = (k[x] for x in FAMILY_PARAMS["FV"])
            a = c3 * L - b3 * c2
            b = a1 * c3 - a1 * b3 - b1 * c3
            c = a1 * L - a1 * c2 + b1 * c2
            return a, b, c, a * a1
        a1, b1, b2, b3, c2 = (k[x] for x in FAMILY_PARAMS["FW"])
        a = b2 * L - b3 * c2
        b = (a1 - b1) * L - a1 * b3
        c = (b2 - c2) * a1 + b1 * c2
        return a, b, c, a * a1

    def weights(self, L: int) -> Tuple[int, int, int]:
        a, b, c, d = self.grading(L)
        if min(a, b, c) <= 0:
            raise HKMError(f"grading {(a, b, c)} of {self.kind} at L={L} is not positive")
        rows = self.rows(L)
        if any(r[0] * a + r[1] * b + r[2] * c != d for r in rows):
            raise HKMError(f"{self.kind} at L={L} is not homogeneous for {(a, b, c)}")
        g = reduce(math.gcd, (a, b, c))
        return (a // g, b // g, c // g)

    def limit_binomial(self) -> Tuple[int, int, Tuple[int, int]]:
        """(exponent sum of the monomial factor, d, binomial exponents)."""
        k = self.named()
        if self.kind == "F1":
            return k["b3"], k["b2"], (k["c1"], k["c3"] - k["b3"])
        if self.kind == "FU":
            return k["c2"] + k["b3"], k["c3"] - k["b3"], (k["b1"], k["b2"] - k["c2"])
        if self.kind == "FV":
            return 0, k["a1"], (k["c2"], k["c3"])
        return k["b1"], k["a1"] - k["b1"], (k["b2"], k["b3"])


@dataclass(frozen=True)
class FamilyPoint:
    value: Fraction
    weights: Tuple[int, int, int]
    kind: str
    delta_args: Tuple[Fraction, Fraction, Fraction]
    off_triangle: bool


def family_point(fam: FamilySpec, p: int, L: int) -> FamilyPoint:
    """HKM at one L plus whether the delta arguments leave the strict triangle."""
    w = fam.weights(L)
    res = hkm_weighted_details(w, fam.rows(L), p)
    x = res.delta_args
    off = 2 * max(x) >= sum(x)
    return FamilyPoint(res.value, w, res.kind, x, off)


def family_hkm(fam: FamilySpec, p: int, L: int) -> Fraction:
    return family_point(fam, p, L).value


def family_limit(fam: FamilySpec) -> Fraction:
    shift, d, expo = fam.limit_binomial()
    return shift + hkm_binomial(d, expo)
