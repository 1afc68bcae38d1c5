"""Degreewise linear algebra over F_p: the brute-force ground truth.

Every quantity here is a rank computation inside one graded piece, so no
Groebner machinery is needed.  For a quotient S/(g_1, ..., g_k, F) the
monomial generators are handled combinatorially: the degree-d piece of
S/(monomials) has the standard monomials as a basis, and the remaining
generators contribute rows m*g reduced modulo the monomial ideal.

  k[X,Y,Z]/(X^2 - YZ, X^3, Y^3, Z^3) over F_5
      -> values (1, 3, 5, 4)... total 13
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .polyring import (
    UNDEFINED_ZERO,
    Exponent,
    Poly,
    PrimeField,
    WeightedRingSpec,
    divides,
    graded_piece_basis,
    weighted_degree,
)

Row = Dict[int, int]


class OracleError(ValueError):
    """Invalid oracle input."""


class NonArtinian(OracleError):
    """The Hilbert function did not vanish before the degree bound."""


class Echelon:
    """Incremental row echelon form over F_p on integer column indices.

    Rows are pivoted on their smallest column index.  Only the leading entry
    of each new row is cleared against stored pivots, which is enough to
    decide independence and therefore the rank.
    """

    __slots__ = ("p", "pivots")

    def __init__(self, p: int):
        self.p = p
        self.pivots: Dict[int, Row] = {}

    def add(self, row: Row) -> bool:
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        pivots = self.pivots
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], p - 2, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                return True
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_mod_p(rows: Sequence[Row], p: int) -> int:
    ech = Echelon(p)
    for r in rows:
        ech.add(r)
    return ech.rank


@dataclass(frozen=True)
class QuotientProblem:
    """S/(generators, relation) with S = F_p[variables] weighted by spec."""

    spec: WeightedRingSpec
    generators: Tuple[Poly, ...]
    p: int

    def __post_init__(self):
        field_ = PrimeField(self.p)
        gens = tuple(g.to_domain(field_) for g in self.generators)
        if not gens:
            raise OracleError("at least one generator is required")
        for g in gens:
            if g.nvars != self.spec.nvars:
                raise OracleError("generator lives in a ring with a different variable count")
            if weighted_degree(g, self.spec) is None:
                raise OracleError(f"generator {g} is not homogeneous")
        object.__setattr__(self, "generators", gens)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    def all_generators(self) -> List[Poly]:
        gens = [g for g in self.generators if not g.is_zero()]
        if self.spec.relation is not None:
            rel = self.spec.relation.to_domain(self.field)
            if not rel.is_zero():
                gens.append(rel)
        return gens

    def default_max_degree(self) -> int:
        env = os.environ.get("HK_MAX_DEGREE")
        if env:
            return int(env)
        total = sum(_degree(g, self.spec) for g in self.generators if not g.is_zero())
        if self.spec.relation is not None:
            total += self.spec.rel_degree
        return 4 * max(total, 1)


@dataclass(frozen=True)
class HilbertFunctionResult:
    values: Tuple[int, ...]
    artinian: bool
    total: Optional[int] = field(default=None)

    def as_dict(self) -> dict:
        return {"values": list(self.values), "artinian": self.artinian, "total": self.total}


def _degree(g: Poly, spec) -> int:
    d = weighted_degree(g, spec)
    if d is None or d == UNDEFINED_ZERO:
        raise OracleError(f"{g} has no weighted degree")
    return d


class _QuotientPieces:
    """Degree-d pieces of S/(monomial gens) modulo the remaining generators."""

    def __init__(self, weights: Tuple[int, ...], gens: Sequence[Poly], p: int):
        self.weights = weights
        self.p = p
        self.monos: List[Exponent] = []
        self.others: List[Tuple[int, Poly]] = []
        for g in gens:
            if g.is_monomial():
                (e,) = g.terms
                self.monos.append(e)
            else:
                self.others.append((_degree(g, weights), g))
        self._std: Dict[int, List[Exponent]] = {}

    def standard(self, d: int) -> List[Exponent]:
        if d not in self._std:
            monos = self.monos
            self._std[d] = [e for e in graded_piece_basis(self.weights, d)
                            if not any(divides(m, e) for m in monos)]
        return self._std[d]

    def dim(self, d: int) -> int:
        std = self.standard(d)
        if not std or not self.others:
            return len(std)
        index = {e: k for k, e in enumerate(std)}
        ech = Echelon(self.p)
        for gd, g in self.others:
            if gd > d:
                continue
            terms = g.terms
            for m in self.standard(d - gd):
                row = {}
                for e, c in terms.items():
                    k = index.get(tuple(a + b for a, b in zip(e, m)))
                    if k is not None:
                        row[k] = c
                if row:
                    ech.add(row)
                    if ech.rank == len(std):
                        return 0
        return len(std) - ech.rank


def quotient_hilbert_function(prob: QuotientProblem,
                              max_degree: Optional[int] = None) -> HilbertFunctionResult:
    """Hilbert function of the quotient, stopping after a zero window."""
    bound = prob.default_max_degree() if max_degree is None else max_degree
    pieces = _QuotientPieces(prob.spec.weights, prob.all_generators(), prob.p)
    window = max(prob.spec.weights)
    values: List[int] = []
    zeros = 0
    for d in range(bound + 1):
        v = pieces.dim(d)
        values.append(v)
        zeros = zeros + 1 if v == 0 else 0
        if zeros == window:
            while values and values[-1] == 0:
                values.pop()
            return HilbertFunctionResult(tuple(values), True, sum(values))
    return HilbertFunctionResult(tuple(values), False, None)


def quotient_dim(prob: QuotientProblem, max_degree: Optional[int] = None) -> int:
    res = quotient_hilbert_function(prob, max_degree)
    if not res.artinian:
        raise NonArtinian(f"no zero window of length {max(prob.spec.weights)} "
                          f"up to degree {len(res.values) - 1}")
    return res.total


def frobenius_colength(spec: WeightedRingSpec, p: int, q: int,
                       ideal: Optional[Sequence[Poly]] = None,
                       max_degree: Optional[int] = None) -> int:
    """dim_k R/I^[q] for R = spec, I the variables unless given."""
    n = spec.nvars
    if ideal is None:
        gens = [Poly.monomial(tuple(q if j == k else 0 for j in range(n)), 1, PrimeField(p))
                for k in range(n)]
    else:
        gens = [g.to_domain(PrimeField(p)) ** q for g in ideal]
    return quotient_dim(QuotientProblem(spec, tuple(gens), p), max_degree)


# -- syzygies in two variables -----------------------------------------------

def _check_two_vars(spec: WeightedRingSpec, gens: Sequence[Poly]) -> Tuple[int, ...]:
    if spec.nvars != 2:
        raise OracleError("syzygy computations need a 2-variable ring")
    if spec.relation is not None:
        raise OracleError("syzygy computations run in a polynomial ring")
    degs = []
    for g in gens:
        if g.is_zero():
            raise OracleError("generators must be nonzero")
        degs.append(_degree(g, spec))
    return tuple(degs)


def _field_gens(gens: Sequence[Poly], p: Optional[int]) -> Tuple[List[Poly], int]:
    if p is None:
        dom = gens[0].domain
        if not isinstance(dom, PrimeField):
            raise OracleError("pass p or give generators over a prime field")
        p = dom.p
    out = [g.to_domain(PrimeField(p)) for g in gens]
    if any(g.is_zero() for g in out):
        raise OracleError(f"a generator vanishes modulo {p}")
    return out, p


def _image_rank(weights, gens, degs, d: int, p: int) -> Tuple[int, int]:
    """(dim of the source piece, rank of the image) in degree d."""
    target = {e: k for k, e in enumerate(graded_piece_basis(weights, d))}
    ech = Echelon(p)
    source = 0
    for g, gd in zip(gens, degs):
        for m in graded_piece_basis(weights, d - gd):
            source += 1
            ech.add({target[tuple(a + b for a, b in zip(e, m))]: c for e, c in g.terms.items()})
    return source, ech.rank


def syz_kernel_dim(spec: WeightedRingSpec, gens: Sequence[Poly], d: int,
                   p: Optional[int] = None) -> int:
    """dim of the degree-d piece of ker(R(-d_1) + ... + R(-d_k) -> R)."""
    gens, p = _field_gens(gens, p)
    degs = _check_two_vars(spec, gens)
    if d < 0:
        return 0
    source, rank = _image_rank(spec.weights, gens, degs, d, p)
    return source - rank


def syz_min_degree(spec: WeightedRingSpec, gens: Sequence[Poly],
                   p: Optional[int] = None) -> int:
    """Smallest degree carrying a nontrivial syzygy."""
    gens, p = _field_gens(gens, p)
    degs = _check_two_vars(spec, gens)
    for d in range(min(degs), sum(degs) + 1):
        if syz_kernel_dim(spec, gens, d, p):
            return d
    raise OracleError("no syzygy found below the Koszul bound")


def syz_gap(spec: WeightedRingSpec, gens: Sequence[Poly], p: Optional[int] = None) -> int:
    gens, p = _field_gens(gens, p)
    degs = _check_two_vars(spec, gens)
    return sum(degs) - 2 * syz_min_degree(spec, gens, p)


def syz_generator_degrees(spec: WeightedRingSpec, gens: Sequence[Poly],
                          p: Optional[int] = None) -> List[int]:
    """Minimal generator degrees of the (free) syzygy module.

    Over a 2-variable polynomial ring the syzygy module of k nonzero forms is
    free of rank k-1, so its Hilbert series times (1-t^a)(1-t^b) lists the
    generator degrees directly.
    """
    gens, p = _field_gens(gens, p)
    degs = _check_two_vars(spec, gens)
    a, b = spec.weights
    need = len(gens) - 1
    kdim: Dict[int, int] = {}

    def k(d: int) -> int:
        if d < 0:
            return 0
        if d not in kdim:
            kdim[d] = syz_kernel_dim(spec, gens, d, p)
        return kdim[d]

    out: List[int] = []
    bound = 2 * sum(degs) + a + b
    for d in range(bound + 1):
        if len(out) == need:
            return out
        c = k(d) - k(d - a) - k(d - b) + k(d - a - b)
        if c < 0:
            raise OracleError(f"negative generator count at degree {d}")
        out.extend([d] * c)
    if len(out) != need:
        raise OracleError(f"found {len(out)} syzygy generators, expected {need}")
    return out


def syzygy_hilbert_function(spec: WeightedRingSpec, gens: Sequence[Poly], upto: int,
                            p: Optional[int] = None) -> List[int]:
    gens, p = _field_gens(gens, p)
    _check_two_vars(spec, gens)
    return [syz_kernel_dim(spec, gens, d, p) for d in range(upto + 1)]


# -- syzygies over a hypersurface ----------------------------------------------

def module_syz_hilbert_function(spec: WeightedRingSpec, gens: Sequence[Poly], upto: int,
                                p: int) -> List[int]:
    """Degreewise dims of Syz_R(gens) for R = spec, any variable count.

    Uses exactness of 0 -> Syz -> (+) R(-d_i) -> R -> R/I -> 0 in each degree,
    so no artinian assumption is needed.
    """
    field_ = PrimeField(p)
    gens = [g.to_domain(field_) for g in gens]
    if not gens or any(g.is_zero() for g in gens):
        raise OracleError(f"generators must be nonzero modulo {p}")
    degs = [_degree(g, spec) for g in gens]
    rel = [] if spec.relation is None else [spec.relation.to_domain(field_)]
    ring = _QuotientPieces(spec.weights, rel, p)
    quot = _QuotientPieces(spec.weights, gens + rel, p)
    return [sum(ring.dim(d - gd) for gd in degs if d >= gd) - ring.dim(d) + quot.dim(d)
            for d in range(upto + 1)]


def module_syz_dim(spec: WeightedRingSpec, gens: Sequence[Poly], d: int, p: int) -> int:
    if d < 0:
        return 0
    return module_syz_hilbert_function(spec, gens, d, p)[d]


# -- Veronese subrings -----------------------------------------------------------

def veronese_colength(n: int, q: int) -> int:
    """dim_k R/(Z_0^q, ..., Z_n^q) for R the n-th Veronese of k[X, Y], Z_j = X^j Y^(n-j).

    A monomial X^i Y^(n*d - i) of R lies in the ideal iff i >= j*q and
    n*d - i >= (n - j)*q for some j, so the count is characteristic free.
    """
    if n < 1 or q < 1:
        raise OracleError("n and q must be positive")
    total, d = 0, 0
    while True:
        free = sum(1 for i in range(n * d + 1)
                   if not any(i >= j * q and n * d - i >= (n - j) * q for j in range(n + 1)))
        if free == 0 and d >= q:
            return total
        total += free
        d += 1
