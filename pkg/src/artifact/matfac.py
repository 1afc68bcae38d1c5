"""Matrix factorizations of a polynomial f.

A pair (phi, psi) of n x n polynomial matrices with phi*psi = psi*phi =
sign*f*Id.  Supplies verification, transposes, the tensor product of
factorizations in disjoint variables, its splitting when both factors are
self-paired, morphism checks, and the rank read off from det(phi) = u*f^m.

  MatFac.from_rows(["X"], ["Y"], "X*Y", ("X", "Y", "Z")).rank() -> 1
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .polyring import (ZZI, Domain, DomainError, Gauss, GaussianIntegers,
                       Integers, Poly, PrimeField, parse_poly)

NAMES = ("X", "Y", "Z")
Entry = Tuple[int, int]


class MatFacError(ValueError):
    """Malformed factorization or violated precondition."""


class SizeMismatch(MatFacError):
    pass


class OverlappingVariables(MatFacError):
    pass


class NotAPowerOfF(MatFacError):
    """det(phi) is not a unit times a power of f."""


# -- coefficient helpers ------------------------------------------------------

def _unit_inverse(domain: Domain, c):
    if isinstance(domain, GaussianIntegers):
        if c.norm() != 1:
            raise MatFacError(f"{c} is not a unit")
        return c.conj()
    if isinstance(domain, Integers):
        if c not in (1, -1):
            raise MatFacError(f"{c} is not a unit")
        return c
    if isinstance(domain, PrimeField):
        return domain.inv(c)
    raise MatFacError(f"no unit inverse in {domain}")


def _imaginary_unit(domain: Domain):
    if isinstance(domain, GaussianIntegers):
        return Gauss(0, 1)
    if isinstance(domain, PrimeField):
        if domain.p == 2:
            raise MatFacError("the splitting needs a characteristic other than two")
        try:
            return domain.sqrt_minus_one()
        except DomainError as exc:
            raise MatFacError(str(exc)) from exc
    raise MatFacError(f"{domain} contains no square root of -1")


def _lead(p: Poly) -> Tuple[Tuple[int, ...], object]:
    e = max(p.terms)          # lexicographic order on exponents
    return e, p.terms[e]


def exact_quotient(a: Poly, b: Poly) -> Optional[Poly]:
    """a / b when b divides a, else None.  b must have a unit leading coefficient."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    dom = a.domain
    eb, cb = _lead(b)
    inv = _unit_inverse(dom, cb)
    quot = Poly.zero(a.nvars, dom)
    rest = a
    while not rest.is_zero():
        ea, ca = _lead(rest)
        if any(x < y for x, y in zip(ea, eb)):
            return None
        m = tuple(x - y for x, y in zip(ea, eb))
        c = dom.mul(ca, inv)
        quot = quot + Poly.monomial(m, c, dom)
        rest = rest - b.mul_monomial(m, c)
    return quot


def _support(p: Poly) -> FrozenSet[int]:
    return frozenset(k for e in p.terms for k, x in enumerate(e) if x)


# -- matrices ---------------------------------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of polynomials sharing one ring."""

    rows: Tuple[Tuple[Poly, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise MatFacError("empty matrix")
        if any(len(r) != n for r in self.rows):
            raise SizeMismatch("matrix is not square")
        first = self.rows[0][0]
        for r in self.rows:
            for x in r:
                if x.nvars != first.nvars or x.domain != first.domain:
                    raise MatFacError("entries live in different rings")

    @classmethod
    def parse(cls, rows: Sequence[str], names: Sequence[str] = NAMES,
              domain: Domain = ZZI) -> "PolyMatrix":
        """Rows as '&'-separated polynomial strings."""
        return cls(tuple(tuple(parse_poly(x, names, domain) for x in r.split("&"))
                         for r in rows))

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[Poly]]) -> "PolyMatrix":
        return cls(tuple(tuple(r) for r in entries))

    @classmethod
    def scalar(cls, n: int, c: Poly) -> "PolyMatrix":
        z = Poly.zero(c.nvars, c.domain)
        return cls(tuple(tuple(c if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def identity(cls, n: int, nvars: int, domain: Domain) -> "PolyMatrix":
        return cls.scalar(n, Poly.const(nvars, 1, domain))

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def nvars(self) -> int:
        return self.rows[0][0].nvars

    @property
    def domain(self) -> Domain:
        return self.rows[0][0].domain

    def __getitem__(self, ij: Entry) -> Poly:
        return self.rows[ij[0]][ij[1]]

    def to_domain(self, domain: Domain) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(x.to_domain(domain) for x in r) for r in self.rows))

    def _same_shape(self, other: "PolyMatrix") -> None:
        if self.size != other.size:
            raise SizeMismatch(f"sizes {self.size} and {other.size} differ")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        return PolyMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                                for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale(self, c) -> "PolyMatrix":
        c = c if isinstance(c, Poly) else Poly.const(self.nvars, c, self.domain)
        return PolyMatrix(tuple(tuple(a * c for a in r) for r in self.rows))

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        n = self.size
        cols = list(zip(*other.rows))
        zero = Poly.zero(self.nvars, self.domain)
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(tuple(out))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(tuple(zip(*self.rows)))

    def kron_identity(self, m: int, left: bool = False) -> "PolyMatrix":
        """self (x) Id_m, or Id_m (x) self when left is set."""
        n = self.size
        zero = Poly.zero(self.nvars, self.domain)
        size = n * m
        out = [[zero] * size for _ in range(size)]
        for i in range(n):
            for j in range(n):
                a = self.rows[i][j]
                if a.is_zero():
                    continue
                for k in range(m):
                    if left:
                        out[k * n + i][k * n + j] = a
                    else:
                        out[i * m + k][j * m + k] = a
        return PolyMatrix.from_entries(out)

    @staticmethod
    def block(blocks: Sequence[Sequence["PolyMatrix"]]) -> "PolyMatrix":
        """Square block matrix of equal-size square blocks."""
        rows: List[Tuple[Poly, ...]] = []
        for brow in blocks:
            for i in range(brow[0].size):
                rows.append(tuple(x for b in brow for x in b.rows[i]))
        return PolyMatrix(tuple(rows))

    def direct_sum(self, other: "PolyMatrix") -> "PolyMatrix":
        zero = Poly.zero(self.nvars, self.domain)
        n, m = self.size, other.size
        rows = [tuple(r) + (zero,) * m for r in self.rows]
        rows += [(zero,) * n + tuple(r) for r in other.rows]
        return PolyMatrix(tuple(rows))

    def det(self) -> Poly:
        """Laplace expansion memoized over column subsets; fine for sparse n <= 12."""
        n = self.size
        zero = Poly.zero(self.nvars, self.domain)
        minors: Dict[Tuple[int, ...], Poly] = {(): Poly.const(self.nvars, 1, self.domain)}
        for k in range(1, n + 1):
            row = self.rows[k - 1]
            nxt: Dict[Tuple[int, ...], Poly] = {}
            for cols in combinations(range(n), k):
                acc = zero
                for pos, j in enumerate(cols):
                    a = row[j]
                    if a.is_zero():
                        continue
                    sub = minors.get(cols[:pos] + cols[pos + 1:])
                    if sub is None or sub.is_zero():
                        continue
                    term = a * sub
                    acc = acc - term if (k - 1 + pos) % 2 else acc + term
                if not acc.is_zero():
                    nxt[cols] = acc
            minors = nxt
        return minors.get(tuple(range(n)), zero)

    def to_strings(self, names: Sequence[str] = NAMES) -> List[List[str]]:
        return [[x.to_string(names) for x in r] for r in self.rows]


# -- factorizations -------------------------------------------------------------

@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    witness: Optional[Tuple[str, int, int]] = None   # (product, row, column)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class MatFac:
    """phi*psi = psi*phi = sign*f*Id, checked unless check=False."""

    phi: PolyMatrix
    psi: PolyMatrix
    f: Poly
    sign: int = 1
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        if self.sign not in (1, -1):
            raise MatFacError("sign must be +1 or -1")
        if self.phi.size != self.psi.size:
            raise SizeMismatch(f"phi is {self.phi.size}x{self.phi.size}, "
                               f"psi is {self.psi.size}x{self.psi.size}")
        if self.f.domain != self.phi.domain or self.psi.domain != self.phi.domain:
            raise MatFacError("phi, psi and f live in different rings")
        if check:
            res = verify(self)
            if not res:
                raise MatFacError(f"not a matrix factorization: {res.witness}")

    @classmethod
    def from_rows(cls, phi: Sequence[str], psi: Sequence[str], f: str,
                  names: Sequence[str] = NAMES, sign: int = 1, domain: Domain = ZZI,
                  check: bool = True) -> "MatFac":
        return cls(PolyMatrix.parse(phi, names, domain), PolyMatrix.parse(psi, names, domain),
                   parse_poly(f, names, domain), sign, check)

    @property
    def size(self) -> int:
        return self.phi.size

    @property
    def target(self) -> Poly:
        return self.f if self.sign == 1 else -self.f

    def to_domain(self, domain: Domain) -> "MatFac":
        return MatFac(self.phi.to_domain(domain), self.psi.to_domain(domain),
                      self.f.to_domain(domain), self.sign, False)

    def swap(self) -> "MatFac":
        return MatFac(self.psi, self.phi, self.f, self.sign, False)

    def direct_sum(self, other: "MatFac") -> "MatFac":
        if other.target != self.target:
            raise MatFacError("summands factor different polynomials")
        return MatFac(self.phi.direct_sum(other.phi), self.psi.direct_sum(other.psi),
                      self.f, self.sign, False)

    def rank(self) -> int:
        return det_rank(self)

    def as_dict(self, names: Sequence[str] = NAMES) -> dict:
        return {"f": self.f.to_string(names), "sign": self.sign,
                "phi": self.phi.to_strings(names), "psi": self.psi.to_strings(names)}

    @classmethod
    def from_dict(cls, data: dict, names: Sequence[str] = NAMES, domain: Domain = ZZI,
                  check: bool = True) -> "MatFac":
        phi = [" & ".join(r) for r in data["phi"]]
        psi = [" & ".join(r) for r in data["psi"]]
        return cls.from_rows(phi, psi, data["f"], names, int(data.get("sign", 1)), domain, check)


def _first_mismatch(m: PolyMatrix, target: Poly) -> Optional[Entry]:
    for i, r in enumerate(m.rows):
        for j, x in enumerate(r):
            want = target if i == j else 0
            if x != want:
                return i, j
    return None


def verify(mf: MatFac) -> VerifyResult:
    """Both products equal sign*f*Id; the witness is the first bad entry."""
    target = mf.target
    for label, prod in (("phi*psi", mf.phi @ mf.psi), ("psi*phi", mf.psi @ mf.phi)):
        bad = _first_mismatch(prod, target)
        if bad is not None:
            return VerifyResult(False, (label,) + bad)
    return VerifyResult(True)


def transpose_dual(mf: MatFac) -> MatFac:
    """(phi^T, psi^T); its cokernel is the dual module."""
    return MatFac(mf.phi.transpose(), mf.psi.transpose(), mf.f, mf.sign)


def _matrix_support(m: PolyMatrix) -> FrozenSet[int]:
    return frozenset(k for r in m.rows for x in r for k in _support(x))


def _variables(mf: MatFac) -> FrozenSet[int]:
    return _support(mf.f) | _matrix_support(mf.phi) | _matrix_support(mf.psi)


def _common_ring(mf1: MatFac, mf2: MatFac) -> None:
    if mf1.phi.nvars != mf2.phi.nvars or mf1.phi.domain != mf2.phi.domain:
        raise MatFacError("factorizations live in different rings")
    shared = _variables(mf1) & _variables(mf2)
    if shared:
        raise OverlappingVariables(f"variables {sorted(shared)} occur in both factors")


def tensor_hat(mf1: MatFac, mf2: MatFac) -> MatFac:
    """Tensor product of size 2nm, a factorization of sign1*f1 + sign2*f2."""
    _common_ring(mf1, mf2)
    n, m = mf1.size, mf2.size
    phi_f, psi_f = mf1.phi.kron_identity(m), mf1.psi.kron_identity(m)
    phi_g, psi_g = mf2.phi.kron_identity(n, left=True), mf2.psi.kron_identity(n, left=True)
    phi = PolyMatrix.block([[phi_f, phi_g], [-psi_g, psi_f]])
    psi = PolyMatrix.block([[psi_f, -phi_g], [psi_g, phi_f]])
    out = MatFac(phi, psi, mf1.target + mf2.target, 1, False)
    assert verify(out), "tensor product failed to factor f + g"
    return out


def _self_paired(m: PolyMatrix, f: Optional[Poly] = None) -> Poly:
    sq = m @ m
    target = sq[0, 0]
    if _first_mismatch(sq, target) is not None or (f is not None and target != f):
        raise MatFacError("input is not a self-paired factorization (phi, phi)")
    return target


def tensor_split(phi: PolyMatrix, psi: PolyMatrix) -> Tuple[MatFac, MatFac]:
    """(phi, phi) (x) (psi, psi) = (xi, zeta) + (zeta, xi), xi = phi(x)1 - i*1(x)psi."""
    if phi.nvars != psi.nvars:
        raise MatFacError("factorizations live in different rings")
    if isinstance(phi.domain, Integers):
        phi = phi.to_domain(ZZI)
    if isinstance(psi.domain, Integers):
        psi = psi.to_domain(phi.domain)
    if phi.domain != psi.domain:
        raise MatFacError("coefficient domains differ")
    i = _imaginary_unit(phi.domain)
    f, g = _self_paired(phi), _self_paired(psi)
    shared = _matrix_support(phi) & _matrix_support(psi)
    if shared:
        raise OverlappingVariables(f"variables {sorted(shared)} occur in both factors")
    n, m = phi.size, psi.size
    a = phi.kron_identity(m)
    b = psi.kron_identity(n, left=True).scale(i)
    xi, zeta = a - b, a + b
    total = f + g
    first = MatFac(xi, zeta, total)
    return first, first.swap()


@dataclass(frozen=True)
class MorphismCheck:
    commutes: bool
    equivalence: bool               # both maps have nonzero constant determinant
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.commutes


def _is_invertible(m: PolyMatrix) -> bool:
    """det is a nonzero constant, so m is invertible over any field not killing it."""
    d = m.det()
    return not d.is_zero() and d.total_degree() == 0


def verify_morphism(alpha: PolyMatrix, beta: PolyMatrix, mf1: MatFac, mf2: MatFac) -> MorphismCheck:
    """alpha*phi1 = phi2*beta and beta*psi1 = psi2*alpha."""
    if alpha.size != beta.size or mf1.size != mf2.size or alpha.size != mf1.size:
        raise SizeMismatch("morphism checks need equal sizes throughout")
    if alpha @ mf1.phi != mf2.phi @ beta:
        return MorphismCheck(False, False, "alpha*phi1 != phi2*beta")
    if beta @ mf1.psi != mf2.psi @ alpha:
        return MorphismCheck(False, False, "beta*psi1 != psi2*alpha")
    return MorphismCheck(True, _is_invertible(alpha) and _is_invertible(beta))


def det_rank(mf: MatFac) -> int:
    """m with det(phi) = u*f^m, u a unit: the rank of coker(phi) when f is prime."""
    d = mf.phi.det()
    if d.is_zero():
        raise NotAPowerOfF("det(phi) vanishes")
    m = 0
    while True:
        terms = d.terms
        if len(terms) == 1:
            (e, c), = terms.items()
            if not any(e) and d.domain.is_unit(c):
                return m
        q = exact_quotient(d, mf.f)
        if q is None:
            raise NotAPowerOfF(f"det(phi) = {d} * f^{m} with a non-unit cofactor")
        d, m = q, m + 1


def constant_matrix(rows: Sequence[Sequence], nvars: int = 3, domain: Domain = ZZI) -> PolyMatrix:
    return PolyMatrix(tuple(tuple(Poly.const(nvars, c, domain) for c in r) for r in rows))
