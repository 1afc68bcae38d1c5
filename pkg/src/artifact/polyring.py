"""Exact coefficient domains and sparse weighted polynomials.

A polynomial is a map from exponent tuples to nonzero coefficients of one
domain.  Three domains exist: the integers, the Gaussian integers Z[i] and
prime fields F_p.  Rationals are plain ``fractions.Fraction`` values; they
never appear as polynomial coefficients, only as results of closed formulas.

  X^2*Y - 3*i*Z   over Z[i] in variables (X, Y, Z)
      -> {(2, 1, 0): 1, (0, 0, 1): -3i}

Monomials are ordered graded-lex (total degree first, then exponent tuple,
both descending).  Every matrix the oracle builds uses this order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

Exponent = Tuple[int, ...]

UNDEFINED_ZERO = "undefined-zero"


class DomainError(ValueError):
    """Raised for coefficients that do not live in the requested domain."""


@dataclass(frozen=True)
class Gauss:
    """Gaussian integer re + im*i."""

    re: int
    im: int = 0

    def __add__(self, other: "Gauss") -> "Gauss":
        return Gauss(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Gauss") -> "Gauss":
        return Gauss(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Gauss":
        return Gauss(-self.re, -self.im)

    def __mul__(self, other: "Gauss") -> "Gauss":
        return Gauss(self.re * other.re - self.im * other.im,
                     self.re * other.im + self.im * other.re)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conj(self) -> "Gauss":
        return Gauss(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{_imag_str(abs(self.im))})"


def _imag_str(b: int) -> str:
    return "i" if b == 1 else f"{b}*i"


I = Gauss(0, 1)


class Domain:
    """Coefficient arithmetic.  Subclasses fix the element representation."""

    name = "domain"

    def coerce(self, c) -> object:
        raise NotImplementedError

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return not a

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def __repr__(self) -> str:
        return self.name


class Integers(Domain):
    name = "ZZ"

    def coerce(self, c):
        if isinstance(c, Gauss):
            if c.im:
                raise DomainError(f"{c} is not an integer")
            return c.re
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise DomainError(f"{c} is not an integer")
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            raise DomainError(f"cannot coerce {c!r} to an integer")
        return c

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Integers)

    def __hash__(self) -> int:
        return hash("ZZ")


class GaussianIntegers(Domain):
    name = "ZZ[i]"

    def coerce(self, c):
        if isinstance(c, Gauss):
            return c
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise DomainError(f"{c} is not a Gaussian integer")
            return Gauss(c.numerator)
        if isinstance(c, bool) or not isinstance(c, int):
            raise DomainError(f"cannot coerce {c!r} to a Gaussian integer")
        return Gauss(c)

    def is_unit(self, a) -> bool:
        return a.norm() == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, GaussianIntegers)

    def __hash__(self) -> int:
        return hash("ZZ[i]")


class PrimeField(Domain):
    """F_p with canonical representatives in [0, p)."""

    def __init__(self, p: int, sqrt_minus_one: Optional[int] = None):
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self._i = sqrt_minus_one
        if sqrt_minus_one is not None and (sqrt_minus_one * sqrt_minus_one + 1) % p:
            raise DomainError(f"{sqrt_minus_one}^2 != -1 mod {p}")

    def sqrt_minus_one(self) -> int:
        if self._i is not None:
            return self._i
        if self.p == 2:
            return 1
        if self.p % 4 != 1:
            raise DomainError(f"GF({self.p}) contains no square root of -1")
        # smallest root, so the choice is reproducible
        for x in range(2, self.p):
            if (x * x + 1) % self.p == 0:
                return x
        raise AssertionError("unreachable")

    def coerce(self, c):
        p = self.p
        if isinstance(c, Gauss):
            if not c.im:
                return c.re % p
            return (c.re + c.im * self.sqrt_minus_one()) % p
        if isinstance(c, Fraction):
            return c.numerator * self.inv(c.denominator % p) % p
        if isinstance(c, bool) or not isinstance(c, int):
            raise DomainError(f"cannot coerce {c!r} to GF({p})")
        return c % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if not a:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        # extended Euclid
        r0, r1, s0, s1 = self.p, a, 0, 1
        while r1:
            k = r0 // r1
            r0, r1 = r1, r0 - k * r1
            s0, s1 = s1, s0 - k * s1
        return s0 % self.p

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p and other._i == self._i

    def __hash__(self) -> int:
        return hash(("GF", self.p, self._i))


ZZ = Integers()
ZZI = GaussianIntegers()


def graded_lex_key(e: Exponent) -> Tuple[int, Exponent]:
    return (sum(e), e)


class Poly:
    """Sparse polynomial over a coefficient domain.  Treat as immutable."""

    __slots__ = ("nvars", "domain", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Dict[Exponent, object]] = None,
                 domain: Domain = ZZ):
        self.nvars = nvars
        self.domain = domain
        clean: Dict[Exponent, object] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            c = domain.coerce(c)
            if not domain.is_zero(c):
                clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, object], domain: Domain) -> "Poly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.domain = domain
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int, domain: Domain = ZZ) -> "Poly":
        return cls._raw(nvars, {}, domain)

    @classmethod
    def const(cls, nvars: int, c, domain: Domain = ZZ) -> "Poly":
        return cls(nvars, {(0,) * nvars: c}, domain)

    @classmethod
    def var(cls, nvars: int, idx: int, domain: Domain = ZZ) -> "Poly":
        e = [0] * nvars
        e[idx] = 1
        return cls(nvars, {tuple(e): 1}, domain)

    @classmethod
    def monomial(cls, e: Sequence[int], c=1, domain: Domain = ZZ) -> "Poly":
        return cls(len(e), {tuple(e): c}, domain)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, object]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Exponent, object]]:
        """Terms in graded-lex order, largest first."""
        return sorted(self._terms.items(), key=lambda kv: graded_lex_key(kv[0]), reverse=True)

    def monomials(self) -> List[Exponent]:
        return [e for e, _ in self.items()]

    def coeff(self, e: Sequence[int]):
        return self._terms.get(tuple(e), self.domain.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if other.nvars != self.nvars:
            raise ValueError("polynomials live in rings with different variable counts")
        if other.domain != self.domain:
            raise DomainError(f"domain mismatch: {self.domain} vs {other.domain}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(self.nvars, other, self.domain)

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        dom = self.domain
        out = dict(self._terms)
        for e, c in other._terms.items():
            if e in out:
                s = dom.add(out[e], c)
                if dom.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return Poly._raw(self.nvars, out, dom)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        dom = self.domain
        return Poly._raw(self.nvars, {e: dom.neg(c) for e, c in self._terms.items()}, dom)

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._lift(other)
        dom = self.domain
        out: Dict[Exponent, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = dom.mul(c1, c2)
                if e in out:
                    out[e] = dom.add(out[e], c)
                else:
                    out[e] = c
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if not dom.is_zero(c)}, dom)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(self.nvars, 1, self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, m: Exponent, c=None) -> "Poly":
        dom = self.domain
        if c is None:
            terms = {tuple(a + b for a, b in zip(e, m)): v for e, v in self._terms.items()}
        else:
            c = dom.coerce(c)
            terms = {tuple(a + b for a, b in zip(e, m)): dom.mul(v, c) for e, v in self._terms.items()}
            terms = {e: v for e, v in terms.items() if not dom.is_zero(v)}
        return Poly._raw(self.nvars, terms, dom)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return (self.nvars == other.nvars and self.domain == other.domain
                    and self._terms == other._terms)
        if isinstance(other, (int, Gauss)):
            return self == Poly.const(self.nvars, other, self.domain)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.domain, frozenset(self._terms.items())))
        return self._hash

    # -- conversions -------------------------------------------------------

    def to_domain(self, domain: Domain) -> "Poly":
        """Map coefficients into another domain (Z -> Z[i] -> F_p)."""
        if domain == self.domain:
            return self
        return Poly(self.nvars, self._terms, domain)

    def substitute_powers(self, exponents: Sequence[int]) -> "Poly":
        return substitute_powers(self, exponents)

    def permute_vars(self, perm: Sequence[int]) -> "Poly":
        """New variable j is old variable perm[j]."""
        terms = {tuple(e[perm[j]] for j in range(self.nvars)): c for e, c in self._terms.items()}
        return Poly._raw(self.nvars, terms, self.domain)

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or default_names(self.nvars)
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            cstr, negative = _coeff_parts(self.domain, c)
            if mono:
                body = mono if cstr == "1" else f"{cstr}*{mono}"
            else:
                body = cstr
            out.append(("-" if negative else "+", body))
        text = out[0][1] if out[0][0] == "+" else "-" + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Poly({self.to_string()!r}, {self.domain})"


def _coeff_parts(domain: Domain, c) -> Tuple[str, bool]:
    """Absolute-value string of a coefficient and whether it prints negative."""
    if isinstance(c, Gauss):
        if not c.im:
            return str(abs(c.re)), c.re < 0
        if not c.re:
            return _imag_str(abs(c.im)), c.im < 0
        return str(c), False
    if isinstance(domain, PrimeField):
        return str(c), False
    return str(abs(c)), c < 0


def default_names(n: int) -> Tuple[str, ...]:
    if n <= 3:
        return ("X", "Y", "Z")[:n]
    if n == 4:
        return ("X", "Y", "Z", "W")
    return tuple(f"x{k}" for k in range(n))


# -- weighted rings --------------------------------------------------------

@dataclass(frozen=True)
class WeightedRingSpec:
    """Polynomial ring with positive integer weights and an optional relation."""

    names: Tuple[str, ...]
    weights: Tuple[int, ...]
    relation: Optional[Poly] = None

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights differ in length")
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be >= 1, got {self.weights}")
        if self.relation is not None:
            if self.relation.nvars != len(self.weights):
                raise ValueError("relation has the wrong number of variables")
            deg = weighted_degree(self.relation, self)
            if deg is None:
                raise ValueError("relation is not homogeneous")
            if deg == UNDEFINED_ZERO:
                raise ValueError("relation is zero")

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def rel_degree(self) -> Optional[int]:
        if self.relation is None:
            return None
        return weighted_degree(self.relation, self)

    def without_relation(self) -> "WeightedRingSpec":
        return WeightedRingSpec(self.names, self.weights)

    def parse(self, text: str, domain: Optional[Domain] = None) -> Poly:
        return parse_poly(text, self.names, domain)

    @classmethod
    def standard(cls, n: int = 3, relation: Optional[Poly] = None) -> "WeightedRingSpec":
        return cls(default_names(n), (1,) * n, relation)


def _weights_of(spec: Union[WeightedRingSpec, Sequence[int]]) -> Tuple[int, ...]:
    if isinstance(spec, WeightedRingSpec):
        return spec.weights
    return tuple(spec)


def monomial_degree(e: Exponent, weights: Sequence[int]) -> int:
    return sum(a * w for a, w in zip(e, weights))


def weighted_degree(p: Poly, spec: Union[WeightedRingSpec, Sequence[int]]):
    """Common weighted degree, None if inhomogeneous, UNDEFINED_ZERO for 0."""
    weights = _weights_of(spec)
    if p.nvars != len(weights):
        raise ValueError(f"polynomial has {p.nvars} variables, ring has {len(weights)}")
    if p.is_zero():
        return UNDEFINED_ZERO
    degs = {monomial_degree(e, weights) for e in p._terms}
    return degs.pop() if len(degs) == 1 else None


@lru_cache(maxsize=4096)
def _basis(weights: Tuple[int, ...], d: int) -> Tuple[Exponent, ...]:
    if not weights:
        return ((),) if d == 0 else ()
    w, rest = weights[0], weights[1:]
    out = []
    for a in range(d // w, -1, -1):
        for tail in _basis(rest, d - a * w):
            out.append((a,) + tail)
    return tuple(out)


def graded_piece_basis(spec: Union[WeightedRingSpec, Sequence[int]], d: int) -> List[Exponent]:
    """All exponent vectors of weighted degree d, lex-descending."""
    if d < 0:
        return []
    return list(_basis(_weights_of(spec), d))


def substitute_powers(p: Poly, exponents: Sequence[int]) -> Poly:
    """Replace each variable v by v^(exponents[v])."""
    if len(exponents) != p.nvars:
        raise ValueError("one exponent per variable is required")
    if any(k < 1 for k in exponents):
        raise ValueError("substitution exponents must be positive")
    terms = {tuple(a * k for a, k in zip(e, exponents)): c for e, c in p._terms.items()}
    return Poly._raw(p.nvars, terms, p.domain)


def divides(m: Exponent, e: Exponent) -> bool:
    return all(a <= b for a, b in zip(m, e))


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*^()/]))")


def _tokenize(text: str) -> List[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character {text[pos]!r} in {text!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.toks = _tokenize(text)
        self.pos = 0
        self.names = list(names)
        self.n = len(names)
        if "i" in self.names:
            raise ValueError("'i' is reserved for the imaginary unit")

    def peek(self) -> Optional[str]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial")
        self.pos += 1
        return tok

    def parse(self) -> Poly:
        if not self.toks:
            raise ValueError("empty polynomial")
        p = self.expr()
        if self.peek() is not None:
            raise ValueError(f"unexpected token {self.peek()!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek() == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> Poly:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise ValueError(f"exponent must be a natural number, got {tok!r}")
            return base ** int(tok)
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok.isdigit():
            return Poly.const(self.n, int(tok), ZZI)
        if tok == "i":
            return Poly.const(self.n, I, ZZI)
        if tok == "(":
            p = self.expr()
            if self.take() != ")":
                raise ValueError("missing ')'")
            return p
        if tok in self.names:
            return Poly.var(self.n, self.names.index(tok), ZZI)
        raise ValueError(f"unknown symbol {tok!r}; variables are {self.names}")


def parse_poly(text: str, names: Sequence[str], domain: Optional[Domain] = None) -> Poly:
    """Parse ``3*X^2*Y - i*Z`` style text.

    Without an explicit domain the result is over ZZ when no ``i`` survives,
    otherwise over ZZ[i].
    """
    p = _Parser(text, names).parse()
    if domain is None:
        if all(not c.im for c in p._terms.values()):
            return p.to_domain(ZZ)
        return p
    return p.to_domain(domain)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[-+]?\d+(/\d+)?", text):
        raise ValueError(f"not a rational number: {text!r}")
    return Fraction(text)


def format_rational(q: Union[int, Fraction]) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def iter_monomials_upto(weights: Sequence[int], d: int) -> Iterator[Exponent]:
    for k in range(d + 1):
        yield from _basis(tuple(weights), k)


def exponent_box(bounds: Iterable[int]) -> Iterator[Exponent]:
    return product(*(range(b) for b in bounds))
