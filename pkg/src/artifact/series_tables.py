"""Published Hilbert series of the indecomposable syzygy modules.

Each entry records the ring, the ideal generators, the expected series and
the rank, plus the route that recomputes it: the quotient-remainder
recursion for monomial data, or the direct formula with the quotient series
supplied by inspection when the quotient is not artinian.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .polyring import GaussianIntegers, WeightedRingSpec, parse_poly
from .series import HilbertSeries, hs_monomial_syz, hs_syz_direct

RECURSION = "recursion"
DIRECT = "direct"
NAMES = ("X", "Y", "Z")


@dataclass(frozen=True)
class SeriesFixture:
    family: str
    label: str
    weights: Tuple[int, int, int]
    relation: str
    gens: Tuple[str, ...]
    num: Tuple[Tuple[int, int], ...]
    den: Tuple[int, ...]
    rank: Optional[int]
    route: str
    quotient: Optional[HilbertSeries] = None
    p: Optional[int] = None           # characteristic the series depends on, if any
    shift: int = 0                    # expected = t^shift * num / den
    tags: Tuple[str, ...] = field(default=())
    # published = t^erratum * true series, where the oracle contradicts the table
    erratum: Optional[int] = None

    @property
    def name(self) -> str:
        return f"{self.family}:{self.label}"

    def spec(self) -> WeightedRingSpec:
        return WeightedRingSpec(NAMES, self.weights, parse_poly(self.relation, NAMES))

    def expected(self) -> HilbertSeries:
        """The series as published."""
        return HilbertSeries(self.num, self.den).shift(self.shift)

    def corrected(self) -> HilbertSeries:
        """The published series with a known degree erratum undone."""
        return self.expected().shift(-(self.erratum or 0))

    def compute(self) -> HilbertSeries:
        spec = self.spec()
        if self.route == RECURSION:
            if self.p is None:
                return hs_monomial_syz(spec, self.gens)
            return hs_monomial_syz(spec, self.gens, p=self.p, check_p=None)
        return hs_syz_direct(spec, self.gens, self.quotient)

    def needs_gauss(self) -> bool:
        return any(isinstance(parse_poly(g, NAMES).domain, GaussianIntegers) for g in self.gens)


def _num(*exps: int) -> Tuple[Tuple[int, int], ...]:
    out: Dict[int, int] = {}
    for e in exps:
        out[e] = out.get(e, 0) + 1
    return tuple(sorted(out.items()))


def _q(num: Dict[int, int], den: Tuple[int, ...]) -> HilbertSeries:
    return HilbertSeries.make(num, den)


# -- ADE --------------------------------------------------------------------

def a_n_fixtures(n: int) -> List[SeriesFixture]:
    w, rel, den = (2, n + 1, n + 1), f"X^{n + 1}-Y*Z", (n + 1, 2)
    out = []
    for i in range(1, n + 1):
        out.append(SeriesFixture(f"A{n}", f"M{i}", w, rel, (f"X^{i}", "Z"),
                                 _num(2 * i + n + 1, 2 * n + 2), den, 1, RECURSION))
    # the splitting into Syz(X^j, Y) + Syz(X^j, Z) holds only up to j = n + 1
    for j in range(1, n + 2):
        exps = (2 * n + 2, 2 * j + n + 1) if j <= n else (2 * j, 2 * j + n + 1)
        out.append(SeriesFixture(f"A{n}", f"Syz(X^{j},Y,Z)", w, rel, (f"X^{j}", "Y", "Z"),
                                 _num(*exps, *exps), den, 2, RECURSION))
    return out


def d_n_fixtures(n: int) -> List[SeriesFixture]:
    w, rel, den = (n - 1, 2, n - 2), f"X^2+Y^{n - 1}+Y*Z^2", (n - 2, 2)
    out = [SeriesFixture(f"D{n}", "M1", w, rel, ("X", "Y"),
                         _num(n + 1, 2 * n - 2), den, 1, RECURSION)]
    for j in range(2, n - 1):
        if j % 2 == 0:
            gens = ("X", f"Y^{j // 2}", "Z")
            exps = (n + j - 2, n + j - 1, 2 * n - 3, 2 * n - 2)
        else:
            gens = ("X", f"Y^{(j + 1) // 2}", "Y*Z")
            exps = (n + j - 1, n + j, 2 * n - 2, 2 * n - 1)
        out.append(SeriesFixture(f"D{n}", f"M{j}", w, rel, gens, _num(*exps), den, 2, RECURSION))
    # R modulo these ideals is k[Y]
    k_y = _q({0: 1}, (2,))
    if n % 2 == 0:
        pairs = [("X", f"Z-i*Y^{(n - 2) // 2}"), ("X", f"Z+i*Y^{(n - 2) // 2}")]
    else:
        pairs = [("Z", f"X+i*Y^{(n - 1) // 2}"), ("Z", f"X-i*Y^{(n - 1) // 2}")]
    for label, gens in zip((f"M{n - 1}", f"M{n}"), pairs):
        out.append(SeriesFixture(f"D{n}", label, w, rel, gens, _num(2 * n - 3, 2 * n - 2), den,
                                 1, DIRECT, k_y))
    return out


def e6_fixtures() -> List[SeriesFixture]:
    w, rel, den = (6, 4, 3), "X^2+Y^3+Z^4", (4, 3)
    k_z = _q({0: 1}, (3,))
    k_z_plus_y = _q({0: 1, 4: 1, 7: -1}, (3,))    # k[Z] + Y*k
    rows = [
        ("M1", ("X", "Y", "Z"), (7, 9, 10, 12), 2, None),
        ("M2", ("X", "Y^2", "Y*Z", "Z^2"), (10, 11, 12, 12, 13, 14), 3, None),
        ("M3", ("i*X+Z^2", "Y^2", "Y*Z"), (11, 12, 13, 14), 2, k_z_plus_y),
        ("M4", ("-i*X+Z^2", "Y^2", "Y*Z"), (11, 12, 13, 14), 2, k_z_plus_y),
        ("M5", ("-i*X+Z^2", "Y"), (10, 12), 1, k_z),
        ("M6", ("i*X+Z^2", "Y"), (10, 12), 1, k_z),
    ]
    return [SeriesFixture("E6", label, w, rel, gens, _num(*exps), den, rank,
                          RECURSION if quot is None else DIRECT, quot)
            for label, gens, exps, rank, quot in rows]


def e7_fixtures() -> List[SeriesFixture]:
    w, rel, den = (9, 6, 4), "X^2+Y^3+Y*Z^3", (6, 4)
    rows = [
        ("M1", ("X", "Y", "Z"), (10, 13, 15, 18), 2),
        ("M2", ("X", "Y^2", "Y*Z", "Z^2"), (14, 16, 17, 18, 19, 21), 3),
        ("M3", ("X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^3"), (18, 19, 20, 21, 21, 22, 23, 24), 4),
        ("M4", ("X", "Y^2", "Y*Z"), (16, 18, 19, 21), 2),
        ("M5", ("X*Y", "X*Z", "Y^2", "Y*Z^2"), (19, 20, 21, 22, 23, 24), 3),
        ("M6", ("X", "Y", "Z^2"), (14, 15, 17, 18), 2),
        ("M7", ("X", "Y"), (15, 18), 1),
    ]
    return [SeriesFixture("E7", label, w, rel, gens, _num(*exps), den, rank, RECURSION)
            for label, gens, exps, rank in rows]


def e8_fixtures() -> List[SeriesFixture]:
    w, rel, den = (15, 10, 6), "X^2+Y^3+Z^5", (10, 6)
    rows = [
        ("M1", ("X", "Y", "Z"), (16, 21, 25, 30), 2),
        ("M2", ("X", "Y^2", "Y*Z", "Z^2"), (27, 31, 32, 35, 36, 40), 3),
        ("M3", ("X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^3"), (28, 31, 32, 33, 35, 36, 37, 40), 4),
        ("M4", ("X*Y", "X*Z^2", "Y^3", "Y^2*Z", "Y*Z^3", "Z^4"),
         (34, 36, 37, 38, 39, 40, 41, 42, 43, 45), 5),
        ("M5", ("X*Y^2", "X*Y*Z^2", "X*Z^4", "Y^4", "Y^3*Z", "Y^2*Z^3", "Z^5"),
         (46, 47, 48, 49, 50, 51, 51, 52, 53, 54, 55, 56), 6),
        ("M6", ("X", "Y^2", "Y*Z", "Z^3"), (26, 28, 30, 31, 33, 35), 3),
        ("M7", ("X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^4"), (31, 32, 34, 35, 36, 37, 39, 40), 4),
        ("M8", ("X", "Y", "Z^2"), (22, 25, 27, 30), 2),
    ]
    errata = {"M2": 5, "M5": 1}
    return [SeriesFixture("E8", label, w, rel, gens, _num(*exps), den, rank, RECURSION,
                          erratum=errata.get(label))
            for label, gens, exps, rank in rows]


# -- the non-isolated rings A_infinity and D_infinity -------------------------

def a_inf_fixtures(nmax: int = 4, qs: Tuple[int, ...] = (2, 3, 4, 5)) -> List[SeriesFixture]:
    w, rel, den = (1, 1, 1), "X*Y", (1, 1)
    # the normalization components have no well-defined rank
    out = [
        SeriesFixture("Ainf", "Syz(X)", w, rel, ("X",), _num(2), den, None, DIRECT,
                      _q({0: 1}, (1, 1))),
        SeriesFixture("Ainf", "Syz(Y)", w, rel, ("Y",), _num(2), den, None, DIRECT,
                      _q({0: 1}, (1, 1))),
    ]
    for n in range(1, nmax + 1):
        quot = _q({0: 1, n: -1}, (1, 1))             # k[X, Z]/(Z^n)
        for gens in (("Y", f"Z^{n}"), ("X", f"-Z^{n}")):
            out.append(SeriesFixture("Ainf", f"Syz({gens[0]},Z^{n})", w, rel, gens,
                                     _num(2, n + 1), den, 1, DIRECT, quot))
    for q in qs:
        # k[X,Y,Z]/(X^q, Z^q, XY) = M - t^2 * M/X^(q-1) M with M = k[X,Y,Z]/(X^q, Z^q)
        m = HilbertSeries.make({0: 1, q: -2, 2 * q: 1}, (1, 1, 1))
        m_x = HilbertSeries.make({2: 1, q + 1: -1, q + 2: -1, 2 * q + 1: 1}, (1, 1, 1))
        out.append(SeriesFixture("Ainf", f"Syz(X^{q},Z^{q})", w, rel, (f"X^{q}", f"Z^{q}"),
                                 _num(q + 1, 2 * q), den, 1, DIRECT, (m - m_x).canonical(),
                                 tags=("frobenius",)))
    return out


def d_inf_fixtures(nmax: int = 4, qs: Tuple[int, ...] = (3, 5, 7)) -> List[SeriesFixture]:
    w, rel, den = (2, 2, 3), "X^2*Y-Z^2", (2, 2)
    out = [
        SeriesFixture("Dinf", "Syz(X,Z)", w, rel, ("X", "Z"), _num(5, 6), den, 1, RECURSION),
        SeriesFixture("Dinf", "Syz(Z,Y)", w, rel, ("Z", "Y"), _num(5, 6), den, 1, RECURSION),
    ]
    for n in range(1, nmax + 1):
        out.append(SeriesFixture("Dinf", f"Syz(Y^{n + 1},XY,Z)", w, rel,
                                 (f"Y^{n + 1}", "X*Y", "Z"),
                                 _num(6, 7, 2 * n + 4, 2 * n + 5), den, 2, RECURSION))
        out.append(SeriesFixture("Dinf", f"Syz(Y^{n},Z,X)", w, rel, (f"Y^{n}", "Z", "X"),
                                 _num(5, 6, 2 * n + 2, 2 * n + 3), den, 2, RECURSION))
    for q in qs:
        out.append(SeriesFixture("Dinf", f"Syz(X^{q},Y^{q},Z^{q})", w, rel,
                                 (f"X^{q}", f"Y^{q}", f"Z^{q}"),
                                 _num(5, 6, q + 3, q + 4), den, 2, RECURSION, p=q,
                                 shift=3 * q - 3, tags=("frobenius",)))
    return out


def ring_fixtures() -> List[Tuple[str, WeightedRingSpec, HilbertSeries]]:
    """Free-module series of each ring, as published."""
    rows = [
        ("A1", (2, 2, 2), "X^2-Y*Z", {0: 1, 2: 1}, (2, 2)),
        ("A2", (2, 3, 3), "X^3-Y*Z", {0: 1, 3: 1}, (3, 2)),
        ("A3", (2, 4, 4), "X^4-Y*Z", {0: 1, 4: 1}, (4, 2)),
        ("D4", (3, 2, 2), "X^2+Y^3+Y*Z^2", {0: 1, 3: 1}, (2, 2)),
        ("D5", (4, 2, 3), "X^2+Y^4+Y*Z^2", {0: 1, 4: 1}, (3, 2)),
        ("E6", (6, 4, 3), "X^2+Y^3+Z^4", {0: 1, 6: 1}, (4, 3)),
        ("E7", (9, 6, 4), "X^2+Y^3+Y*Z^3", {0: 1, 9: 1}, (6, 4)),
        ("E8", (15, 10, 6), "X^2+Y^3+Z^5", {0: 1, 15: 1}, (10, 6)),
        ("Ainf", (1, 1, 1), "X*Y", {0: 1, 1: 1}, (1, 1)),
        ("Dinf", (2, 2, 3), "X^2*Y-Z^2", {0: 1, 3: 1}, (2, 2)),
    ]
    return [(name, WeightedRingSpec(NAMES, w, parse_poly(rel, NAMES)), _q(num, den))
            for name, w, rel, num, den in rows]


def series_fixtures() -> List[SeriesFixture]:
    out: List[SeriesFixture] = []
    for n in (1, 2, 3):
        out += a_n_fixtures(n)
    for n in (4, 5):
        out += d_n_fixtures(n)
    out += e6_fixtures() + e7_fixtures() + e8_fixtures()
    out += a_inf_fixtures() + d_inf_fixtures()
    return out


def fixture_by_name(name: str) -> SeriesFixture:
    for f in series_fixtures():
        if f.name == name:
            return f
    raise KeyError(name)
