"""Fixture checks run by `artifact selftest`.

Every check pairs a closed form with a second route (the brute-force oracle,
a published table or an identity) and reports pass/fail with a short detail.
The quick tier stays well under two minutes; the full tier adds the large
oracle runs such as the E8 colength at q = 49.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from . import ade, catalog, delta, fermat, hkm, matfac, oracle, series, series_tables
from .polyring import PrimeField, WeightedRingSpec, parse_poly

Outcome = Tuple[bool, str]


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], Outcome]
    full_only: bool = False


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


def _mismatches(pairs) -> Outcome:
    bad = [(label, got, want) for label, got, want in pairs if got != want]
    if bad:
        return False, "; ".join(f"{l}: got {g}, want {w}" for l, g, w in bad[:3])
    return True, "all match"


# -- delta -----------------------------------------------------------------------------

DELTA_FIXTURES = [
    (3, (Fraction(1, 7),) * 3, Fraction(1, 63)),
    (5, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)), Fraction(0)),
    (3, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)), Fraction(1, 12)),
    (5, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)), Fraction(1, 30)),
] + [(p, (Fraction(1), Fraction(1, 3), Fraction(1, 4)), Fraction(5, 12)) for p in (2, 3, 5, 7)]


def check_delta_fixtures() -> Outcome:
    return _mismatches((f"delta({p},{t})", delta.delta(p, t), want) for p, t, want in DELTA_FIXTURES)


def gap_triple(p: int, a: Tuple[int, int, int]) -> int:
    """Oracle syzygy gap of (X^a1, Y^a2, (X+Y)^a3) over F_p."""
    spec = WeightedRingSpec(("X", "Y"), (1, 1))
    dom = PrimeField(p)
    gens = [parse_poly(f"X^{a[0]}", spec.names, dom), parse_poly(f"Y^{a[1]}", spec.names, dom),
            parse_poly("X+Y", spec.names, dom) ** a[2]]
    return oracle.syz_gap(spec, gens, p)


def random_gap_cases(count: int, seed: int = 20261015) -> List[Tuple[int, Tuple[int, int, int]]]:
    rng = random.Random(seed)
    return [(rng.choice((2, 3, 5, 7, 11)), tuple(rng.randint(1, 24) for _ in range(3)))
            for _ in range(count)]


def check_delta_gap(count: int) -> Outcome:
    return _mismatches((f"p={p} a={a}", gap_triple(p, a), delta.delta(p, a))
                       for p, a in random_gap_cases(count))


# -- ADE -------------------------------------------------------------------------------

ADE_QUICK = [("A(1)", 3, 1, 13), ("D(4)", 3, 1, 16), ("E6", 5, 1, 48), ("E6", 3, 1, 18),
             ("E7", 5, 1, 48), ("E7", 7, 1, 96), ("E8", 7, 1, 96)]
ADE_FULL = [("E8", 7, 2, 4781)]


def ade_oracle(kind: str, p: int, e: int) -> int:
    return oracle.frobenius_colength(ade.ADEKind.parse(kind).presentation(), p, p ** e)


def check_ade(points) -> Outcome:
    pairs = []
    for kind, p, e, want in points:
        pairs.append((f"formula {kind},{p},{e}", ade.hkf(kind, p, e), want))
        pairs.append((f"oracle {kind},{p},{e}", ade_oracle(kind, p, e), want))
    return _mismatches(pairs)


def check_pairing() -> Outcome:
    return _mismatches((f"{k},{p},{e}", ade.hkf(k, p, e) + ade.fsig(k, p, e), 2 * p ** (2 * e))
                       for k, p, e, _ in ADE_QUICK + ADE_FULL)


# -- Fermat ------------------------------------------------------------------------------

FERMAT_73 = (1, 27, 419, 3843)
PERIODS = [((3, 7), (0, 1)), ((4, 7), (0, 1)), ((5, 11), (0, 1)), ((5, 3), (0, 2)),
           ((5, 7), (0, 2)), ((14, 37), (0, 3)), ((3, 2), (1, 2)), ((6, 5), None), ((7, 3), None)]


def check_fermat_73(oracle_upto: int) -> Outcome:
    spec = fermat.fermat_spec(7)
    pairs = [(f"formula e={e}", fermat.hkf_fermat(7, 3, e).value, want)
             for e, want in enumerate(FERMAT_73)]
    pairs += [(f"oracle e={e}", oracle.frobenius_colength(spec, 3, 3 ** e), FERMAT_73[e])
              for e in range(oracle_upto + 1)]
    return _mismatches(pairs)


def check_periods() -> Outcome:
    return _mismatches((f"period{np}", fermat.period(*np), want) for np, want in PERIODS)


def check_fermat_oracle() -> Outcome:
    pairs = []
    for n in range(2, 8):
        spec = fermat.fermat_spec(n)
        for p in (3, 5, 7):
            if n % p == 0:
                continue
            for e in range(3):
                r = fermat.hkf_fermat(n, p, e)
                pairs.append((f"({n},{p},{e})", r.value, oracle.frobenius_colength(spec, p, p ** e)))
    return _mismatches(pairs)


# -- series ------------------------------------------------------------------------------

def check_series() -> Outcome:
    bad, errata = [], []
    for fx in series_tables.series_fixtures():
        h = fx.compute()
        if h != fx.corrected():
            bad.append(fx.name)
        elif fx.erratum:
            errata.append(fx.name)
        if fx.rank is not None and series.hs_numerator_at_one(h) != 2 * fx.rank:
            bad.append(fx.name + " (rank)")
        if any(c < 0 for c in series.hs_expand(h, 60)):
            bad.append(fx.name + " (negative coefficient)")
    if bad:
        return False, "mismatch: " + ", ".join(bad[:4])
    return True, "all match" + (f"; degree errata in {', '.join(errata)}" if errata else "")


# -- matrix factorizations -------------------------------------------------------------------

CATALOG_KINDS = ["A(1)", "A(2)", "A(3)", "D4", "D5", "D6", "D7", "E6", "E7", "E8",
                 "Ainf", "Dinf", "Fermat(3)", "Fermat(5)"]


def check_catalogs() -> Outcome:
    bad = []
    for kind in CATALOG_KINDS:
        for entry in catalog.catalog(kind):
            if not matfac.verify(entry.matfac):
                bad.append(f"{kind}:{entry.index}")
            elif entry.rank is not None and matfac.det_rank(entry.matfac) != entry.rank:
                bad.append(f"{kind}:{entry.index} (rank)")
    alpha, beta, src, dst = catalog.d4_split_example()
    check = matfac.verify_morphism(alpha, beta, src, dst)
    if not (check.commutes and check.equivalence):
        bad.append("d4split")
    return (not bad), ("all verify" if not bad else ", ".join(bad[:4]))


# -- multiplicities -------------------------------------------------------------------------

def hkm_fixtures() -> List[Tuple[str, Fraction, Fraction]]:
    fermat7 = hkm.classify_trinomial([(7, 0, 0), (0, 7, 0), (0, 0, 7)])
    return [
        ("Fermat 7, p=3", hkm.hkm_standard(fermat7, 3, (1, 1, 1)), Fraction(427, 81)),
        ("E8 weights, p=7", hkm.hkm_diagonal(2, 3, 5, 7), 2 - Fraction(1, 120)),
        ("(2,3,4), p=5", hkm.hkm_diagonal(2, 3, 4, 5), 2 - Fraction(1, 24)),
        ("(2,3,4), p=3", hkm.hkm_diagonal(2, 3, 4, 3), Fraction(2)),
        ("T(3,3,inf)", hkm.hkm_weighted(hkm.tpq_weights(3, 3), [(3, 0, 0), (0, 3, 0), (1, 1, 1)], 5),
         Fraction(7, 3)),
        ("binomial d=2 (1,1)", hkm.hkm_binomial(2, (1, 1)), Fraction(3, 2)),
    ]


def check_hkm() -> Outcome:
    return _mismatches(hkm_fixtures())


def check_families() -> Outcome:
    fv = hkm.FamilySpec("FV", (5, 0, 0, 2, 3))
    pairs = [(f"FV L={L}", hkm.family_hkm(fv, 7, L), Fraction(19, 5)) for L in (20, 40, 80)]
    pairs.append(("FV limit", hkm.family_limit(fv), Fraction(19, 5)))
    for p in (3, 5, 7):
        values = [hkm.hkm_diagonal(L, 2, 3, p) for L in range(2, 41)]
        rising = all(a <= b <= 2 for a, b in zip(values, values[1:]))
        pairs.append((f"U^L+V^2+W^3 rising to 2, p={p}", (rising, values[-1]), (True, 2)))
    return _mismatches(pairs)


CHECKS: List[Check] = [
    Check("delta fixtures", check_delta_fixtures),
    Check("delta = syzygy gap (20 cases)", lambda: check_delta_gap(20)),
    Check("delta = syzygy gap (200 cases)", lambda: check_delta_gap(200), full_only=True),
    Check("ADE hkf quick set", lambda: check_ade(ADE_QUICK)),
    Check("ADE hkf E8 q=49", lambda: check_ade(ADE_FULL), full_only=True),
    Check("Gorenstein pairing", check_pairing),
    Check("Fermat n=7 p=3", lambda: check_fermat_73(2)),
    Check("Fermat hkf vs oracle, n <= 7", check_fermat_oracle, full_only=True),
    Check("Hilbert series tables", check_series),
    Check("matrix factorization catalogs", check_catalogs),
    Check("HKM fixtures", check_hkm),
    Check("Frobenius periods", check_periods),
    Check("family limits", check_families),
]


def run(full: bool = False, only: Optional[str] = None) -> List[CheckResult]:
    out = []
    for check in CHECKS:
        if check.full_only and not full:
            continue
        if only and only.lower() not in check.name.lower():
            continue
        start = time.perf_counter()
        try:
            ok, detail = check.run()
        except Exception as exc:          # a crash is a failed check, reported by name
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(check.name, ok, detail, time.perf_counter() - start))
    return out
