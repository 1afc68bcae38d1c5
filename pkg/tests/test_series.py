"""Hilbert series: the recursion, the direct formula and the published tables."""

from __future__ import annotations

import random
from collections import Counter

import pytest

from artifact import oracle, series, series_tables
from artifact.polyring import WeightedRingSpec, parse_poly
from artifact.series import HilbertSeries, SeriesError

FIXTURES = series_tables.series_fixtures()
RINGS = {name: spec for name, spec, _ in series_tables.ring_fixtures()}


def _series(exps, den):
    return HilbertSeries.make(Counter(exps), den)


def _ids(fixtures):
    return [fx.name for fx in fixtures]


def _oracle_primes(fx):
    if fx.p is not None:
        return (fx.p,)
    return (5, 13) if fx.needs_gauss() else (5, 7)


# -- the rational representation ---------------------------------------------------

def test_expand_simple_quotient():
    h = HilbertSeries.make({0: 1, 1: 1}, (1,))
    assert series.hs_expand(h, 3) == [1, 2, 2, 2]


def test_canonical_cancels_common_factors():
    h = HilbertSeries.make({0: 1, 3: -1}, (3, 2))
    assert h.canonical() == HilbertSeries.make({0: 1}, (2,))
    assert h.canonical().den == (2,)


def test_expand_rejects_negative_exponents():
    with pytest.raises(SeriesError):
        series.hs_expand(HilbertSeries.monomial(-1), 3)


def test_shift_detection():
    h = series_tables.fixture_by_name("E6:M1").compute()
    assert series.hs_equal_up_to_shift(h, h.shift(3)) == 3
    assert series.hs_equal_up_to_shift(h.shift(3), h) == -3


def test_e7_classes_are_not_shifts_of_each_other():
    m1 = series_tables.fixture_by_name("E7:M1").compute()
    m6 = series_tables.fixture_by_name("E7:M6").compute()
    assert series.hs_equal_up_to_shift(m1, m6) is None


def test_e8_frobenius_class_shift_at_seven():
    spec = RINGS["E8"]
    frob = series.hs_monomial_syz(spec, ["X^7", "Y^7", "Z^7"], p=7, check_p=None)
    rep = series.hs_monomial_syz(spec, ["X", "Y", "Z^2"])
    assert series.hs_equal_up_to_shift(rep, frob) == 31 * 3 - 3


# -- free modules -------------------------------------------------------------------

@pytest.mark.parametrize("name", list(RINGS))
def test_ring_series_match_table(name):
    published = dict((n, h) for n, _, h in series_tables.ring_fixtures())[name]
    assert series.hs_ring(RINGS[name]) == published
    assert series.hs_numerator_at_one(series.hs_ring(RINGS[name])) == 2


def test_ring_series_examples():
    a2 = RINGS["A2"]
    assert series.hs_ring(a2) == HilbertSeries.make({0: 1, 3: 1}, (2, 3))
    assert series.hs_ring(RINGS["E6"]) == HilbertSeries.make({0: 1, 6: 1}, (4, 3))
    plane = WeightedRingSpec(("X", "Y"), (1, 1))
    assert series.hs_ring(plane) == HilbertSeries.make({0: 1}, (1, 1))


@pytest.mark.parametrize("name", ["A1", "A3", "D5", "E7", "Ainf"])
def test_ring_series_expand_to_oracle(name):
    spec = RINGS[name]
    ring = oracle._QuotientPieces(spec.weights, [spec.relation], 7)
    assert series.hs_expand(series.hs_ring(spec), 30) == [ring.dim(d) for d in range(31)]


# -- the direct formula ---------------------------------------------------------------

def test_direct_formula_with_artinian_quotient():
    spec = RINGS["A2"]
    gens = tuple(parse_poly(v, spec.names) for v in spec.names)
    upto = 3 * spec.rel_degree
    for p in (5, 7):
        hf = oracle.quotient_hilbert_function(oracle.QuotientProblem(spec, gens, p), upto)
        h = series.hs_syz_direct(spec, gens, hf)
        assert series.hs_expand(h, upto) == oracle.module_syz_hilbert_function(spec, gens, upto, p)
    assert h == series.hs_monomial_syz(spec, ["X", "Y", "Z"])


def test_direct_formula_refuses_non_artinian_quotient():
    spec = RINGS["Dinf"]
    gens = tuple(parse_poly(v, spec.names) for v in ("X", "Z"))
    hf = oracle.quotient_hilbert_function(oracle.QuotientProblem(spec, gens, 7), 20)
    assert not hf.artinian
    with pytest.raises(SeriesError):
        series.hs_syz_direct(spec, gens, hf)


# -- the recursion ---------------------------------------------------------------------

@pytest.mark.parametrize("n,i", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 3)])
def test_a_n_modules(n, i):
    spec = RINGS[f"A{n}"]
    got = series.hs_monomial_syz(spec, [f"X^{i}", "Z"])
    assert got == series.hs_Ma(spec, i, ["1"], ["Z"])
    want = _series([2 * i + n + 1, 2 * n + 2], (2, n + 1))
    assert got == want


def test_recursion_published_examples():
    e6 = series.hs_monomial_syz(RINGS["E6"], ["X", "Y", "Z"])
    assert e6 == HilbertSeries.make({7: 1, 9: 1, 10: 1, 12: 1}, (4, 3))
    assert series.hs_numerator_at_one(e6) == 4
    e8 = series.hs_monomial_syz(RINGS["E8"], ["X", "Y", "Z"])
    assert e8 == HilbertSeries.make({16: 1, 21: 1, 25: 1, 30: 1}, (10, 6))


@pytest.mark.parametrize("q", [3, 5, 7])
def test_d_infinity_frobenius_series(q):
    got = series.hs_monomial_syz(RINGS["Dinf"], [f"X^{q}", f"Y^{q}", f"Z^{q}"], p=q, check_p=None)
    want = _series([3 * q + 2, 3 * q + 3, 4 * q, 4 * q + 1], (2, 2))
    assert got == want


def test_recursion_rejects_bad_split():
    spec = RINGS["E6"]
    with pytest.raises(SeriesError):
        series.hs_monomial_syz(spec, ["X", "X^2*Y"])
    with pytest.raises(SeriesError):
        series.hs_Ma(spec, 0, ["Y"], [])
    with pytest.raises(SeriesError):
        series.hs_monomial_syz(spec, ["Y+Z^2", "X"])


def _random_instance(rng):
    name = rng.choice(["A1", "A2", "A3", "D4", "D5"])
    spec = RINGS[name]
    split = series.split_relation(spec)
    mono = lambda: f"Y^{rng.randint(0, 3)}*Z^{rng.randint(0, 3)}"
    head = [mono() for _ in range(rng.randint(1, 2))]
    tail = [mono() for _ in range(rng.randint(0, 2))]
    return spec, split, rng.randint(1, 3 * split.d), head, tail


@pytest.mark.parametrize("seed", range(12))
def test_short_exact_sequence_identity(seed):
    spec, split, a, head, tail = _random_instance(random.Random(seed))
    q, r = divmod(a, split.d)
    t = HilbertSeries.monomial(split.alpha * r)
    lhs = series.hs_Ma(spec, a, head, tail) + t * series.hs_Ma(spec, a + split.d - 2 * r, head, tail)
    rhs = t * series.hs_S(spec, q, head, tail) + series.hs_S(spec, q + 1, head, tail)
    assert lhs == rhs


@pytest.mark.parametrize("seed", range(12))
def test_recursion_matches_oracle_on_random_instances(seed):
    spec, _, a, head, tail = _random_instance(random.Random(seed))
    gens = [parse_poly(f"X^{a}*{h}", spec.names) for h in head]
    gens += [parse_poly(v, spec.names) for v in tail]
    h = series.hs_Ma(spec, a, head, tail)
    assert series.hs_expand(h, 40) == oracle.module_syz_hilbert_function(spec, gens, 40, 7)


# -- the published tables ---------------------------------------------------------------

@pytest.mark.parametrize("fx", FIXTURES, ids=_ids(FIXTURES))
def test_fixture_recomputes(fx):
    assert fx.compute() == fx.corrected()


@pytest.mark.parametrize("fx", [f for f in FIXTURES if f.erratum], ids=_ids(f for f in FIXTURES if f.erratum))
@pytest.mark.xfail(strict=True, reason="published numerator is off by a power of t")
def test_fixture_matches_published_degrees(fx):
    assert fx.compute() == fx.expected()


@pytest.mark.parametrize("fx", [f for f in FIXTURES if f.erratum], ids=_ids(f for f in FIXTURES if f.erratum))
def test_errata_are_pure_shifts(fx):
    assert series.hs_equal_up_to_shift(fx.compute(), fx.expected()) == fx.erratum


@pytest.mark.parametrize("fx", [f for f in FIXTURES if f.rank is not None],
                         ids=_ids(f for f in FIXTURES if f.rank is not None))
def test_numerator_at_one_is_twice_the_rank(fx):
    assert series.hs_numerator_at_one(fx.compute()) == 2 * fx.rank


def test_e8_m5_numerator_at_one():
    assert series.hs_numerator_at_one(series_tables.fixture_by_name("E8:M5").compute()) == 12


@pytest.mark.parametrize("fx", FIXTURES, ids=_ids(FIXTURES))
def test_fixture_expansion_matches_oracle(fx):
    spec = fx.spec()
    upto = 3 * spec.rel_degree
    coeffs = series.hs_expand(fx.compute(), upto)
    assert all(c >= 0 for c in coeffs)
    gens = [parse_poly(g, spec.names) for g in fx.gens]
    runs = [oracle.module_syz_hilbert_function(spec, gens, upto, p) for p in _oracle_primes(fx)]
    assert all(run == coeffs for run in runs)


def test_fixture_lookup():
    assert series_tables.fixture_by_name("E8:M1").rank == 2
    with pytest.raises(KeyError):
        series_tables.fixture_by_name("E9:M1")
