"""Randomized algebraic identities, driven by hypothesis."""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction as F

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from artifact import ade, fermat, hkm, matfac, oracle, series
from artifact.delta import delta
from artifact.matfac import MatFac
from artifact.polyring import (ZZ, ZZI, Gauss, Poly, PrimeField, WeightedRingSpec,
                               graded_piece_basis, substitute_powers, weighted_degree)
from artifact.series import HilbertSeries

PRIMES = (2, 3, 5, 7, 11, 13)
GF7 = PrimeField(7)
PLANE = WeightedRingSpec(("X", "Y"), (1, 1))
SLOW = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
FAST = settings(max_examples=150, deadline=None)

primes = st.sampled_from(PRIMES)
small_rationals = st.builds(F, st.integers(0, 60), st.integers(1, 30))
triples = st.tuples(small_rationals, small_rationals, small_rationals)


# -- polynomial ring axioms ----------------------------------------------------------------

def _coefficients(domain):
    if domain is ZZI:
        return st.builds(Gauss, st.integers(-9, 9), st.integers(-9, 9))
    return st.integers(-20, 20)


def _polys(domain, nvars=3):
    exps = st.tuples(*[st.integers(0, 8)] * nvars)
    terms = st.dictionaries(exps, _coefficients(domain), max_size=6)
    return terms.map(lambda t: Poly(nvars, t, domain))


def _triple_of_polys(domain):
    return st.tuples(_polys(domain), _polys(domain), _polys(domain))


def _check_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero(a.nvars, a.domain)
    assert all(not a.domain.is_zero(v) for v in (a * b).terms.values())


@FAST
@given(_triple_of_polys(ZZ))
def test_ring_axioms_over_integers(abc):
    _check_ring_axioms(*abc)


@FAST
@given(_triple_of_polys(ZZI))
def test_ring_axioms_over_gaussian_integers(abc):
    _check_ring_axioms(*abc)


@FAST
@given(_triple_of_polys(GF7))
def test_ring_axioms_over_gf7(abc):
    _check_ring_axioms(*abc)


# -- graded pieces and substitution -------------------------------------------------------------

def _series_counts(weights, upto):
    counts = [1] + [0] * upto
    for w in weights:
        for d in range(w, upto + 1):
            counts[d] += counts[d - w]
    return counts


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 7), min_size=1, max_size=3))
def test_basis_sizes_follow_the_generating_function(weights):
    want = _series_counts(weights, 40)
    assert [len(graded_piece_basis(weights, d)) for d in range(41)] == want


def test_basis_generating_function_on_fixed_weights():
    for weights in [(1, 1, 1), (6, 4, 3), (2, 3, 5), (1, 2, 2, 3)]:
        want = _series_counts(weights, 40)
        assert [len(graded_piece_basis(weights, d)) for d in range(41)] == want


@st.composite
def _homogeneous(draw):
    weights = draw(st.tuples(*[st.integers(1, 6)] * 3))
    degree = draw(st.integers(1, 24))
    basis = graded_piece_basis(weights, degree)
    assume(basis)
    chosen = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=5, unique=True))
    coeffs = draw(st.lists(st.integers(1, 9), min_size=len(chosen), max_size=len(chosen)))
    return weights, degree, Poly(3, dict(zip(chosen, coeffs)))


@FAST
@given(_homogeneous())
def test_substitution_makes_weighted_forms_standard_graded(data):
    weights, degree, f = data
    assert weighted_degree(f, weights) == degree
    assert weighted_degree(substitute_powers(f, weights), (1, 1, 1)) == degree


# -- delta ------------------------------------------------------------------------------------------

@FAST
@given(primes, triples)
def test_delta_scaling(p, t):
    assert delta(p, tuple(x / p for x in t)) == delta(p, t) / p


@FAST
@given(primes, triples, triples)
def test_delta_is_lipschitz(p, t, s):
    assert abs(delta(p, t) - delta(p, s)) <= sum(abs(a - b) for a, b in zip(t, s))


@FAST
@given(primes, triples)
def test_delta_is_symmetric(p, t):
    values = {delta(p, perm) for perm in itertools.permutations(t)}
    assert len(values) == 1


def _gap_gens(a, p):
    field = PrimeField(p)
    return [PLANE.parse(f"X^{a[0]}", field), PLANE.parse(f"Y^{a[1]}", field),
            PLANE.parse(f"(X+Y)^{a[2]}", field)]


exponents = st.tuples(st.integers(1, 24), st.integers(1, 24), st.integers(1, 24))


@SLOW
@given(primes, exponents)
def test_delta_is_the_syzygy_gap(p, a):
    assert delta(p, a) == oracle.syz_gap(PLANE, _gap_gens(a, p), p)


# -- oracle identities --------------------------------------------------------------------------------

@st.composite
def _binary_form(draw, p):
    degree = draw(st.integers(1, 4))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=degree + 1, max_size=degree + 1))
    assume(any(coeffs))
    return Poly(2, {(degree - i, i): c for i, c in enumerate(coeffs)}, PrimeField(p))


@SLOW
@given(st.data(), st.sampled_from((3, 5, 7)), st.tuples(*[st.integers(1, 8)] * 3))
def test_common_factor_adds_its_degree_to_the_gap(data, p, a):
    f = data.draw(_binary_form(p))
    gens = _gap_gens(a, p)
    d = weighted_degree(f, PLANE)
    assert oracle.syz_gap(PLANE, [f * g for g in gens], p) == d + oracle.syz_gap(PLANE, gens, p)


@SLOW
@given(primes, st.tuples(*[st.integers(1, 12)] * 3))
def test_colength_from_the_gap_standard_grading(p, a):
    gens = _gap_gens(a, p)
    got = oracle.quotient_dim(oracle.QuotientProblem(PLANE, tuple(gens), p))
    sg = oracle.syz_gap(PLANE, gens, p)
    assert got == (hkm.qform(*a) + sg * sg) / 4


@SLOW
@given(st.sampled_from((3, 5, 7)), st.tuples(*[st.integers(1, 8)] * 3))
def test_colength_from_the_gap_weighted(p, k):
    # Deg U = 2, Deg V = 1: the generators U^k1, V^k2, (U+V^2)^k3
    spec = WeightedRingSpec(("U", "V"), (2, 1))
    field = PrimeField(p)
    gens = (spec.parse(f"U^{k[0]}", field), spec.parse(f"V^{k[1]}", field),
            spec.parse(f"(U+V^2)^{k[2]}", field))
    degs = (2 * k[0], k[1], 2 * k[2])
    got = oracle.quotient_dim(oracle.QuotientProblem(spec, gens, p))
    sg = oracle.syz_gap(spec, list(gens), p)
    assert got == (hkm.qform(*degs) + sg * sg) / (4 * 2 * 1)


# -- multiplicities -----------------------------------------------------------------------------------

TRINOMIALS = ["X^7+Y^7+Z^7", "X^6+Y^6+Y^2*Z^4", "X^4+Y^4+Z^4", "X^5+Y^5+X*Z^4"]
positive_rationals = st.builds(F, st.integers(1, 40), st.integers(1, 12))


@FAST
@given(st.sampled_from(TRINOMIALS), primes, st.tuples(*[positive_rationals] * 3))
def test_multiplicity_dominates_the_quadratic_term(text, p, t):
    spec = hkm.classify_trinomial(WeightedRingSpec.standard().parse(text))
    res = hkm.hkm_standard_details(spec, p, t)
    floor = F(spec.d, 4) * hkm.qform(*t)
    assert res.value >= floor
    assert (res.value == floor) == (res.delta == 0)


@FAST
@given(st.integers(1, 6), st.sampled_from((3, 5, 7, 11, 13)))
def test_a_n_multiplicity(n, p):
    spec = WeightedRingSpec(("U", "V", "W"), (2, n + 1, n + 1))
    f = spec.parse(f"U^{n + 1}+V^2+W^2")
    assert hkm.hkm_weighted(spec.weights, f, p) == 2 - F(1, n + 1)


# -- Hilbert series ------------------------------------------------------------------------------------

@st.composite
def _hilbert_series(draw):
    numer = draw(st.dictionaries(st.integers(0, 12), st.integers(-5, 5), min_size=1, max_size=5))
    den = draw(st.lists(st.integers(1, 6), max_size=3))
    return HilbertSeries.make(Counter(numer), tuple(den))


@FAST
@given(_hilbert_series(), _hilbert_series())
def test_expansion_is_additive(g, h):
    eg, eh = series.hs_expand(g, 30), series.hs_expand(h, 30)
    assert series.hs_expand(g + h, 30) == [a + b for a, b in zip(eg, eh)]


@FAST
@given(_hilbert_series(), st.integers(0, 10))
def test_shift_moves_the_expansion(h, k):
    assert series.hs_expand(h.shift(k), 30) == [0] * k + series.hs_expand(h, 30 - k)
    if h.numerator:
        assert series.hs_equal_up_to_shift(h, h.shift(k)) == k


# -- matrix factorizations ----------------------------------------------------------------------------

@st.composite
def _diagonal_piece(draw, var):
    d = draw(st.integers(2, 6))
    a = draw(st.integers(1, d - 1))
    return MatFac.from_rows([f"{var}^{a}"], [f"{var}^{d - a}"], f"{var}^{d}")


@st.composite
def _one_by_one(draw, var):
    g = draw(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
    h = draw(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
    assume(any(g) and any(h))
    text = lambda cs: "+".join(f"({c})*{var}^{i}" for i, c in enumerate(cs) if c)
    f = f"({text(g)})*({text(h)})"
    return MatFac.from_rows([text(g)], [text(h)], f)


@SLOW
@given(_one_by_one("X"), _one_by_one("Y"))
def test_tensor_of_random_pieces_verifies(left, right):
    assert matfac.verify(matfac.tensor_hat(left, right))


@SLOW
@given(_diagonal_piece("X"), _diagonal_piece("Y"), _diagonal_piece("Z"))
def test_tensor_of_diagonal_pieces_has_rank_n_times_m(a, b, c):
    two = matfac.tensor_hat(a, b)
    assert matfac.verify(two) and matfac.det_rank(two) == 1
    four = matfac.tensor_hat(two, c)
    assert matfac.verify(four) and matfac.det_rank(four) == two.size * c.size
    assert matfac.det_rank(matfac.transpose_dual(four)) == matfac.det_rank(four)


# -- ADE closed forms ------------------------------------------------------------------------------------

ADE_KINDS = ["A(1)", "A(2)", "A(5)", "A(9)", "D(4)", "D(5)", "D(8)", "E6", "E7", "E8"]


@FAST
@given(st.sampled_from(ADE_KINDS), st.sampled_from(PRIMES + (17, 19, 23, 29, 31)), st.integers(0, 4))
def test_gorenstein_pairing_and_integrality(kind, p, e):
    value = ade.hkf(kind, p, e)
    assert value.denominator == 1
    assert value + ade.fsig(kind, p, e) == 2 * p ** (2 * e)


# -- Fermat projective dimension ----------------------------------------------------------------------

@FAST
@given(st.integers(2, 20), primes, st.integers(1, 79))
def test_projective_dimension_matches_the_double_loop(n, p, N):
    assume(n % p)
    # N/n < 40 bounds the odd J and the exponent of the double loop
    assert fermat.finite_projdim(n, p, N) == fermat.finite_projdim_bruteforce(n, p, N, emax=6, jmax=101)
