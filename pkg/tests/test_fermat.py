"""Fermat curves: semistability, projective dimension, classes, periods and colengths."""

from __future__ import annotations

import math
from fractions import Fraction as F

import pytest

from artifact import fermat, hkm, oracle, series
from artifact.fermat import NO, YES, YES_IF_NOT_TRIVIALIZED


def _oracle(n, p, e):
    return oracle.frobenius_colength(fermat.fermat_spec(n), p, p ** e)


def _coprime(ns, ps):
    return [(n, p) for n in ns for p in ps if math.gcd(n, p) == 1]


# -- semistability and projective dimension ----------------------------------------------

@pytest.mark.parametrize("n,p,want", [(6, 5, NO), (5, 7, YES), (3, 2, YES), (7, 3, NO),
                                      (5, 2, NO), (3, 7, YES)])
def test_semistability(n, p, want):
    assert fermat.is_strongly_semistable(n, p) == want


def test_semistability_input_checks():
    with pytest.raises(fermat.FermatError):
        fermat.is_strongly_semistable(6, 3)
    with pytest.raises(fermat.FermatError):
        fermat.is_strongly_semistable(5, 4)


def test_characteristic_two_tristate_constant():
    assert YES_IF_NOT_TRIVIALIZED == "YesIfNotTrivialized"


@pytest.mark.parametrize("n,p,N,want", [(7, 3, 9, False), (6, 5, 25, True), (7, 3, 14, True),
                                        (5, 2, 8, True), (5, 2, 4, False), (7, 3, 27, True)])
def test_finite_projdim_examples(n, p, N, want):
    assert fermat.finite_projdim(n, p, N) is want


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_bounded_search_matches_double_loop(p):
    for n in range(2, 30):
        if n % p == 0:
            continue
        for N in range(1, 80):
            # N/n < 40 bounds the odd J and the exponent of the double loop
            want = fermat.finite_projdim_bruteforce(n, p, N, emax=6, jmax=101)
            assert fermat.finite_projdim(n, p, N) == want, (n, N)


@pytest.mark.parametrize("n,p", _coprime(range(2, 13), (2, 3, 5, 7, 11, 13)))
def test_infinite_projdim_iff_semistable(n, p):
    semistable = fermat.is_strongly_semistable(n, p) != NO
    infinite = all(not fermat.finite_projdim(n, p, p ** e) for e in range(1, 5))
    if (n, p) == (3, 2):
        # trivialized: semistable, yet the pull-backs are free from q = 4 on
        assert semistable and not infinite
    else:
        assert semistable == infinite


# -- classes ---------------------------------------------------------------------------------

@pytest.mark.parametrize("n,N,c,shift", [(7, 9, 5, -6), (5, 7, 3, -6), (3, 4, 2, -3), (5, 3, 3, 0)])
def test_class_map(n, N, c, shift):
    cls = fermat.syz_class(n, N)
    assert (cls.class_exp, cls.shift) == (c, shift)
    assert 0 <= cls.r < n and N == n * cls.theta + cls.r


def test_class_map_refuses_free_modules():
    with pytest.raises(fermat.FiniteProjectiveDimension):
        fermat.syz_class(6, 25, p=5)
    with pytest.raises(fermat.FiniteProjectiveDimension):
        fermat.syz_class(4, 8)


@pytest.mark.parametrize("n,N", [(7, 9), (5, 7), (5, 3), (4, 5), (6, 7)])
def test_class_series_matches_frobenius_module(n, N):
    # the series of Syz(X^N, Y^N, Z^N) is the class series shifted by -shift
    spec = fermat.fermat_spec(n)
    gens = [f"{v}^{N}" for v in spec.names]
    cls = fermat.syz_class(n, N)
    upto = 3 * N + 2 * n
    quot = oracle.quotient_hilbert_function(
        oracle.QuotientProblem(spec, tuple(spec.parse(g) for g in gens), 101), upto + n)
    direct = series.hs_syz_direct(spec, gens, quot)
    rep = fermat.class_series(n, cls.class_exp)
    assert series.hs_equal_up_to_shift(rep, direct) == -cls.shift


# -- periods ------------------------------------------------------------------------------------

@pytest.mark.parametrize("n,p,want", [(3, 7, (0, 1)), (4, 7, (0, 1)), (5, 11, (0, 1)),
                                      (5, 3, (0, 2)), (5, 7, (0, 2)), (14, 37, (0, 3)),
                                      (3, 2, (1, 2)), (6, 5, None), (7, 3, None)])
def test_periods(n, p, want):
    assert fermat.period(n, p) == want


@pytest.mark.parametrize("n,p", [(n, p) for n, p in _coprime(range(2, 13), (3, 5, 7, 11, 13))
                                 if fermat.is_strongly_semistable(n, p) == YES])
def test_period_length_bounded_by_order(n, p):
    s, t = fermat.period(n, p)
    order = next(k for k in range(1, 2 * n + 1) if pow(p, k, 2 * n) == 1)
    assert 0 <= s < t and t - s <= order


@pytest.mark.parametrize("p,l", [(3, 0), (3, 1), (5, 0), (5, 1)])
def test_period_family(p, l):
    n = (p ** (l + 1) + 1) // 2
    assert fermat.period(n, p) == (0, l + 1)
    for e in range(4):
        ep = e % (l + 1)
        q, c = p ** e, p ** ep
        want = F(3 * n, 4) * (q * q - c * c) + c ** 3
        assert fermat.hkf_fermat(n, p, e).value == want


@pytest.mark.parametrize("n", range(5, 16, 2))
def test_characteristic_two_has_no_period_beyond_three(n):
    assert fermat.period(n, 2) is None


# -- Harder-Narasimhan data -------------------------------------------------------------------

def test_hn_examples():
    h = fermat.hn_filtration(6, 5)
    assert (h.s, h.sub_degree, h.quot_degree, h.split_threshold, h.split_from) == (1, -6, -9, 1, 2)
    h = fermat.hn_filtration(7, 3)
    assert (h.s, h.l, h.r, h.sub_degree, h.quot_degree, h.split_from) == (2, 1, 2, -13, -14, 4)


@pytest.mark.parametrize("n,p", [(n, p) for n, p in _coprime(range(2, 25), (2, 3, 5, 7, 11))
                                 if fermat.is_strongly_semistable(n, p) == NO])
def test_hn_degrees_add_up(n, p):
    h = fermat.hn_filtration(n, p)
    assert h.sub_degree + h.quot_degree == -3 * p ** h.s
    assert h.sub_degree > h.quot_degree or h.sub_degree == h.quot_degree


def test_hn_refuses_semistable_input():
    with pytest.raises(fermat.FermatError):
        fermat.hn_filtration(5, 7)


# -- Hilbert-Kunz functions ---------------------------------------------------------------------

@pytest.mark.parametrize("n,p,e,want,branch", [
    (3, 7, 1, 109, fermat.CLASS), (7, 3, 0, 1, fermat.CLASS), (7, 3, 1, 27, fermat.CLASS),
    (7, 3, 2, 419, fermat.CLASS), (7, 3, 3, 3843, fermat.FREE), (6, 5, 2, 3150, fermat.HKM_LIMIT),
    (3, 2, 2, 36, fermat.TRIVIALIZED), (8, 5, 2, 3800, fermat.FREE), (7, 2, 3, 364, fermat.FREE),
])
def test_hkf_examples(n, p, e, want, branch):
    r = fermat.hkf_fermat(n, p, e)
    assert (r.value, r.branch) == (want, branch)


def test_split_value_is_the_multiplicity():
    assert hkm.hkm_diagonal(6, 6, 6, 5) == F(126, 25)
    for e in (2, 3):
        assert fermat.hkf_fermat(6, 5, e).value == F(126, 25) * 5 ** (2 * e)
    for e in (4, 5):
        assert fermat.hkf_fermat(7, 3, e).value == hkm.hkm_diagonal(7, 7, 7, 3) * 3 ** (2 * e)


def test_trivialized_branch_closed_form():
    for e in range(2, 6):
        assert fermat.hkf_fermat(3, 2, e).value == 9 * 4 ** (e - 1)


@pytest.mark.parametrize("n,p", _coprime(range(2, 8), (3, 5, 7)))
def test_hkf_matches_oracle(n, p):
    for e in range(3):
        r = fermat.hkf_fermat(n, p, e)
        assert r.determinate and r.value == _oracle(n, p, e)


@pytest.mark.parametrize("n,p,e", [(n, p, e) for n, p in _coprime(range(2, 16), (2, 3, 5, 7, 11, 13))
                                   for e in range(1, 5) if n * p ** e <= 160 and p ** e > 7])
def test_every_branch_matches_oracle(n, p, e):
    assert fermat.hkf_fermat(n, p, e).value == _oracle(n, p, e)


def test_hkf_input_checks():
    with pytest.raises(fermat.FermatError):
        fermat.hkf_fermat(7, 7, 1)
    with pytest.raises(fermat.FermatError):
        fermat.hkf_fermat(7, 3, -1)
