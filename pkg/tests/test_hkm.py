"""Closed-form Hilbert-Kunz multiplicities."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from artifact import hkm, oracle
from artifact.polyring import PrimeField, WeightedRingSpec, parse_poly

XYZ = ("X", "Y", "Z")
UVW = ("U", "V", "W")


def _tri(text):
    return hkm.classify_trinomial(parse_poly(text, XYZ))


def test_qform():
    assert hkm.qform(1, 1, 1) == 3
    assert hkm.qform(15, 10, 6) == 239
    assert hkm.qform(F(2, 3), F(2, 3), F(2, 3)) == 3 * F(4, 9)


def test_classify_fermat():
    spec = _tri("X^7+Y^7+Z^7")
    assert (spec.kind, spec.d, spec.lam) == (hkm.TYPE_I, 7, 49)


def test_classify_type_two():
    spec = _tri("X^6+Y^6+Y^2*Z^4")
    assert (spec.kind, spec.d, spec.lam) == (hkm.TYPE_II, 6, 24)


def test_classify_is_permutation_invariant():
    # in Z^6 + X^6 + X^2*Y^4 the old X, Y, Z are called Z, X, Y
    a = _tri("X^6+Y^6+Y^2*Z^4")
    b = _tri("Z^6+X^6+X^2*Y^4")
    assert (a.kind, a.d, a.lam) == (b.kind, b.d, b.lam)
    assert hkm.hkm_standard(a, 5, (1, 2, 3)) == hkm.hkm_standard(b, 5, (2, 3, 1))


def test_classify_errors():
    with pytest.raises(hkm.Irregular):
        _tri("X^2*Y+X*Y^2+Y^3")
    with pytest.raises(hkm.HKMError):
        hkm.classify_trinomial([(1, 0, 0), (0, 2, 0), (0, 0, 2)])


def test_abg():
    fermat = _tri("X^7+Y^7+Z^7")
    assert hkm.abg(fermat, (1, 1, 1)).as_tuple() == (7, 7, 7)
    assert hkm.abg(fermat, (0, 0, 0)).as_tuple() == (0, 0, 0)
    assert sorted(hkm.abg(_tri("X^6+Y^6+Y^2*Z^4"), (1, 1, 1)).as_tuple()) == [4, 4, 6]


def test_hkm_standard_fermat():
    assert hkm.hkm_standard(_tri("X^7+Y^7+Z^7"), 3, (1, 1, 1)) == F(427, 81)


@pytest.mark.parametrize("t", [(1, 1, 1), (1, 2, 3), (F(1, 2), 1, F(2, 3))])
def test_hkm_standard_scales_quadratically(t):
    spec = _tri("X^7+Y^7+Z^7")
    assert hkm.hkm_standard(spec, 3, tuple(3 * F(x) for x in t)) == 9 * hkm.hkm_standard(spec, 3, t)


def test_hkm_standard_e8_by_substitution():
    spec = _tri("X^30+Y^30+Z^30")
    assert hkm.hkm_standard(spec, 7, (15, 10, 6)) / 900 == 2 - F(1, 120)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("t", [(1, 1, 1), (2, 1, 3), (F(1, 2), F(1, 3), 1)])
def test_hkm_standard_dominates_quadratic_term(p, t):
    spec = _tri("X^5+Y^5+Z^5")
    res = hkm.hkm_standard_details(spec, p, t)
    base = F(spec.d, 4) * hkm.qform(*t)
    assert res.value >= base
    assert (res.value == base) == (res.delta == 0)


def test_hkm_weighted_examples():
    assert hkm.hkm_weighted((15, 10, 6), parse_poly("U^2+V^3+W^5", UVW), 7) == 2 - F(1, 120)
    assert hkm.hkm_weighted((3, 2, 2), parse_poly("U^2+V^3+V*W^2", UVW), 3) == 2 - F(1, 8)
    assert hkm.hkm_weighted(hkm.tpq_weights(3, 3), parse_poly("U^3+V^3+U*V*W", UVW), 5) == F(7, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_hkm_weighted_a_n(n):
    f = parse_poly(f"U^{n + 1}+V^2+W^2", UVW)
    assert hkm.hkm_weighted((2, n + 1, n + 1), f, 3) == 2 - F(1, n + 1)


def test_hkm_weighted_rejects_inhomogeneous():
    with pytest.raises(hkm.InhomogeneousRows):
        hkm.hkm_weighted((1, 1, 1), parse_poly("U^2+V^3+W^5", UVW), 7)


@pytest.mark.parametrize("d,p,want", [((2, 3, 4), 5, 2 - F(1, 24)), ((2, 3, 4), 3, F(2)),
                                      ((2, 2, 2), 3, F(3, 2)), ((2, 3, 5), 7, 2 - F(1, 120))])
def test_hkm_diagonal(d, p, want):
    assert hkm.hkm_diagonal(*d, p) == want


def test_hkm_binomial():
    assert hkm.hkm_binomial(2, (1, 1)) == F(3, 2)
    assert hkm.hkm_binomial(3, (3,)) == 3
    assert hkm.hkm_binomial(4, (1, 1)) == F(7, 4)


def test_hkm_binomial_against_colength_sequence():
    # X^4 - YZ with weights (1, 2, 2): colengths / q^2 approach 7/4
    spec = WeightedRingSpec(XYZ, (1, 2, 2), parse_poly("X^4-Y*Z", XYZ))
    p = 5
    dims = [oracle.frobenius_colength(spec, p, p ** e) for e in (1, 2)]
    ratios = [F(d, p ** (2 * e)) for e, d in zip((1, 2), dims)]
    limit = hkm.hkm_binomial(4, (1, 1))
    assert abs(ratios[1] - limit) < abs(ratios[0] - limit) or ratios[1] == limit
    assert abs(ratios[1] - limit) <= F(1, p)


def test_family_fv_is_constant():
    fv = hkm.FamilySpec("FV", (5, 0, 0, 2, 3))
    values = {hkm.family_hkm(fv, p, L) for p in (3, 7) for L in (20, 40, 80)}
    assert values == {F(19, 5)} and hkm.family_limit(fv) == F(19, 5)


def test_family_fu_with_q_two_is_constant():
    fu = hkm.FamilySpec("FU", (1, 1, 1, 0, 2))
    assert {hkm.family_hkm(fu, 5, L) for L in (20, 40, 80)} == {F(2)} == {hkm.family_limit(fu)}


@pytest.mark.parametrize("d2,d3", [(2, 3), (3, 5), (4, 2)])
def test_diagonal_family_tends_to_min(d2, d3):
    values = [hkm.hkm_diagonal(L, d2, d3, 7) for L in range(2, 60)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert values[-1] == min(d2, d3)


def test_family_rejects_bad_kind_and_grading():
    with pytest.raises(hkm.HKMError):
        hkm.FamilySpec("FX", (1, 1, 1, 1, 1))
    with pytest.raises(hkm.HKMError):
        hkm.FamilySpec("FV", (5, 0, 0, 2, 3)).weights(1)
