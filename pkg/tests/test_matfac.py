"""Matrix factorizations: verification, tensor products, duals and the catalogs."""

from __future__ import annotations

import pytest

from artifact import catalog, matfac
from artifact.matfac import MatFac, MatFacError, PolyMatrix
from artifact.polyring import PrimeField, ZZI, parse_poly

KINDS = ["A(1)", "A(2)", "A(3)", "A(5)", "D4", "D5", "D6", "D7", "E6", "E7", "E8",
         "Ainf", "Dinf", "Fermat(2)", "Fermat(3)", "Fermat(5)"]
ENTRIES = [e for kind in KINDS for e in catalog.catalog(kind)]
IDS = [f"{e.kind}:{e.index}" for e in ENTRIES]


def _gaussian(mf: MatFac) -> bool:
    polys = [x for m in (mf.phi, mf.psi) for r in m.rows for x in r] + [mf.f]
    return any(getattr(c, "im", 0) for p in polys for c in p.terms.values())


def _one(f: str, phi: str, psi: str) -> MatFac:
    return MatFac.from_rows([phi], [psi], f)


def _diag(d: int, a: int, var: str) -> MatFac:
    return _one(f"{var}^{d}", f"{var}^{a}", f"{var}^{d - a}")


# -- verify --------------------------------------------------------------------------

@pytest.mark.parametrize("entry", ENTRIES, ids=IDS)
def test_catalog_entry_verifies(entry):
    assert matfac.verify(entry.matfac)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_catalogs_verify_modulo_p(p):
    checked = 0
    for entry in ENTRIES:
        if _gaussian(entry.matfac) and p % 4 == 3:
            continue                      # i is not p-integral here
        assert matfac.verify(entry.matfac.to_domain(PrimeField(p))), f"{entry.kind}:{entry.index}"
        checked += 1
    assert checked >= len(ENTRIES) // 2


def test_a_n_pair():
    mf = MatFac.from_rows(["Y & X^2", "X & -Z"], ["Z & X^2", "X & -Y"], "X^3+Y*Z")
    assert matfac.verify(mf)
    assert mf == catalog.catalog("A(2)")[0].matfac


def test_trivial_pairs():
    f = "X^2+Y^3+Z^5"
    assert matfac.verify(_one(f, f, "1"))
    assert matfac.verify(_one(f, "1", f))
    assert matfac.det_rank(_one(f, f, "1")) == 1
    assert matfac.det_rank(_one(f, "1", f)) == 0


def test_perturbed_entry_gives_witness():
    good = catalog.catalog("E6")[0].matfac
    rows = good.phi.to_strings()
    rows[0][0] = f"{rows[0][0]} + 1"
    bad = MatFac.from_rows([" & ".join(r) for r in rows], [" & ".join(r) for r in good.psi.to_strings()],
                           good.f.to_string(matfac.NAMES), check=False)
    res = matfac.verify(bad)
    assert not res
    assert res.witness[0] == "phi*psi" and res.witness[1] == 0


def test_construction_checks_the_identity():
    with pytest.raises(MatFacError):
        MatFac.from_rows(["X"], ["Y"], "X*Y+1")
    with pytest.raises(matfac.SizeMismatch):
        MatFac.from_rows(["X & 0", "0 & X"], ["X"], "X^2")


def test_json_round_trip():
    for entry in ENTRIES[::7]:
        data = entry.matfac.as_dict()
        assert MatFac.from_dict(data) == entry.matfac
    assert catalog.catalog("Fermat(3)")[0].as_dict()["sign"] == -1


# -- tensor products -----------------------------------------------------------------------

@pytest.mark.parametrize("d1,a,d2,b", [(2, 1, 2, 1), (3, 1, 4, 2), (5, 2, 3, 1), (4, 4, 2, 1)])
def test_tensor_of_diagonal_pieces(d1, a, d2, b):
    two = matfac.tensor_hat(_diag(d1, a, "X"), _diag(d2, b, "Y"))
    assert two.size == 2
    assert two.f == parse_poly(f"X^{d1}+Y^{d2}", matfac.NAMES, ZZI)
    assert matfac.verify(two)
    assert matfac.det_rank(two) == 1
    four = matfac.tensor_hat(two, _diag(5, 2, "Z"))
    assert four.size == 4 and matfac.verify(four)
    assert matfac.det_rank(four) == 2
    assert four.phi.det() == four.f ** 2


def test_tensor_sizes_multiply():
    plane = MatFac.from_rows(["X & Y", "Y & -X"], ["X & Y", "Y & -X"], "X^2+Y^2")
    line = MatFac.from_rows(["Z & 0", "0 & Z^2"], ["Z^2 & 0", "0 & Z"], "Z^3")
    big = matfac.tensor_hat(plane, line)
    assert big.size == 8 and matfac.verify(big)
    assert matfac.det_rank(big) == 4


def test_tensor_rejects_shared_variables():
    with pytest.raises(matfac.OverlappingVariables):
        matfac.tensor_hat(_diag(2, 1, "X"), _diag(3, 1, "X"))


def test_split_of_linear_forms():
    xi, zeta = matfac.tensor_split(PolyMatrix.parse(["X"]), PolyMatrix.parse(["Y"]))
    assert xi.phi == PolyMatrix.parse(["X-i*Y"]) and xi.psi == PolyMatrix.parse(["X+i*Y"])
    assert zeta.phi == xi.psi and zeta.psi == xi.phi
    assert xi.f == parse_poly("X^2+Y^2", matfac.NAMES, ZZI)


def test_split_sizes():
    phi = PolyMatrix.parse(["0 & X", "X & 0"])
    psi = PolyMatrix.parse(["0 & Y^2", "Y & 0"])
    xi, zeta = matfac.tensor_split(phi, psi)
    assert xi.size == zeta.size == 4
    assert matfac.verify(xi) and matfac.verify(zeta)


def test_split_over_gf13():
    field = PrimeField(13)
    xi, zeta = matfac.tensor_split(PolyMatrix.parse(["X"], domain=field),
                                   PolyMatrix.parse(["Z"], domain=field))
    assert matfac.verify(xi) and matfac.verify(zeta)
    assert xi.phi == PolyMatrix.parse(["X-5*Z"], domain=field)


def test_split_needs_a_square_root_of_minus_one():
    field = PrimeField(7)
    with pytest.raises(MatFacError, match="square root"):
        matfac.tensor_split(PolyMatrix.parse(["X"], domain=field), PolyMatrix.parse(["Y"], domain=field))


def test_split_needs_self_paired_inputs():
    with pytest.raises(MatFacError):
        matfac.tensor_split(PolyMatrix.parse(["X & Y", "0 & X"]), PolyMatrix.parse(["Z"]))


# -- duals and ranks ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_a_n_transpose_swaps_indices(n):
    entries = {e.index: e for e in catalog.catalog(f"A({n})")}
    for m, e in entries.items():
        dual = matfac.transpose_dual(e.matfac)
        assert e.dual_index == n + 1 - m
        assert dual == entries[n + 1 - m].matfac


@pytest.mark.parametrize("entry", ENTRIES, ids=IDS)
def test_transpose_keeps_rank_and_is_an_involution(entry):
    dual = matfac.transpose_dual(entry.matfac)
    assert matfac.verify(dual)
    assert matfac.transpose_dual(dual) == entry.matfac
    if entry.rank is not None:
        assert matfac.det_rank(entry.matfac) == entry.rank == matfac.det_rank(dual)


def test_symmetric_factorization_is_fixed():
    mf = MatFac.from_rows(["X & Y", "Y & -X"], ["X & Y", "Y & -X"], "X^2+Y^2")
    assert matfac.transpose_dual(mf) == mf


def test_catalog_counts_and_ranks():
    assert [len(catalog.catalog(k)) for k in ("A(4)", "D6", "E6", "E7", "E8")] == [4, 6, 6, 7, 8]
    e8 = catalog.catalog("E8")
    assert [e.rank for e in e8] == [2, 3, 4, 5, 6, 3, 4, 2]
    assert e8[4].matfac.size == 12 and matfac.det_rank(e8[4].matfac) == 6


def test_e6_dual_pairing():
    duals = {e.index: e.dual_index for e in catalog.catalog("E6")}
    assert duals[3] == 4 and duals[4] == 3 and duals[5] == 6 and duals[6] == 5


def test_dual_indices_close_up():
    for kind in KINDS:
        entries = {e.index: e for e in catalog.catalog(kind)}
        for e in entries.values():
            assert entries[e.dual_index].dual_index == e.index
            assert entries[e.dual_index].rank == e.rank


@pytest.mark.parametrize("r,s", [(1, 1), (1, 2), (2, 3), (1, 4)])
def test_fermat_sign(r, s):
    mf = catalog.fermat_matfac(r, s)
    n = r + s
    assert mf.sign == -1
    prod = mf.phi @ mf.psi
    assert prod == PolyMatrix.scalar(4, -parse_poly(f"X^{n}+Y^{n}+Z^{n}", matfac.NAMES, ZZI))
    assert matfac.det_rank(mf) == 2


def test_det_rank_rejects_non_powers():
    with pytest.raises(matfac.NotAPowerOfF):
        matfac.det_rank(MatFac.from_rows(["X"], ["X*Y"], "X^2*Y"))


# -- morphisms ---------------------------------------------------------------------------------

def test_identity_morphism():
    mf = catalog.catalog("E7")[2].matfac
    one = PolyMatrix.identity(mf.size, 3, ZZI)
    check = matfac.verify_morphism(one, one, mf, mf)
    assert check.commutes and check.equivalence


def test_zero_morphism_is_not_an_equivalence():
    mf = catalog.catalog("D5")[1].matfac
    zero = matfac.constant_matrix([[0] * mf.size for _ in range(mf.size)])
    check = matfac.verify_morphism(zero, zero, mf, mf)
    assert check.commutes and not check.equivalence


def test_d4_split_is_an_equivalence():
    alpha, beta, source, target = catalog.d4_split_example()
    check = matfac.verify_morphism(alpha, beta, source, target)
    assert check.commutes and check.equivalence


def test_non_commuting_square_is_reported():
    alpha, _, source, target = catalog.d4_split_example()
    check = matfac.verify_morphism(alpha, alpha, source, target)
    assert not check.commutes and check.witness


def test_morphism_size_mismatch():
    mf = catalog.catalog("A(1)")[0].matfac
    with pytest.raises(matfac.SizeMismatch):
        matfac.verify_morphism(PolyMatrix.identity(3, 3, ZZI), PolyMatrix.identity(3, 3, ZZI), mf, mf)
