"""Indecomposable matrix factorizations of the ADE, A-infinity, D-infinity and Fermat rings.

Each entry carries the factorization, an ideal whose first syzygy module is
the cokernel, the rank of that cokernel and the index of its dual.  Matrices
are ungraded and over ZZ[i].

  len(catalog("E8")) -> 8
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .ade import ADEKind
from .matfac import NAMES, MatFac, MatFacError, PolyMatrix, constant_matrix
from .polyring import Gauss, parse_poly

Index = Union[int, str, Tuple]
Rows = Tuple[str, ...]


@dataclass(frozen=True)
class CatalogEntry:
    kind: str
    index: Index
    matfac: MatFac
    ideal: Tuple[str, ...]
    rank: Optional[int]            # None where the cokernel has no rank (not a domain)
    dual_index: Index

    def ideal_polys(self):
        return [parse_poly(g, NAMES) for g in self.ideal]

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "index": _index_json(self.index),
               "ideal": list(self.ideal), "rank": self.rank,
               "dual_index": _index_json(self.dual_index)}
        out.update(self.matfac.as_dict())
        return out


def _index_json(i: Index):
    return list(i) if isinstance(i, tuple) else i


def _mf(phi: Rows, psi: Rows, f: str, sign: int = 1) -> MatFac:
    return MatFac.from_rows(phi, psi, f, NAMES, sign)


def _self(phi: Rows, f: str) -> MatFac:
    return _mf(phi, phi, f)


def _mono(v: str, k: int) -> str:
    if k == 0:
        return "1"
    return v if k == 1 else f"{v}^{k}"


# -- A_n: X^(n+1) + YZ ---------------------------------------------------------------

def a_n_catalog(n: int) -> List[CatalogEntry]:
    if n < 1:
        raise MatFacError("A_n needs n >= 1")
    f = f"X^{n + 1}+Y*Z"
    out = []
    for m in range(1, n + 1):
        phi = (f"Y & {_mono('X', n + 1 - m)}", f"{_mono('X', m)} & -Z")
        psi = (f"Z & {_mono('X', n + 1 - m)}", f"{_mono('X', m)} & -Y")
        out.append(CatalogEntry(f"A({n})", m, _mf(phi, psi, f), (_mono("X", m), "Z"), 1, n + 1 - m))
    return out


# -- D_n: X^2 + Y^(n-1) + YZ^2 -----------------------------------------------------------

def d_n_catalog(n: int) -> List[CatalogEntry]:
    if n < 4:
        raise MatFacError("D_n needs n >= 4")
    f = f"X^2+Y^{n - 1}+Y*Z^2"
    kind = f"D({n})"
    out = [CatalogEntry(kind, 1, _self(("X & " + f"Y^{n - 2}+Z^2", "Y & -X"), f), ("X", "Y"), 1, 1)]
    for m in range(2, n - 1):
        if m % 2 == 0:
            h, k = m // 2, n - 1 - m // 2
            phi = (f"-X & 0 & Y*Z & {_mono('Y', h)}",
                   f"0 & -X & {_mono('Y', k)} & -Z",
                   f"Z & {_mono('Y', h)} & X & 0",
                   f"{_mono('Y', k)} & -Y*Z & 0 & X")
            ideal = ("X", _mono("Y", h), "Z")
        else:
            h = (m - 1) // 2
            phi = (f"-X & {_mono('Y', n - 1 - h)} & Y*Z & 0",
                   f"{_mono('Y', h)} & X & 0 & -Z",
                   f"Z & 0 & X & {_mono('Y', n - 2 - h)}",
                   f"0 & -Y*Z & {_mono('Y', h + 1)} & -X")
            ideal = ("X", _mono("Y", h + 1), "Y*Z")
        out.append(CatalogEntry(kind, m, _self(phi, f), ideal, 2, m))
    if n % 2 == 0:
        h = _mono("Y", (n - 2) // 2)
        phi_a = (f"X & Y*(i*{h}+Z)", f"Z-i*{h} & -X")
        phi_b = (f"X & Y*(-i*{h}+Z)", f"Z+i*{h} & -X")
        out.append(CatalogEntry(kind, n - 1, _self(phi_a, f), ("X", f"Z-i*{h}"), 1, n - 1))
        out.append(CatalogEntry(kind, n, _self(phi_b, f), ("X", f"Z+i*{h}"), 1, n))
    else:
        h = _mono("Y", (n - 1) // 2)
        phi = (f"X+i*{h} & Y*Z", f"Z & -X+i*{h}")
        psi = (f"X-i*{h} & Y*Z", f"Z & -X-i*{h}")
        out.append(CatalogEntry(kind, n - 1, _mf(phi, psi, f), ("Z", f"X+i*{h}"), 1, n))
        out.append(CatalogEntry(kind, n, _mf(psi, phi, f), ("Z", f"X-i*{h}"), 1, n - 1))
    return out


# -- E6: X^2 + Y^3 + Z^4 -----------------------------------------------------------------

E6_F = "X^2+Y^3+Z^4"

E6_MATRICES: Dict[str, Rows] = {
    "1": (
        "-X & 0 & Y^2 & Z^3",
        "0 & -X & Z & -Y",
        "Y & Z^3 & X & 0",
        "Z & -Y^2 & 0 & X",
    ),
    "2phi": (
        "-i*X & -Z^2 & Y*Z & 0 & Y^2 & 0",
        "-Z^2 & -i*X & 0 & 0 & 0 & Y",
        "0 & 0 & -i*X & -Y & 0 & Z",
        "0 & Y*Z & -Y^2 & -i*X & Z^3 & 0",
        "Y & 0 & 0 & Z & -i*X & 0",
        "0 & Y^2 & Z^3 & 0 & Y*Z^2 & -i*X",
    ),
    "2psi": (
        "i*X & -Z^2 & Y*Z & 0 & Y^2 & 0",
        "-Z^2 & i*X & 0 & 0 & 0 & Y",
        "0 & 0 & i*X & -Y & 0 & Z",
        "0 & Y*Z & -Y^2 & i*X & Z^3 & 0",
        "Y & 0 & 0 & Z & i*X & 0",
        "0 & Y^2 & Z^3 & 0 & Y*Z^2 & i*X",
    ),
    "3": (
        "-Z^2+i*X & 0 & Y*Z & Y",
        "-Y*Z & Z^2+i*X & Y^2 & 0",
        "0 & Y & i*X & Z",
        "Y^2 & -Y*Z & Z^3 & i*X",
    ),
    "4": (
        "-Z^2-i*X & 0 & Y*Z & Y",
        "-Y*Z & Z^2-i*X & Y^2 & 0",
        "0 & Y & -i*X & Z",
        "Y^2 & -Y*Z & Z^3 & -i*X",
    ),
    "5": (
        "-Z^2+i*X & Y",
        "Y^2 & Z^2+i*X",
    ),
    "6": (
        "-Z^2-i*X & Y",
        "Y^2 & Z^2-i*X",
    ),
}

E6_IDEALS = {
    1: ("X", "Y", "Z"),
    2: ("X", "Y^2", "Y*Z", "Z^2"),
    3: ("i*X+Z^2", "Y^2", "Y*Z"),
    4: ("-i*X+Z^2", "Y^2", "Y*Z"),
    5: ("-i*X+Z^2", "Y"),
    6: ("i*X+Z^2", "Y"),
}


def e6_catalog() -> List[CatalogEntry]:
    m = E6_MATRICES
    pairs = {1: (m["1"], m["1"]), 2: (m["2phi"], m["2psi"]), 3: (m["3"], m["4"]),
             4: (m["4"], m["3"]), 5: (m["5"], m["6"]), 6: (m["6"], m["5"])}
    ranks = {1: 2, 2: 3, 3: 2, 4: 2, 5: 1, 6: 1}
    duals = {1: 1, 2: 2, 3: 4, 4: 3, 5: 6, 6: 5}
    return [CatalogEntry("E6", j, _mf(*pairs[j], E6_F), E6_IDEALS[j], ranks[j], duals[j])
            for j in range(1, 7)]


# -- E7: X^2 + Y^3 + YZ^3, all self-paired ----------------------------------------------------

E7_F = "X^2+Y^3+Y*Z^3"

E7_MATRICES: Dict[int, Rows] = {
    7: (
        "X & Y",
        "Y^2+Z^3 & -X",
    ),
    1: (
        "X & 0 & -Y^2 & Z",
        "0 & X & Y*Z^2 & Y",
        "-Y & Z & -X & 0",
        "Y*Z^2 & Y^2 & 0 & -X",
    ),
    4: (
        "-X & Z^2 & 0 & Y",
        "Y*Z & X & -Y^2 & 0",
        "0 & -Y & -X & Z",
        "Y^2 & 0 & Y*Z^2 & X",
    ),
    6: (
        "X & 0 & -Y*Z & Y",
        "0 & X & Y^2 & Z^2",
        "-Z^2 & Y & -X & 0",
        "Y^2 & Y*Z & 0 & -X",
    ),
    2: (
        "-X & Z^2 & Y*Z & 0 & Y^2 & 0",
        "Y*Z & X & 0 & 0 & 0 & -Y",
        "0 & 0 & X & -Y & 0 & Z",
        "0 & -Y*Z & -Y^2 & -X & Y*Z^2 & 0",
        "Y & 0 & 0 & Z & X & 0",
        "0 & -Y^2 & Y*Z^2 & 0 & Y^2*Z & -X",
    ),
    5: (
        "-X & 0 & Y*Z & 0 & 0 & Y",
        "-Y*Z & X & 0 & -Z^2 & -Y^2 & 0",
        "Z^2 & 0 & X & -Y & Y*Z & 0",
        "0 & -Y*Z & -Y^2 & -X & 0 & 0",
        "0 & -Y & 0 & 0 & -X & -Z",
        "Y^2 & 0 & 0 & Y*Z & -Y*Z^2 & X",
    ),
    3: (
        "-X & 0 & Y*Z & -Z^2 & 0 & 0 & Y^2 & 0",
        "0 & -X & 0 & Z^2 & 0 & 0 & 0 & Y",
        "Z^2 & Z^2 & X & 0 & 0 & -Y & 0 & 0",
        "0 & Y*Z & 0 & X & -Y^2 & 0 & 0 & 0",
        "0 & 0 & 0 & -Y & -X & 0 & 0 & Z",
        "0 & 0 & -Y^2 & 0 & 0 & -X & Y*Z^2 & Z^2",
        "Y & 0 & 0 & 0 & -Z^2 & Z & X & 0",
        "0 & Y^2 & 0 & 0 & Y*Z^2 & 0 & 0 & X",
    ),
}

E7_IDEALS = {
    1: ("X", "Y", "Z"),
    2: ("X", "Y^2", "Y*Z", "Z^2"),
    3: ("X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^3"),
    4: ("X", "Y^2", "Y*Z"),
    5: ("X*Y", "X*Z", "Y^2", "Y*Z^2"),
    6: ("X", "Y", "Z^2"),
    7: ("X", "Y"),
}
E7_RANKS = {1: 2, 2: 3, 3: 4, 4: 2, 5: 3, 6: 2, 7: 1}


def e7_catalog() -> List[CatalogEntry]:
    return [CatalogEntry("E7", j, _self(E7_MATRICES[j], E7_F), E7_IDEALS[j], E7_RANKS[j], j)
            for j in range(1, 8)]


# -- E8: X^2 + Y^3 + Z^5, all self-paired ------------------------------------------------------

E8_F = "X^2+Y^3+Z^5"

E8_MATRICES: Dict[int, Rows] = {
    1: (
        "X & 0 & Y & Z",
        "0 & X & Z^4 & -Y^2",
        "Y^2 & Z & -X & 0",
        "Z^4 & -Y & 0 & -X",
    ),
    8: (
        "X & 0 & Y & Z^2",
        "0 & X & Z^3 & -Y^2",
        "Y^2 & Z^2 & -X & 0",
        "Z^3 & -Y & 0 & -X",
    ),
    2: (
        "X & -Z^2 & Y*Z & 0 & -Y^2 & 0",
        "-Z^3 & -X & 0 & 0 & 0 & Y",
        "0 & 0 & -X & Y & 0 & Z",
        "0 & -Y*Z & Y^2 & X & Z^4 & 0",
        "-Y & 0 & 0 & Z & -X & 0",
        "0 & Y^2 & Z^4 & 0 & -Y*Z^3 & X",
    ),
    6: (
        "-X & 0 & 0 & Z^2 & 0 & Y",
        "Y*Z & X & -Z^3 & 0 & -Y^2 & 0",
        "0 & -Z^2 & -X & Y & 0 & 0",
        "Z^3 & 0 & Y^2 & X & -Y*Z^2 & 0",
        "0 & -Y & 0 & 0 & -X & Z",
        "Y^2 & 0 & -Y*Z^2 & 0 & Z^4 & X",
    ),
    3: (
        "-X & 0 & -Y*Z & Z^2 & 0 & 0 & Y^2 & 0",
        "0 & -X & Z^3 & 0 & 0 & 0 & 0 & Y",
        "0 & Z^2 & X & 0 & 0 & -Y & 0 & 0",
        "Z^3 & Y*Z & 0 & X & -Y^2 & 0 & 0 & 0",
        "0 & 0 & 0 & -Y & -X & 0 & Z^3 & Z",
        "0 & 0 & -Y^2 & 0 & 0 & -X & 0 & Z^2",
        "Y & 0 & 0 & 0 & Z^2 & -Z & X & 0",
        "0 & Y^2 & 0 & 0 & 0 & Z^3 & 0 & X",
    ),
    7: (
        "X & 0 & 0 & 0 & -Z^3 & 0 & 0 & -Y",
        "Y*Z & -X & 0 & 0 & 0 & Z^2 & Y^2 & 0",
        "0 & 0 & -X & Z^2 & 0 & Y & -Z^3 & 0",
        "0 & 0 & 0 & X & -Y^2 & 0 & 0 & Z^2",
        "-Z^2 & 0 & 0 & -Y & -X & 0 & 0 & 0",
        "0 & Z^3 & Y^2 & 0 & Y*Z^2 & X & 0 & 0",
        "0 & Y & -Z^2 & 0 & 0 & 0 & X & Z",
        "-Y^2 & 0 & 0 & Z^3 & 0 & 0 & 0 & -X",
    ),
    4: (
        "X & 0 & Y*Z & 0 & 0 & -Z^2 & Z^3 & 0 & -Y^2 & 0",
        "0 & -X & 0 & 0 & 0 & 0 & 0 & -Z^2 & 0 & Y",
        "0 & 0 & -X & Z^2 & 0 & 0 & 0 & Y & 0 & 0",
        "0 & Y*Z & Z^3 & X & 0 & 0 & -Y^2 & 0 & 0 & 0",
        "0 & Z^2 & 0 & 0 & X & -Y & 0 & 0 & Z^3 & 0",
        "-Z^3 & 0 & 0 & 0 & -Y^2 & -X & 0 & 0 & 0 & Z^2",
        "0 & 0 & 0 & -Y & 0 & 0 & -X & 0 & 0 & Z",
        "0 & -Z^3 & Y^2 & 0 & 0 & 0 & Y*Z^2 & X & 0 & 0",
        "-Y & 0 & 0 & 0 & Z^2 & 0 & 0 & Z & -X & 0",
        "0 & Y^2 & Y*Z^2 & 0 & 0 & 0 & Z^4 & 0 & 0 & X",
    ),
    5: (
        "-X & 0 & 0 & 0 & 0 & 0 & 0 & Z^2 & 0 & 0 & 0 & Y",
        "0 & -X & -Y*Z & 0 & 0 & 0 & Z^3 & -Z^2 & 0 & 0 & Y^2 & 0",
        "0 & 0 & X & 0 & 0 & -Z^2 & 0 & 0 & Z^3 & -Y & 0 & 0",
        "Y*Z & 0 & 0 & X & -Z^3 & 0 & 0 & 0 & -Y^2 & 0 & 0 & 0",
        "0 & 0 & 0 & -Z^2 & -X & 0 & 0 & Y & 0 & 0 & 0 & 0",
        "0 & 0 & -Z^3 & 0 & 0 & -X & -Y^2 & 0 & 0 & 0 & Y*Z^2 & Z^2",
        "Z^2 & Z^2 & 0 & 0 & 0 & -Y & X & 0 & 0 & 0 & 0 & 0",
        "Z^3 & 0 & 0 & 0 & Y^2 & 0 & 0 & X & -Y*Z^2 & 0 & 0 & 0",
        "0 & 0 & 0 & -Y & 0 & 0 & 0 & 0 & -X & 0 & 0 & Z",
        "0 & 0 & -Y^2 & -Z^3 & 0 & 0 & Y*Z^2 & 0 & 0 & -X & -Z^4 & 0",
        "0 & Y & 0 & 0 & Z^2 & 0 & 0 & 0 & 0 & -Z & X & 0",
        "Y^2 & 0 & 0 & 0 & -Y*Z^2 & 0 & 0 & 0 & Z^4 & 0 & 0 & X",
    ),
}

E8_IDEALS = {
    1: ("X", "Y", "Z"),
    2: ("X", "Y^2", "Y*Z", "Z^2"),
    3: ("X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^3"),
    4: ("X*Y", "X*Z^2", "Y^3", "Y^2*Z", "Y*Z^3", "Z^4"),
    5: ("X*Y^2", "X*Y*Z^2", "X*Z^4", "Y^4", "Y^3*Z", "Y^2*Z^3", "Z^5"),
    6: ("X", "Y^2", "Y*Z", "Z^3"),
    7: ("X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^4"),
    8: ("X", "Y", "Z^2"),
}
E8_RANKS = {1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: 3, 7: 4, 8: 2}


def e8_catalog() -> List[CatalogEntry]:
    return [CatalogEntry("E8", j, _self(E8_MATRICES[j], E8_F), E8_IDEALS[j], E8_RANKS[j], j)
            for j in range(1, 9)]


# -- A-infinity: XY ------------------------------------------------------------------------------

def a_inf_catalog(nmax: int = 3) -> List[CatalogEntry]:
    """The two normalization components, then two rank one families indexed by n."""
    f = "X*Y"
    out = [CatalogEntry("AInfinity", "X", _mf(("X",), ("Y",), f), ("X",), None, "X"),
           CatalogEntry("AInfinity", "Y", _mf(("Y",), ("X",), f), ("Y",), None, "Y")]
    for n in range(1, nmax + 1):
        z = _mono("Z", n)
        a = (f"Y & {z}", "0 & X")
        b = (f"X & -{z}", "0 & Y")
        out.append(CatalogEntry("AInfinity", ("YZ", n), _mf(a, b, f), ("Y", z), 1, ("XZ", n)))
        out.append(CatalogEntry("AInfinity", ("XZ", n), _mf(b, a, f), ("X", f"-{z}"), 1, ("YZ", n)))
    return out


# -- D-infinity: X^2 Y - Z^2 ----------------------------------------------------------------------

def d_inf_catalog(nmax: int = 3) -> List[CatalogEntry]:
    """Two rank one entries, then two rank two families indexed by n; all self-dual."""
    f = "X^2*Y-Z^2"
    out = [CatalogEntry("DInfinity", "i", _mf(("Z & X*Y", "X & Z"), ("-Z & X*Y", "X & -Z"), f),
                        ("X", "Z"), 1, "i"),
           CatalogEntry("DInfinity", "ii", _mf(("X^2 & Z", "Z & Y"), ("Y & -Z", "-Z & X^2"), f),
                        ("Z", "Y"), 1, "ii")]
    for n in range(1, nmax + 1):
        y, y1 = _mono("Y", n), _mono("Y", n + 1)
        phi3 = (f"Z & X*Y & 0 & -{y1}", f"X & Z & {y} & 0", "0 & 0 & Z & X*Y", "0 & 0 & X & Z")
        # second matrices carry the sign pattern diag(1,-1,1,-1) on the right so phi*psi = f*Id
        psi3 = (f"-Z & X*Y & 0 & -{y1}", f"X & -Z & {y} & 0", "0 & 0 & -Z & X*Y", "0 & 0 & X & -Z")
        phi4 = (f"Z & X*Y & -{y} & 0", f"X & Z & 0 & {y}", "0 & 0 & Z & X*Y", "0 & 0 & X & Z")
        psi4 = (f"-Z & X*Y & -{y} & 0", f"X & -Z & 0 & {y}", "0 & 0 & -Z & X*Y", "0 & 0 & X & -Z")
        out.append(CatalogEntry("DInfinity", ("iii", n), _mf(phi3, psi3, f),
                                (y1, "-X*Y", "Z"), 2, ("iii", n)))
        out.append(CatalogEntry("DInfinity", ("iv", n), _mf(phi4, psi4, f),
                                (y, "-Z", "X"), 2, ("iv", n)))
    return out


# -- Fermat: phi_{r,s} phi_{s,r} = -(X^n + Y^n + Z^n) ---------------------------------------------

def fermat_phi(r: int, s: int) -> Rows:
    xr, yr, zr = _mono("X", r), _mono("Y", r), _mono("Z", r)
    xs, ys, zs = _mono("X", s), _mono("Y", s), _mono("Z", s)
    return (f"0 & {zr} & -{yr} & {xs}",
            f"-{zr} & 0 & {xr} & {ys}",
            f"{yr} & -{xr} & 0 & {zs}",
            f"-{xs} & -{ys} & -{zs} & 0")


def fermat_matfac(r: int, s: int) -> MatFac:
    if r < 1 or s < 1:
        raise MatFacError("r and s must be positive")
    n = r + s
    return _mf(fermat_phi(r, s), fermat_phi(s, r), f"X^{n}+Y^{n}+Z^{n}", sign=-1)


def fermat_catalog(n: int) -> List[CatalogEntry]:
    if n < 2:
        raise MatFacError("the Fermat degree must be >= 2")
    return [CatalogEntry(f"Fermat({n})", (r, n - r), fermat_matfac(r, n - r),
                         tuple(_mono(v, r) for v in NAMES), 2, (r, n - r))
            for r in range(1, n)]


# -- the splitting example on D_4 --------------------------------------------------------------

D4_SPLIT_PHI0: Rows = (
    "-X & Y^2 & Y*Z & 0",
    "Y & X & 0 & -Z",
    "Z & 0 & X & Y",
    "0 & -Y*Z & Y^2 & -X",
)
D4_SPLIT_PHI1: Rows = ("X & i*Y^2+Y*Z", "Z-i*Y & -X")
D4_SPLIT_PHI2: Rows = ("X & -i*Y^2+Y*Z", "Z+i*Y & -X")
D4_SPLIT_ALPHA = ((1j, 0, 0, -1), (0, -1, -1j, 0), (-1j, 0, 0, -1), (0, -1, 1j, 0))


def d4_split_example() -> Tuple[PolyMatrix, PolyMatrix, MatFac, MatFac]:
    """(alpha, -alpha) from (phi0, phi0) to (phi1, phi1) + (phi2, phi2) for X^2+Y^3+YZ^2."""
    f = "X^2+Y^3+Y*Z^2"
    source = _self(D4_SPLIT_PHI0, f)
    target = _self(D4_SPLIT_PHI1, f).direct_sum(_self(D4_SPLIT_PHI2, f))
    alpha = constant_matrix([[Gauss(int(c.real), int(c.imag)) if isinstance(c, complex) else c
                              for c in row] for row in D4_SPLIT_ALPHA])
    return alpha, -alpha, source, target


# -- lookup ----------------------------------------------------------------------------------------

def catalog(kind: str, nmax: int = 3) -> List[CatalogEntry]:
    """Entries for a kind such as 'A(3)', 'D5', 'E8', 'Ainf', 'Dinf' or 'Fermat(5)'.

    nmax bounds the family parameter for A-infinity and D-infinity.
    """
    m = re.fullmatch(r"\s*fermat\s*\(?\s*(\d+)\s*\)?\s*", kind, re.I)
    if m:
        return fermat_catalog(int(m.group(1)))
    k = ADEKind.parse(kind)
    builders = {"A": lambda: a_n_catalog(k.n), "D": lambda: d_n_catalog(k.n),
                "E6": e6_catalog, "E7": e7_catalog, "E8": e8_catalog,
                "AInfinity": lambda: a_inf_catalog(nmax), "DInfinity": lambda: d_inf_catalog(nmax)}
    if k.tag not in builders:
        raise MatFacError(f"no catalog for {k}")
    return builders[k.tag]()
