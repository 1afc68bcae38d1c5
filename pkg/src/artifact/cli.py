"""Command-line front end: one subcommand per module.

  artifact delta --p 3 --t 1/7,1/7,1/7            -> 1/63
  artifact hkf --type E6 --p 5 --e 1 --format json
  artifact fermat period --n 14 --p 37

Exit codes: 0 success, 1 usage error (the message names the flag), 2 domain
error (the message starts with the error class name).  JSON output is an
envelope {command, inputs, result, provenance, version} with sorted keys and
rationals rendered as "num/den".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import __version__, ade, catalog, delta, fermat, hkm, matfac, oracle, selftest, series
from .polyring import (PrimeField, WeightedRingSpec, default_names, format_rational,
                       parse_poly, parse_rational)

FORMULA, ORACLE = "formula", "oracle"
FORMATS = ("text", "json", "csv")

DOMAIN_ERRORS = (ValueError, ArithmeticError, KeyError)


class UsageError(Exception):
    pass


@dataclass
class Output:
    result: Any
    text: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    provenance: str = FORMULA
    rows: Optional[List[List[Any]]] = None     # csv rows; header first
    failed: bool = False


class Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# -- argument types ------------------------------------------------------------------------

def _type(name: str, convert: Callable[[str], Any]) -> Callable[[str], Any]:
    def inner(text: str):
        try:
            return convert(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"{text!r}: {exc}") from None
    inner.__name__ = name
    return inner


def _prime(text: str) -> int:
    p = int(text)
    if p < 2:
        raise ValueError("a prime characteristic >= 2 is required")
    return p


def _natural(text: str) -> int:
    n = int(text)
    if n < 0:
        raise ValueError("must be >= 0")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise ValueError("must be >= 1")
    return n


def _int_list(text: str) -> List[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _rat_list(text: str) -> List[Fraction]:
    return [parse_rational(x.strip()) for x in text.split(",") if x.strip()]


def _str_list(text: str) -> List[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


PRIME = _type("prime", _prime)
NATURAL = _type("natural", _natural)
POSITIVE = _type("positive", _positive)
INTS = _type("int_list", _int_list)
RATS = _type("rational_list", _rat_list)
STRS = _type("string_list", _str_list)


def _optional(inputs: Dict[str, Any], args, *names: str) -> Dict[str, Any]:
    """Record optional flags that were given, so the inputs replay the call."""
    for name in names:
        value = getattr(args, name, None)
        if value is not None and value is not False:
            inputs[name] = value
    return inputs


def _need(args, flag: str, count: Optional[int] = None):
    value = getattr(args, flag.lstrip("-").replace("-", "_"))
    if value is None:
        raise UsageError(f"{flag} is required")
    if count is not None and len(value) != count:
        raise UsageError(f"{flag} needs {count} comma-separated entries, got {len(value)}")
    return value


# -- rendering --------------------------------------------------------------------------------

def jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "as_dict"):
        return jsonable(x.as_dict())
    return str(x)


def render(command: str, out: Output, fmt: str) -> str:
    if fmt == "json":
        env = {"command": command, "inputs": jsonable(out.inputs), "result": jsonable(out.result),
               "provenance": out.provenance, "version": __version__}
        return json.dumps(env, sort_keys=True, indent=2)
    if fmt == "csv":
        rows = out.rows
        if rows is None:
            keys = sorted(out.inputs)
            rows = [keys + ["value"], [jsonable(out.inputs[k]) for k in keys] + [out.text]]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for r in rows:
            writer.writerow([_csv_cell(c) for c in r])
        return buf.getvalue().rstrip("\n")
    return out.text


def _csv_cell(c: Any) -> str:
    c = jsonable(c)
    if isinstance(c, list):
        return ",".join(str(v) for v in c)
    return "" if c is None else str(c)


def _rat(x) -> str:
    return format_rational(Fraction(x))


# -- delta and sg -----------------------------------------------------------------------------

def cmd_delta(args) -> Output:
    t = _need(args, "--t", 3)
    res = delta.delta_details(args.p, t)
    result = {"value": res.value}
    if res.s is not None:
        result["s"] = res.s
        result["witness_corner"] = list(res.witness_corner)
    return Output(result, _rat(res.value), {"p": args.p, "t": t})


def _two_var_ring(weights: Optional[List[int]]) -> WeightedRingSpec:
    weights = weights or [1, 1]
    if len(weights) != 2:
        raise UsageError("--weights needs 2 entries for a syzygy gap")
    return WeightedRingSpec(("X", "Y"), weights)


def cmd_sg(args) -> Output:
    spec = _two_var_ring(args.weights)
    dom = PrimeField(args.p)
    if args.a is not None:
        a = _need(args, "--a", 3)
        gens = [f"X^{a[0]}", f"Y^{a[1]}", f"(X+Y)^{a[2]}"]
    else:
        gens = _need(args, "--gens")
    polys = [parse_poly(g, spec.names, dom) for g in gens]
    gap = oracle.syz_gap(spec, polys, args.p)
    result = {"value": gap, "min_degree": oracle.syz_min_degree(spec, polys, args.p)}
    inputs = {"p": args.p, "weights": list(spec.weights)}
    if args.a is not None:
        inputs["a"] = list(args.a)
    else:
        inputs["gens"] = gens
    if args.a is not None and spec.weights == (1, 1):
        result["delta"] = delta.delta(args.p, args.a)
        result["agree"] = result["delta"] == gap
    return Output(result, str(gap), inputs, ORACLE)


# -- hkm ------------------------------------------------------------------------------------------

def cmd_hkm(args) -> Output:
    sub = args.hkm_command
    if sub == "tri":
        f = parse_poly(_need(args, "--f"), ("X", "Y", "Z"))
        t = _need(args, "--t", 3)
        res = hkm.hkm_standard_details(hkm.classify_trinomial(f), args.p, t)
        inputs = {"p": args.p, "f": args.f, "t": t}
    elif sub == "weighted":
        w = _need(args, "--weights", 3)
        f = parse_poly(_need(args, "--f"), ("U", "V", "W"))
        res = hkm.hkm_weighted_details(w, f, args.p)
        inputs = {"p": args.p, "f": args.f, "weights": w}
    elif sub == "diag":
        d = _need(args, "--d", 3)
        value = hkm.hkm_diagonal(*d, args.p)
        return Output({"value": value}, _rat(value), {"p": args.p, "d": d})
    elif sub == "binomial":
        a = _need(args, "--a")
        value = hkm.hkm_binomial(args.d, a)
        return Output({"value": value}, _rat(value), {"d": args.d, "a": a})
    else:
        return _hkm_family(args)
    return Output(res.as_dict(), _rat(res.value), inputs)


def _hkm_family(args) -> Output:
    fam = hkm.FamilySpec(args.kind, tuple(_need(args, "--params", 5)))
    Ls = _need(args, "--L")
    points = []
    for L in Ls:
        pt = hkm.family_point(fam, args.p, L)
        points.append({"L": L, "value": pt.value, "weights": list(pt.weights), "type": pt.kind,
                       "delta_args": list(pt.delta_args), "off_triangle": pt.off_triangle})
    limit = hkm.family_limit(fam)
    rows = [["kind", "params", "p", "L", "value"]]
    rows += [[args.kind, list(fam.params), args.p, pt["L"], pt["value"]] for pt in points]
    text = "\n".join(f"L={pt['L']}: {_rat(pt['value'])}" for pt in points) + f"\nlimit: {_rat(limit)}"
    inputs = {"kind": args.kind, "params": list(fam.params), "p": args.p, "L": Ls}
    return Output({"points": points, "limit": limit}, text, inputs, rows=rows)


# -- ADE hkf and fsig ----------------------------------------------------------------------------

def _kind(args) -> ade.ADEKind:
    return ade.ADEKind.parse(_need(args, "--type"), args.n)


def _es(args) -> List[int]:
    return list(range(args.e + 1)) if args.series_upto else [args.e]


def cmd_hkf(args) -> Output:
    if args.ideal:
        value = ade.e8_ideal_hkf(args.ideal, args.p, args.e)
        inputs = {"type": "E8", "ideal": args.ideal, "p": args.p, "e": args.e}
        return Output({"q": args.p ** args.e, "value": value, "branch": "ideal", "class": None},
                      _rat(value), inputs)
    kind = _kind(args)
    inputs = _optional({"type": str(kind), "p": args.p, "e": args.e}, args,
                       "series_upto", "oracle", "max_degree")
    if args.oracle:
        spec = kind.presentation()
        value = Fraction(oracle.frobenius_colength(spec, args.p, args.p ** args.e,
                                                   max_degree=args.max_degree))
        return Output({"q": args.p ** args.e, "value": value, "branch": ORACLE, "class": None},
                      str(value), inputs, ORACLE)
    rows = [["type", "p", "e", "q", "value", "branch"]]
    results = []
    for e in _es(args):
        res = ade.hkf_details(kind, args.p, e)
        try:
            cls = ade.syz_class(kind, args.p, e).as_dict() if e >= 1 else None
        except ade.ADEError:
            cls = None
        d = res.as_dict()
        d["value"] = res.value
        d["class"] = cls
        results.append(d)
        rows.append([str(kind), args.p, e, res.q, res.value, res.branch])
    if not args.series_upto:
        return Output(results[0], _rat(results[0]["value"]), inputs, rows=rows)
    text = "\n".join(f"e={e}: {_rat(r['value'])}" for e, r in zip(_es(args), results))
    return Output(results, text, inputs, rows=rows)


def cmd_fsig(args) -> Output:
    kind = _kind(args)
    rows = [["type", "p", "e", "q", "value", "branch"]]
    results = []
    for e in _es(args):
        res = ade.fsig_details(kind, args.p, e)
        d = res.as_dict()
        d["value"] = res.value
        results.append(d)
        rows.append([str(kind), args.p, e, res.q, res.value, res.branch])
    inputs = _optional({"type": str(kind), "p": args.p, "e": args.e}, args, "series_upto")
    if not args.series_upto:
        return Output(results[0], _rat(results[0]["value"]), inputs, rows=rows)
    text = "\n".join(f"e={e}: {_rat(r['value'])}" for e, r in zip(_es(args), results))
    return Output(results, text, inputs, rows=rows)


# -- series ----------------------------------------------------------------------------------------

def _ring(args, names: Optional[Sequence[str]] = None) -> WeightedRingSpec:
    weights = _need(args, "--weights")
    names = tuple(names or default_names(len(weights)))
    relation = parse_poly(args.relation, names) if args.relation else None
    return WeightedRingSpec(names, weights, relation)


def _series_output(h: series.HilbertSeries, inputs: dict, expand: Optional[int],
                   provenance: str = FORMULA) -> Output:
    result = h.as_dict()
    text = f'num="{h.numerator_string()}"\nden="{h.den_string()}"'
    if expand is not None:
        coeffs = series.hs_expand(h, expand)
        result["expansion"] = coeffs
        text += "\nexpansion=" + ",".join(str(c) for c in coeffs)
    return Output(result, text, inputs, provenance)


def cmd_series(args) -> Output:
    if args.series_command == "fixture":
        from .series_tables import fixture_by_name, series_fixtures
        if args.name is None:
            names = [fx.name for fx in series_fixtures()]
            return Output({"fixtures": names}, "\n".join(names), {})
        fx = fixture_by_name(args.name)
        h = fx.compute()
        out = _series_output(h, _optional({"name": args.name}, args, "expand"), args.expand)
        out.result.update({"published_match": h == fx.expected(), "erratum": fx.erratum,
                           "rank": fx.rank})
        return out
    spec = _ring(args, ("X", "Y", "Z"))
    inputs = _optional({"weights": list(spec.weights), "relation": args.relation}, args, "expand")
    if args.series_command == "ring":
        return _series_output(series.hs_ring(spec), inputs, args.expand)
    if args.series_command == "syz":
        gens = _need(args, "--gens")
        inputs.update({"gens": gens, "p": args.p})
        return _series_output(series.hs_monomial_syz(spec, gens, args.p), inputs, args.expand)
    a = _need(args, "--a")
    vhead, vtail = _need(args, "--vhead"), args.vtail or []
    inputs.update({"a": a, "vhead": vhead, "vtail": vtail, "p": args.p})
    return _series_output(series.hs_Ma(spec, a, vhead, vtail, args.p), inputs, args.expand)


# -- fermat ----------------------------------------------------------------------------------------

def cmd_fermat(args) -> Output:
    n, p = args.n, args.p
    inputs = {"n": n, "p": p}
    sub = args.fermat_command
    if sub == "status":
        status = fermat.is_strongly_semistable(n, p)
        result = {"semistable": status, "delta": fermat._delta(n, p).value}
        if status == fermat.NO:
            result["hn"] = fermat.hn_filtration(n, p).as_dict()
        return Output(result, status, inputs)
    if sub == "period":
        per = fermat.period(n, p)
        result = {"semistable": fermat.is_strongly_semistable(n, p),
                  "period": None if per is None else {"s": per[0], "t": per[1]}}
        return Output(result, "absent" if per is None else f"({per[0]},{per[1]})", inputs)
    if sub == "class":
        N = _need(args, "--N")
        inputs["N"] = N
        cls = fermat.syz_class(n, N, p)
        return Output({"class": cls.as_dict()}, f"Syz(X^{cls.class_exp},Y^{cls.class_exp},"
                      f"Z^{cls.class_exp})({_rat(cls.shift)})", inputs)
    if sub == "projdim":
        N = _need(args, "--N")
        inputs["N"] = N
        finite = fermat.finite_projdim(n, p, N)
        return Output({"finite_projdim": finite}, "finite" if finite else "infinite", inputs)
    e = _need(args, "--e")
    inputs["e"] = e
    _optional(inputs, args, "series_upto", "oracle", "max_degree")
    es = list(range(e + 1)) if args.series_upto else [e]
    rows = [["n", "p", "e", "q", "value", "branch"]]
    hkfs = []
    for k in es:
        r = fermat.hkf_fermat(n, p, k)
        item = r.as_dict()
        item["value"] = r.value
        if args.oracle:
            item["oracle"] = oracle.frobenius_colength(fermat.fermat_spec(n), p, r.q,
                                                       max_degree=args.max_degree)
        hkfs.append(item)
        rows.append([n, p, k, r.q, r.value, r.branch])
    text = "\n".join(("" if len(es) == 1 else f"e={k}: ")
                     + ("indeterminate" if h["value"] is None else _rat(h["value"]))
                     + (f" (oracle {h['oracle']})" if "oracle" in h else "")
                     for k, h in zip(es, hkfs))
    q = p ** e
    free = fermat.finite_projdim(n, p, q)
    result = {"semistable": fermat.is_strongly_semistable(n, p),
              "class": None if free else fermat.syz_class(n, q).as_dict(),
              "hkf": hkfs[0] if len(es) == 1 else hkfs}
    return Output(result, text, inputs, rows=rows)


# -- matfac ----------------------------------------------------------------------------------------

def cmd_matfac(args) -> Output:
    if args.matfac_command == "verify":
        path = _need(args, "--file")
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise UsageError(f"--file: {exc}") from None
        items = data if isinstance(data, list) else [data]
        results = []
        for item in items:
            mf = matfac.MatFac.from_dict(item, check=False)
            v = matfac.verify(mf)
            entry = {"ok": v.ok, "size": mf.size,
                     "witness": None if v.witness is None else list(v.witness)}
            if v.ok and args.rank:
                entry["rank"] = matfac.det_rank(mf)
            results.append(entry)
        ok = all(r["ok"] for r in results)
        text = "\n".join(("ok" if r["ok"] else f"FAIL at {r['witness']}")
                         + (f" rank {r['rank']}" if "rank" in r else "") for r in results)
        return Output(results[0] if len(results) == 1 else results, text, {"file": path},
                      failed=not ok)
    kind = _need(args, "--type")
    entries = catalog.catalog(kind, args.nmax)
    out = []
    rows = [["kind", "index", "rank", "dual", "ok"]]
    for en in entries:
        d = en.as_dict()
        d["ok"] = matfac.verify(en.matfac).ok
        out.append(d)
        rows.append([en.kind, str(en.index), en.rank, str(en.dual_index), d["ok"]])
    text = "\n".join(f"{en.kind} {en.index}: size {en.matfac.size}, rank {en.rank}, "
                     f"ideal ({', '.join(en.ideal)}), {'ok' if d['ok'] else 'FAIL'}"
                     for en, d in zip(entries, out))
    return Output(out, text, {"type": kind, "nmax": args.nmax}, rows=rows)


# -- oracle ----------------------------------------------------------------------------------------

def cmd_oracle(args) -> Output:
    spec = _ring(args)
    dom = PrimeField(args.p)
    gens = _need(args, "--gens")
    polys = [parse_poly(g, spec.names, dom) for g in gens]
    inputs = _optional({"p": args.p, "weights": list(spec.weights), "relation": args.relation,
                        "gens": gens}, args, "max_degree")
    sub = args.oracle_command
    if sub in ("quotdim", "hf"):
        res = oracle.quotient_hilbert_function(oracle.QuotientProblem(spec, tuple(polys), args.p),
                                               args.max_degree)
        if sub == "quotdim" and not res.artinian:
            raise oracle.NonArtinian(f"no zero window up to degree {len(res.values) - 1}")
        text = str(res.total) if sub == "quotdim" else ",".join(str(v) for v in res.values)
        return Output(res.as_dict(), text, inputs, ORACLE)
    if sub == "sg":
        gap = oracle.syz_gap(spec, polys, args.p)
        return Output({"value": gap}, str(gap), inputs, ORACLE)
    degs = oracle.syz_generator_degrees(spec, polys, args.p)
    return Output({"values": degs}, ",".join(str(d) for d in degs), inputs, ORACLE)


# -- selftest --------------------------------------------------------------------------------------

def cmd_selftest(args) -> Output:
    results = selftest.run(full=args.full, only=args.only)
    width = max((len(r.name) for r in results), default=4)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name:<{width}}  {r.seconds:7.2f}s  {r.detail}"
             for r in results]
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    rows = [["check", "ok", "seconds", "detail"]]
    rows += [[r.name, r.ok, f"{r.seconds:.3f}", r.detail] for r in results]
    return Output([r.as_dict() for r in results], "\n".join(lines),
                  {"tier": "full" if args.full else "quick"}, ORACLE, rows, passed != len(results))


# -- parser ----------------------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--json", action="store_const", const="json", dest="format",
                   help="shorthand for --format json")


def _sub(subparsers, name: str, help_: str) -> argparse.ArgumentParser:
    p = subparsers.add_parser(name, help=help_)
    _common(p)
    return p


def _ade_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="A, D, E6, E7, E8, Ainf, Dinf, Veronese (or A(3), D5, ...)")
    p.add_argument("--n", type=POSITIVE, help="index for A, D and Veronese")
    p.add_argument("--p", type=PRIME, required=True)
    p.add_argument("--e", type=NATURAL, required=True)
    p.add_argument("--series-upto", action="store_true", help="report every e' <= e")


def build_parser() -> Parser:
    top = Parser(prog="artifact", description="Exact Hilbert-Kunz computations.")
    top.add_argument("--version", action="version", version=__version__)
    subs = top.add_subparsers(dest="command", parser_class=Parser)

    p = _sub(subs, "delta", "the delta function")
    p.add_argument("--p", type=PRIME, required=True)
    p.add_argument("--t", type=RATS, required=True, help="three rationals, e.g. 1/7,1/7,1/7")

    p = _sub(subs, "sg", "syzygy gap via the oracle")
    p.add_argument("--p", type=PRIME, required=True)
    p.add_argument("--a", type=INTS, help="exponents of X^a1, Y^a2, (X+Y)^a3")
    p.add_argument("--gens", type=STRS, help="forms in X, Y")
    p.add_argument("--weights", type=INTS)

    p = _sub(subs, "hkm", "Hilbert-Kunz multiplicities")
    hsub = p.add_subparsers(dest="hkm_command", parser_class=Parser, required=True)
    q = _sub(hsub, "tri", "trinomial in X, Y, Z with ideal (X^t1, Y^t2, Z^t3)")
    q.add_argument("--p", type=PRIME, required=True)
    q.add_argument("--f", required=True)
    q.add_argument("--t", type=RATS, default=[Fraction(1)] * 3)
    q = _sub(hsub, "weighted", "quasi-homogeneous trinomial in U, V, W")
    q.add_argument("--p", type=PRIME, required=True)
    q.add_argument("--f", required=True)
    q.add_argument("--weights", type=INTS, required=True)
    q = _sub(hsub, "diag", "U^d1 + V^d2 + W^d3")
    q.add_argument("--p", type=PRIME, required=True)
    q.add_argument("--d", type=INTS, required=True)
    q = _sub(hsub, "binomial", "X^d - Y1^a1 ... Yn^an")
    q.add_argument("--d", type=POSITIVE, required=True)
    q.add_argument("--a", type=INTS, required=True)
    q = _sub(hsub, "family", "families with a growing exponent L")
    q.add_argument("--kind", choices=sorted(hkm.FAMILY_PARAMS), required=True)
    q.add_argument("--params", type=INTS, required=True)
    q.add_argument("--L", type=INTS, required=True)
    q.add_argument("--p", type=PRIME, default=7)

    p = _sub(subs, "hkf", "Hilbert-Kunz function of an ADE ring")
    _ade_flags(p)
    p.add_argument("--ideal", choices=["X,Y,Z^2", "X,Y^2,Y*Z,Z^2"], help="E8 only")
    p.add_argument("--oracle", action="store_true", help="compute the colength by linear algebra")
    p.add_argument("--max-degree", type=POSITIVE)

    p = _sub(subs, "fsig", "F-signature function of an ADE ring")
    _ade_flags(p)

    p = _sub(subs, "series", "Hilbert series of syzygy modules")
    ssub = p.add_subparsers(dest="series_command", parser_class=Parser, required=True)
    for name, help_ in (("ma", "Syz(X^a*V_head, V_tail) by recursion"),
                        ("syz", "syzygies of monomials"), ("ring", "the ring itself")):
        q = _sub(ssub, name, help_)
        q.add_argument("--weights", type=INTS, required=True)
        q.add_argument("--relation", required=True)
        q.add_argument("--p", type=PRIME, default=series.DEFAULT_PRIME)
        q.add_argument("--expand", type=NATURAL)
        if name == "ma":
            q.add_argument("--a", type=POSITIVE, required=True)
            q.add_argument("--vhead", type=STRS, required=True)
            q.add_argument("--vtail", type=STRS)
        if name == "syz":
            q.add_argument("--gens", type=STRS, required=True)
    q = _sub(ssub, "fixture", "published tables")
    q.add_argument("--name", help="e.g. E6:M1; omit to list")
    q.add_argument("--expand", type=NATURAL)

    p = _sub(subs, "fermat", "Fermat curves X^n + Y^n + Z^n")
    fsub = p.add_subparsers(dest="fermat_command", parser_class=Parser, required=True)
    for name in ("status", "hkf", "period", "class", "projdim"):
        q = _sub(fsub, name, name)
        q.add_argument("--n", type=POSITIVE, required=True)
        q.add_argument("--p", type=PRIME, required=True)
        if name == "hkf":
            q.add_argument("--e", type=NATURAL, required=True)
            q.add_argument("--series-upto", action="store_true")
            q.add_argument("--oracle", action="store_true", help="also compute the colength")
            q.add_argument("--max-degree", type=POSITIVE)
        if name in ("class", "projdim"):
            q.add_argument("--N", type=POSITIVE, required=True)

    p = _sub(subs, "matfac", "matrix factorizations")
    msub = p.add_subparsers(dest="matfac_command", parser_class=Parser, required=True)
    q = _sub(msub, "verify", "check phi*psi = psi*phi = sign*f*Id")
    q.add_argument("--file", required=True, help="JSON {f, sign, phi, psi} or a list of them")
    q.add_argument("--rank", action="store_true", help="also report the rank")
    q = _sub(msub, "catalog", "the catalogued factorizations")
    q.add_argument("--type", required=True, help="A(n), D(n), E6, E7, E8, Ainf, Dinf, Fermat(n)")
    q.add_argument("--nmax", type=POSITIVE, default=3)

    p = _sub(subs, "oracle", "brute-force graded linear algebra")
    osub = p.add_subparsers(dest="oracle_command", parser_class=Parser, required=True)
    for name in ("quotdim", "hf", "sg", "syzdegs"):
        q = _sub(osub, name, name)
        q.add_argument("--p", type=PRIME, required=True)
        q.add_argument("--weights", type=INTS, required=True)
        q.add_argument("--relation")
        q.add_argument("--gens", type=STRS, required=True)
        q.add_argument("--max-degree", type=POSITIVE)

    p = _sub(subs, "selftest", "run the fixture checks")
    tier = p.add_mutually_exclusive_group()
    tier.add_argument("--quick", action="store_true", help="default")
    tier.add_argument("--full", action="store_true", help="include the large oracle runs")
    p.add_argument("--only", help="substring of a check name")
    return top


COMMANDS = {"delta": cmd_delta, "sg": cmd_sg, "hkm": cmd_hkm, "hkf": cmd_hkf, "fsig": cmd_fsig,
            "series": cmd_series, "fermat": cmd_fermat, "matfac": cmd_matfac,
            "oracle": cmd_oracle, "selftest": cmd_selftest}


def _command_name(args) -> str:
    parts = [args.command]
    for attr in ("hkm_command", "series_command", "fermat_command", "matfac_command",
                 "oracle_command"):
        if getattr(args, attr, None):
            parts.append(getattr(args, attr))
    return " ".join(parts)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DOMAIN_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    print(render(_command_name(args), out, args.format))
    return 1 if out.failed else 0


if __name__ == "__main__":
    sys.exit(main())
