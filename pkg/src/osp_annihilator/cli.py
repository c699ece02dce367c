"""Command-line frontend.

Weights are comma-separated exact rationals in beta-coordinates, e.g.
``--lambda "3/2,1/2"``.  Weyl group elements print in one-line notation:
``[+2,-1]`` sends beta_1 to beta_2 and beta_2 to -beta_1; products apply the
right factor first.

Exit codes: 0 success, 1 usage, 2 domain error, 3 verification failure,
4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import charmult, determinants, oracle, weyl
from .errors import DomainError, OspError, RankError, ResourceCapError
from .rootdata import (
    build_root_system,
    delta_lambda,
    format_rational,
    format_weight,
    is_dominant,
    parse_rational,
    parse_weight,
    verma_is_simple,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3
EXIT_CAP = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad input; 2 is reserved for domain errors here
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass
class CliConfig:
    command: str
    l: int
    json: bool
    cap: int
    args: argparse.Namespace


def _rational_int(text: str) -> int:
    x = parse_rational(text)
    if x.denominator != 1:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    return int(x)


def _weight(text: str, l: int):
    # malformed text is a usage error; a well-formed weight of the wrong rank is a domain error
    try:
        return parse_weight(text, l)
    except RankError:
        raise
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _wjson(w) -> list:
    return [format_rational(x) for x in w]


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=False, separators=(", ", ": "))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="osp-annihilator", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--l", type=_rational_int, required=True, help="rank of osp(1,2l)")
        s.add_argument("--json", action="store_true", help="emit JSON")
        s.add_argument("--weyl-cap", type=_rational_int, default=weyl.DEFAULT_CAP, help=f"Weyl group enumeration cap on l (default {weyl.DEFAULT_CAP})")
        return s

    cmd("roots", "root data in the orthonormal beta-basis")
    s = cmd("weyl", "Weyl group elements, lengths and the Poincare polynomial")
    s.add_argument("--list", action="store_true", help="list every element")
    s = cmd("tau", "Kostant partition functions tau and tau-bar")
    s.add_argument("--nu", required=True)
    s = cmd("mult", "weight multiplicity dim V(lambda)_mu")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu")
    s = cmd("hesselink", "graded multiplicities of V(lambda) in the harmonic space")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--order", type=_rational_int, default=10)
    s.add_argument("--method", choices=("direct", "alt", "both"), default="direct")
    s = cmd("shapovalov", "factorized Shapovalov determinant det S_nu")
    s.add_argument("--nu", required=True)
    s = cmd("prv", "factorized PRV determinant")
    s.add_argument("--lambda", dest="lam", required=True)
    s = cmd("annihilator", "is Ann M(lambda) centrally generated?")
    s.add_argument("--lambda", dest="lam", required=True)
    s = cmd("verify", "run the verification suite")
    s.add_argument("--depth", type=_rational_int, default=6)
    s.add_argument("--order", type=_rational_int, default=8)
    s = cmd("heslem", "the (gamma_r, w_r) table for r = 0..2l-1")
    return p


# ------------------------------------------------------------------ commands


def _roots(cfg: CliConfig):
    R = build_root_system(cfg.l)
    data = {
        "l": cfg.l,
        "simple": [_wjson(a) for a in R.simple],
        "even_pos": [_wjson(a) for a in R.even_pos],
        "odd_pos": [_wjson(a) for a in R.odd_pos],
        "even_bar_pos": [_wjson(a) for a in R.even_bar_pos],
        "rho": _wjson(R.rho),
        "rho0": _wjson(R.rho0),
        "rho1": _wjson(R.rho1),
        "fundamental": [_wjson(a) for a in R.fundamental],
    }
    if cfg.json:
        return data, EXIT_OK
    lines = [f"{k}: " + (" ".join(f"({','.join(v)})" for v in val) if isinstance(val[0], list) else ",".join(val))
             for k, val in data.items() if k != "l"]
    return "\n".join(lines), EXIT_OK


def _weyl(cfg: CliConfig):
    elems = weyl.enumerate_weyl(cfg.l, cfg.cap)
    poly = weyl.poincare_polynomial(cfg.l, cfg.cap)
    data = {"l": cfg.l, "order": len(elems), "poincare": poly}
    if cfg.args.list:
        data["elements"] = [{"w": str(w), "length": w.length, "sign": w.sign} for w in elems]
    if cfg.json:
        return data, EXIT_OK
    lines = [f"|W| = {len(elems)}", f"poincare: {_poly_text(poly)}"]
    for e in data.get("elements", []):
        lines.append(f"{e['w']}  length {e['length']}  sign {e['sign']:+d}")
    return "\n".join(lines), EXIT_OK


def _tau(cfg: CliConfig):
    nu = _weight(cfg.args.nu, cfg.l)
    t = charmult.kostant_tau(cfg.l, nu)
    tb = charmult.super_partition(cfg.l, nu)
    if cfg.json:
        return {"nu": _wjson(nu), "tau": t, "tau_bar": tb}, EXIT_OK
    return f"tau({format_weight(nu)}) = {t}\ntau_bar({format_weight(nu)}) = {tb}", EXIT_OK


def _mult(cfg: CliConfig):
    lam = _weight(cfg.args.lam, cfg.l)
    if cfg.args.mu is not None:
        mu = _weight(cfg.args.mu, cfg.l)
        m = charmult.weight_multiplicity(lam, mu)
        if cfg.json:
            return {"lambda": _wjson(lam), "mu": _wjson(mu), "mult": m}, EXIT_OK
        return f"dim V({format_weight(lam)})_({format_weight(mu)}) = {m}", EXIT_OK
    table = charmult.full_table(lam)
    items = charmult.GroupRingElement(table.entries).sorted_items()
    if cfg.json:
        return {
            "lambda": _wjson(lam),
            "dimension": table.dimension(),
            "weights": [{"mu": _wjson(mu), "mult": m} for mu, m in items],
        }, EXIT_OK
    lines = [f"dim V({format_weight(lam)}) = {table.dimension()}"]
    lines += [f"({format_weight(mu)}): {m}" for mu, m in items]
    return "\n".join(lines), EXIT_OK


def _poly_text(p) -> str:
    terms = [("" if c == 1 and i else str(c)) + (f"q^{i}" if i else "") for i, c in enumerate(p) if c]
    return " + ".join(terms) or "0"


def _hesselink(cfg: CliConfig):
    lam = _weight(cfg.args.lam, cfg.l)
    n = cfg.args.order
    if n < 0:
        raise DomainError(f"order {n} must be >= 0")
    if n > oracle.MAX_ORDER:
        raise ResourceCapError(f"order {n} exceeds limit {oracle.MAX_ORDER}")
    method = cfg.args.method
    data = {"lambda": _wjson(lam), "order": n}
    if method in ("direct", "both"):
        data["direct"] = charmult.hesselink_series(lam, n, cfg.cap)
    if method in ("alt", "both"):
        data["alt"] = charmult.hesselink_series_alt(lam, n, cfg.cap)
    if method == "both":
        data["agree"] = data["direct"] == data["alt"]
    code = EXIT_VERIFY if data.get("agree") is False else EXIT_OK
    if cfg.json:
        return data, code
    lines = [f"{k}: {_poly_text(data[k])}" for k in ("direct", "alt") if k in data]
    if "agree" in data:
        lines.append(f"agree: {str(data['agree']).lower()}")
    return "\n".join(lines), code


def _shapovalov(cfg: CliConfig):
    nu = _weight(cfg.args.nu, cfg.l)
    d = determinants.shapovalov_factorization(cfg.l, nu)
    return (d.to_json() if cfg.json else d.render()), EXIT_OK


def _prv(cfg: CliConfig):
    lam = _weight(cfg.args.lam, cfg.l)
    d = determinants.prv_factorization(lam)
    if cfg.json:
        data = d.to_json()
        data["degree"] = d.degree()
        data["degree_bound"] = determinants.prv_degree_bound(lam)
        return data, EXIT_OK
    return d.render(), EXIT_OK


def _annihilator(cfg: CliConfig):
    lam = _weight(cfg.args.lam, cfg.l)
    R = build_root_system(cfg.l)
    ok = oracle.annihilator_centrally_generated(lam)
    data = {
        "lambda": _wjson(lam),
        "lambda_plus_rho": _wjson(lam + R.rho),
        "centrally_generated": ok,
        "verma_simple": verma_is_simple(lam),
        "dominant": is_dominant(lam),
        "delta_lambda": [{"root": _wjson(a), "m": m} for a, m in delta_lambda(lam)],
    }
    if cfg.l == 1:
        data["ann_in_H"] = oracle.l1_annihilator_in_H(lam)
    if cfg.json:
        return data, EXIT_OK
    verdict = "centrally generated" if ok else "not centrally generated"
    return f"Ann M({format_weight(lam)}) is {verdict} (lambda+rho = {format_weight(lam + R.rho)})", EXIT_OK


def _verify(cfg: CliConfig):
    report = oracle.verify_suite(cfg.l, cfg.args.depth, cfg.args.order, cfg.cap)
    code = EXIT_OK if report.all_pass else EXIT_VERIFY
    if cfg.json:
        return report.to_json(), code
    lines = report.lines() + [f"allPass: {str(report.all_pass).lower()}"]
    return "\n".join(lines), code


def _heslem(cfg: CliConfig):
    rows = []
    for r in range(2 * cfg.l):
        gamma, w = weyl.heslem_data(cfg.l, r)
        rows.append({"r": r, "gamma": _wjson(gamma), "w": str(w), "word": weyl.heslem_word(cfg.l, r), "sign": w.sign})
    if cfg.json:
        return {"l": cfg.l, "rows": rows}, EXIT_OK
    lines = [f"r={x['r']}  gamma=({','.join(x['gamma'])})  w={x['w']}  word={x['word']}  sign {x['sign']:+d}" for x in rows]
    return "\n".join(lines), EXIT_OK


COMMANDS = {
    "roots": _roots,
    "weyl": _weyl,
    "tau": _tau,
    "mult": _mult,
    "hesselink": _hesselink,
    "shapovalov": _shapovalov,
    "prv": _prv,
    "annihilator": _annihilator,
    "verify": _verify,
    "heslem": _heslem,
}


_WEIGHT_OPTIONS = ("--lambda", "--nu", "--mu")


def _glue_negative_weights(argv):
    # argparse reads "-1/2" as an option flag; attach such values to their option
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _WEIGHT_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def run_cli(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = _glue_negative_weights(list(sys.argv[1:] if argv is None else argv))
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except DomainError as exc:  # a malformed integer option
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    cfg = CliConfig(ns.command, ns.l, ns.json, ns.weyl_cap, ns)
    try:
        if cfg.l < 1:
            raise DomainError(f"invalid rank l={cfg.l}; need l >= 1")
        result, code = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=err)
        return EXIT_CAP
    except DomainError as exc:
        where = f" (weight {format_weight(exc.weight)})" if exc.weight is not None else ""
        print(f"domain error: {exc}{where}", file=err)
        return EXIT_DOMAIN
    except OspError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    print(_dump(result) if cfg.json else result, file=out)
    return code


def main():
    sys.exit(run_cli())
