"""Command-line entry point: ``cosetlab {xi,verify,svg,series}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .burnside import BurnsideElement, ring
from .chambers import (
    choose_rho,
    colored_f_character,
    positive_complex,
    shelling_order,
    shelling_types,
    chamber_ascent_character,
)
from .coxgroup import GroupSymbol, build_group
from .cosetposet import build_coset_poset, flag_h, h_vector
from .errors import CosetLabError, SizeCap
from .symfunc import SymFunc

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

DEFAULTS = {
    "group": "A3",
    "rho_mode": "seed",
    "rho_seed": 0,
    "rho": None,
    "order": 6,
    "format": "json",
    "out": None,
    "cap": None,
    "seeds": 3,
}
INT_KEYS = {"rho_seed", "order", "cap", "seeds"}


class UsageError(Exception):
    pass


# -- rendering helpers ------------------------------------------------------
def _label_key(group, label: int) -> str:
    if group.symbol.family == "A":
        from .typea import label_shape

        return "(" + ",".join(map(str, label_shape(group, label))) + ")"
    return hex(label)


def burnside_payload(group, b: BurnsideElement) -> dict:
    return {_label_key(group, k): v for k, v in b.items()}


def symfunc_payload(f: SymFunc) -> dict:
    return {"(" + ",".join(map(str, k)) + ")": _num(v) for k, v in f.coeffs.items()}


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


class Report:
    def __init__(self, config: dict):
        self.config = config
        self.results: list[dict] = []
        self.failed = False

    def add(self, name: str, kind: str, payload):
        self.results.append({"name": name, "kind": kind, "payload": payload})

    def check(self, name: str, ok: bool, detail=None):
        self.failed |= not ok
        payload = {"pass": bool(ok)}
        if detail is not None:
            payload["detail"] = detail
        self.add(name, "check", payload)

    def document(self) -> dict:
        return {"version": SCHEMA_VERSION, "tool": __version__, "config": self.config, "results": self.results}

    def render(self, fmt: str) -> str:
        doc = self.document()
        if fmt == "json":
            return json.dumps(doc, sort_keys=True, indent=2) + "\n"
        rows = []
        for r in self.results:
            p = r["payload"]
            if isinstance(p, dict):
                for k in sorted(p):
                    rows.append((r["name"], r["kind"], k, json.dumps(p[k], sort_keys=True)))
            else:
                rows.append((r["name"], r["kind"], "", json.dumps(p, sort_keys=True)))
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["name", "kind", "key", "value"])
            w.writerows(rows)
            return buf.getvalue()
        lines = [f"cosetlab {__version__}  " + " ".join(f"{k}={v}" for k, v in sorted(self.config.items()))]
        for name, kind, key, value in rows:
            lines.append(f"{name:<28} {key:<14} {value}")
        return "\n".join(lines) + "\n"


# -- configuration ----------------------------------------------------------
def read_config_file(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            k, v = (s.strip() for s in line.split("=", 1))
            k = k.replace("-", "_")
            if k not in DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {k!r}")
            out[k] = v
    return out


def resolve_config(args: argparse.Namespace) -> dict:
    file_cfg = read_config_file(args.config) if args.config else {}
    cfg = {}
    for k, default in DEFAULTS.items():
        v = getattr(args, k, None)
        if v is None:
            v = file_cfg.get(k, default)
        if k in INT_KEYS and v is not None:
            try:
                v = int(v)
            except ValueError:
                raise UsageError(f"{k} must be an integer") from None
        cfg[k] = v
    if cfg["cap"] is None and os.environ.get("COSETLAB_CAP"):
        cfg["cap"] = int(os.environ["COSETLAB_CAP"])
    if cfg["format"] not in ("json", "csv", "text"):
        raise UsageError(f"unknown format {cfg['format']!r}")
    if cfg["rho_mode"] not in ("seed", "spread", "user"):
        raise UsageError(f"unknown rho mode {cfg['rho_mode']!r}")
    return cfg


def _group(cfg):
    try:
        sym = GroupSymbol.parse(cfg["group"])
    except CosetLabError as e:
        raise UsageError(str(e)) from None
    return build_group(sym, cfg["cap"])


def _rho(group, cfg, seed=None):
    mode = cfg["rho_mode"]
    if mode == "user":
        if not cfg["rho"]:
            raise UsageError("--rho is required with --rho-mode user")
        try:
            coeffs = [Fraction(s) for s in str(cfg["rho"]).split(",")]
        except ValueError:
            raise UsageError(f"cannot parse --rho {cfg['rho']!r}") from None
        try:
            return choose_rho(group, "user", coeffs=coeffs)
        except ValueError as e:
            raise UsageError(str(e)) from None
    if mode == "spread" and group.symbol.family != "A":
        raise UsageError("spread mode needs a type A group")
    return choose_rho(group, mode, seed=cfg["rho_seed"] if seed is None else seed)


def _rho_list(group, cfg):
    if cfg["rho_mode"] == "seed":
        return [_rho(group, cfg, cfg["rho_seed"] + k) for k in range(cfg["seeds"])]
    return [_rho(group, cfg)]


# -- commands ---------------------------------------------------------------
def cmd_xi(cfg: dict) -> Report:
    g = _group(cfg)
    rg = ring(g)
    rep = Report(cfg)
    xi = rg.xi()
    xs = rg.tensor_sign(xi)
    triv, sgn, dim = rg.multiplicities(xi)
    rep.add("xi", "burnside", burnside_payload(g, xi))
    rep.add("xi_tensor_sign", "burnside", burnside_payload(g, xs))
    rep.add("dimensions", "scalars", {
        "dim": dim,
        "order": g.order,
        "mu": rg.lattice.mobius_to_top(rg.lattice.bottom),
        "sign_coefficient_sum": sum(xs.coeffs.values()),
    })
    rep.add("multiplicities", "scalars", {"trivial": triv, "sign": sgn})
    if g.symbol.family == "A":
        from .typea import frobenius

        f = frobenius(g, xi)
        rep.add("frobenius_H", "symfunc", symfunc_payload(f))
        rep.add("frobenius_E", "symfunc", symfunc_payload(f.to("E")))
        rep.add("frobenius_S", "symfunc", symfunc_payload(f.to("S")))
    return rep


def cmd_verify(cfg: dict) -> Report:
    g = _group(cfg)
    rg = ring(g)
    lat = rg.lattice
    rep = Report(cfg)
    xi = rg.xi()
    xs = rg.tensor_sign(xi)
    mu = lat.mobius_to_top(lat.bottom)
    n = g.rank

    try:
        poset = build_coset_poset(g)
    except SizeCap as e:
        poset = None
        rep.add("coset_poset", "skipped", {"reason": str(e)})
    if poset is not None:
        bad = [
            repr(w) for w in rg.class_representatives()
            if (-1) ** (n - 1) * poset.lefschetz_character(w) != rg.char_value(xi, w)
        ]
        rep.check("theorem2_lefschetz", not bad, {"failing_classes": bad} if bad else None)
        flag = poset.flag_h_vector()
        fh = flag_h(g)
        ok = all(rg.dim(fh[R]) == v for R, v in flag.items())
        rep.check("rank_selected_h", ok)
        rep.add("h_vector", "vector", h_vector(g))
        rep.add("maximal_chains", "scalar", poset.count_maximal_chains())

    triv, sgn, _ = rg.multiplicities(xi)
    sign_ip = rg.inner_product(rg.class_function(xi), rg.sign_function())
    rep.check("multiplicity", triv == 0 and sgn == (-1) ** n * mu and sign_ip == sgn,
              {"trivial": triv, "sign": sgn})

    counts = set()
    for gv in _rho_list(g, cfg):
        tag = f"seed{gv.seed}" if gv.mode == "seed" else gv.mode
        cx = positive_complex(g, gv)
        counts.add(len(cx.facets))
        rep.check(f"colored_f_vector[{tag}]", colored_f_character(cx) == xi)
        if gv.in_F:
            sh = shelling_order(cx)
            rep.check(f"shelling[{tag}]", True, {"facets": len(sh.order), "pairs": sh.checked_pairs})
            rep.check(f"shelling_types[{tag}]", shelling_types(cx, sh) == xs)
            asc = chamber_ascent_character(g, gv, "positive")
            desc = chamber_ascent_character(g, gv, "negative")
            rep.check(f"ascent_descent_sums[{tag}]", asc == xs and desc == xs and xs.is_nonnegative())
        f, h = cx.f_vector(), cx.h_vector()
        rep.add(f"f_h_vectors[{tag}]", "vectors", {"f": f, "h": h})
    rep.check("facet_counts", counts == {abs(mu)}, {"counts": sorted(counts), "mu": mu})
    return rep


def cmd_series(cfg: dict) -> Report:
    from .typea import DESCENT_MAX, XI_SERIES_MAX, bessel_dims, descent_pair_count, xi_series, xi_symfunc

    N = cfg["order"]
    if N < 1:
        raise UsageError("series order must be at least 1")
    rep = Report(cfg)
    D, Dp = bessel_dims(N)
    rep.add("D", "sequence", D)
    rep.add("D_prime", "sequence", Dp)
    m = min(N, DESCENT_MAX)
    rep.check("D_descent_pairs", [descent_pair_count(k, True) for k in range(1, m + 1)] == D[:m])
    rep.check("D_prime_descent_pairs", [descent_pair_count(k, False) for k in range(m + 1)] == Dp[: m + 1])
    M = min(N, XI_SERIES_MAX)
    xis = xi_series(M)
    for k, f in enumerate(xis, 1):
        rep.add(f"xi_{k}", "symfunc", symfunc_payload(f))
    rep.check("xi_dims", [int(f.dim()) for f in xis] == D[:M])
    lim = min(M, 6)
    rep.check("xi_series_vs_lattice", all(xis[k - 1] == xi_symfunc(k) for k in range(1, lim + 1)))
    return rep


def cmd_svg(cfg: dict) -> str:
    from .svg import render

    g = _group(cfg)
    if g.rank != 3:
        raise UsageError("svg needs a rank-3 group (A3 or B3)")
    return render(g, _rho(g, cfg))


# -- argument parsing -------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="Coxeter type, e.g. A3, B3, G2, F4")
    common.add_argument("--rho-mode", dest="rho_mode", choices=("seed", "spread", "user"))
    common.add_argument("--rho-seed", dest="rho_seed", type=int)
    common.add_argument("--rho", help="comma-separated rationals in the fundamental-weight basis")
    common.add_argument("-n", "--order", type=int, help="series truncation order")
    common.add_argument("--format", choices=("json", "csv", "text"))
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--cap", type=int, help="maximum group order (env COSETLAB_CAP)")
    common.add_argument("--seeds", type=int, help="number of seeds for verification")
    common.add_argument("--config", help="key=value configuration file; flags override it")

    p = argparse.ArgumentParser(prog="cosetlab", description=__doc__)
    p.add_argument("--version", action="version", version=f"cosetlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("xi", parents=[common], help="the top homology character and its expansions")
    sub.add_parser("verify", parents=[common], help="run the identity checks for one group")
    sub.add_parser("svg", parents=[common], help="draw the positive chamber complex (rank 3)")
    sub.add_parser("series", parents=[common], help="type A generating series and dimension tables")
    return p


def _write(text: str, path: str | None):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        cfg = resolve_config(args)
        if args.command == "svg":
            _write(cmd_svg(cfg), cfg["out"])
            return EXIT_OK
        rep = {"xi": cmd_xi, "verify": cmd_verify, "series": cmd_series}[args.command](cfg)
        _write(rep.render(cfg["format"]), cfg["out"])
        return EXIT_FAIL if rep.failed else EXIT_OK
    except SizeCap as e:
        print(f"cosetlab: size cap: {e}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, OSError, CosetLabError) as e:
        print(f"cosetlab: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
