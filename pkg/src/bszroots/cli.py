"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field, fields
from fractions import Fraction

from .bszcore import (
    BszParams,
    NotDeepError,
    build_P,
    exact_pairing_P_m,
    exact_pairing_P_P,
    monic_p,
    normalization_constant,
)
from .rootsys import SUPPORTED, UnsupportedRootSystem, build_root_system, to_simple_root_coords
from .symalg import SymmetricPolynomial
from .univariate import ClassicParams, classic_norm, classic_norm_constant, classic_p
from .weightlat import DEFAULT_CAP, EnumerationCapExceeded, is_dominant, lambda_tilde
from .weylgrp import poincare_enumerated, poincare_product, weyl_group

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3
FORMATS = ("json", "csv", "plain")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    system: str | None = None
    weight: str | None = None
    mu: str | None = None
    ts: str = ""
    tl: str = ""
    grid: int | None = None
    bound: int | None = None
    format: str = "json"
    seed: int = 0
    cap: int = DEFAULT_CAP
    suite: str = "all"
    threshold: float = 1e-6
    mode: str = "dominance"
    monic: bool = False


@dataclass
class Output:
    payload: object
    rows: list = field(default_factory=list)
    code: int = EXIT_OK


# -- parsing -----------------------------------------------------------------

def parse_rationals(text: str) -> tuple[Fraction, ...]:
    text = (text or "").strip().strip("[]")
    if not text:
        return ()
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rational list {text!r}: {exc}") from None


def parse_weight(text: str | None, rank: int | None = None) -> tuple[int, ...]:
    if text is None:
        raise UsageError("--weight is required")
    body = text.strip().strip("[]")
    try:
        lam = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}; expected integers like 2,1") from None
    if rank is not None and len(lam) != rank:
        raise UsageError(f"weight {text!r} has {len(lam)} coordinates, system has rank {rank}")
    return lam


def read_config_file(path: str) -> dict:
    out = {}
    names = {f.name for f in fields(RunConfig)}
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{n}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in names:
                raise UsageError(f"{path}:{n}: unknown key {key!r}")
            out[key] = value
    return out


def _coerce(config: RunConfig, key: str, value):
    kind = type(getattr(RunConfig(), key))
    if key in ("grid", "bound"):
        return int(value)
    if kind is bool:
        return value if isinstance(value, bool) else str(value).lower() in ("1", "true", "yes")
    if kind in (int, float):
        return kind(value)
    return value


def build_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    values = read_config_file(args.config) if getattr(args, "config", None) else {}
    for f in fields(RunConfig):
        flag = getattr(args, f.name, None)
        if flag is not None and flag is not False:
            values[f.name] = flag
    for key, value in values.items():
        try:
            setattr(config, key, _coerce(config, key, value))
        except ValueError:
            raise UsageError(f"bad value for {key}: {value!r}") from None
    if config.format not in FORMATS:
        raise UsageError(f"unknown format {config.format!r}")
    return config


def _system(config: RunConfig):
    if not config.system:
        raise UsageError("--system is required")
    try:
        return build_root_system(config.system)
    except UnsupportedRootSystem as exc:
        raise UsageError(str(exc)) from None


def _params(config: RunConfig, rs) -> BszParams:
    try:
        return BszParams(parse_rationals(config.ts), parse_rationals(config.tl)).check(rs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dominant_weight(config: RunConfig, rs, text=None) -> tuple[int, ...]:
    lam = parse_weight(text if text is not None else config.weight, rs.rank)
    if not is_dominant(lam):
        raise UsageError(f"weight {list(lam)} is not dominant")
    return lam


# -- serialization -----------------------------------------------------------

def wkey(lam) -> str:
    return "[" + ",".join(str(int(x)) for x in lam) + "]"


def _sorted_terms(rs, lam, expansion) -> list:
    def key(mu):
        return (sum(to_simple_root_coords(rs, [a - b for a, b in zip(lam, mu)])), tuple(mu))
    return sorted(expansion.keys(), key=key)


def serialize_expansion(rs, lam, expansion) -> dict:
    """Rational strings keyed by weight, ordered by height below ``lam`` then lexicographically."""
    return {wkey(mu): str(expansion[mu]) for mu in _sorted_terms(rs, lam, expansion)}


def parse_expansion(data: dict) -> SymmetricPolynomial:
    return SymmetricPolynomial({parse_weight(k): Fraction(v) for k, v in data.items()})


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.payload, indent=2) + "\n"
    rows = out.rows or ([out.payload] if isinstance(out.payload, dict) else [])
    if not rows:
        return ""
    cols = list(rows[0].keys())
    for r in rows[1:]:
        cols += [c for c in r if c not in cols]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(v) for k, v in r.items()})
        return buf.getvalue()
    table = [cols] + [[_cell(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    return "".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n"
                   for row in table)


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return wkey(v) if all(isinstance(x, int) for x in v) else json.dumps(v)
    if isinstance(v, dict):
        return json.dumps(v)
    return str(v)


# -- commands ----------------------------------------------------------------

def cmd_list_systems(config: RunConfig) -> Output:
    rows = []
    for name in SUPPORTED:
        rs = build_root_system(name)
        rows.append({"system": name, "rank": rs.rank, "positive_roots": len(rs.positive_roots),
                     "weyl_order": rs.weyl_order, "simply_laced": rs.simply_laced})
    return Output(rows, rows)


def cmd_roots(config: RunConfig) -> Output:
    rs = _system(config)
    roots = [{"fw": list(a.fw_coords), "sr": list(a.sr_coords), "long": a.is_long,
              "coroot": list(a.coroot), "height": a.height} for a in rs.positive_roots]
    payload = {"system": rs.name, "rank": rs.rank, "cartan": [list(r) for r in rs.cartan],
               "symmetrizer": list(rs.symmetrizer), "rho": list(rs.rho),
               "rho_s": list(rs.rho_s), "rho_l": list(rs.rho_l),
               "weyl_order": rs.weyl_order, "positive_roots": roots}
    return Output(payload, roots)


def _scalar(text: str, name: str, default=None) -> Fraction:
    vals = parse_rationals(text)
    if not vals:
        if default is None:
            raise UsageError(f"--{name} needs one rational value for the Poincare series")
        return default
    if len(vals) != 1:
        raise UsageError(f"--{name} takes a single value here")
    return vals[0]


def cmd_weyl(config: RunConfig) -> Output:
    rs = _system(config)
    W = weyl_group(rs)
    elements = [{"index": i, "matrix": [list(r) for r in w.matrix], "sign": w.sign,
                 "len_s": w.len_s, "len_l": w.len_l} for i, w in enumerate(W)]
    payload = {"system": rs.name, "order": len(W), "elements": elements}
    if config.weight is not None:
        lam = _dominant_weight(config, rs)
        ts = _scalar(config.ts, "ts")
        tl = _scalar(config.tl, "tl", Fraction(0) if rs.simply_laced else None)
        stab = W.stabilizer(lam)
        payload["stabilizer"] = {"weight": wkey(lam), "order": len(stab), "ts": str(ts),
                                 "tl": str(tl),
                                 "poincare_enumerated": str(poincare_enumerated(stab, ts, tl)),
                                 "poincare_product": str(poincare_product(rs, lam, ts, tl))}
    return Output(payload, elements)


def cmd_expand(config: RunConfig) -> Output:
    rs = _system(config)
    params = _params(config, rs)
    lam = _dominant_weight(config, rs)
    P = build_P(rs, lam, params, config.cap)
    if config.monic:
        P = monic_p(rs, lam, params, config.cap)
    payload = {"system": rs.name, "weight": wkey(lam),
               "ts": [str(t) for t in params.ts], "tl": [str(t) for t in params.tl],
               "deep": P.deep, "monic": P.monic,
               "characters": serialize_expansion(rs, lam, P.char_exp),
               "monomials": serialize_expansion(rs, lam, P.mono_exp),
               "norm": str(P.norm_const) if P.norm_const is not None else None}
    rows = [{"basis": "chi", "weight": k, "coefficient": v} for k, v in payload["characters"].items()]
    rows += [{"basis": "m", "weight": k, "coefficient": v} for k, v in payload["monomials"].items()]
    return Output(payload, rows)


def cmd_norm(config: RunConfig) -> Output:
    rs = _system(config)
    params = _params(config, rs)
    lam = _dominant_weight(config, rs)
    try:
        N = normalization_constant(rs, lam, params)
    except NotDeepError as exc:
        raise UsageError(str(exc)) from None
    tilde = lambda_tilde(rs, lam, params.Ms, params.Ml)
    enum = poincare_enumerated(weyl_group(rs).stabilizer(tilde), params.bold_ts, params.bold_tl)
    payload = {"system": rs.name, "weight": wkey(lam), "lambda_tilde": wkey(tilde),
               "norm": str(N), "monic_squared_norm": str(1 / N),
               "poincare_enumerated": str(enum)}
    return Output(payload)


def cmd_pair(config: RunConfig) -> Output:
    rs = _system(config)
    params = _params(config, rs)
    lam = _dominant_weight(config, rs)
    if config.mu is None:
        raise UsageError("--mu is required")
    mu = _dominant_weight(config, rs, config.mu)
    payload = {"system": rs.name, "lam": wkey(lam), "mu": wkey(mu),
               "P_m": str(exact_pairing_P_m(rs, lam, mu, params)),
               "P_P": str(exact_pairing_P_P(rs, lam, mu, params, config.cap))}
    return Output(payload)


def cmd_classic(config: RunConfig) -> Output:
    try:
        params = ClassicParams(parse_rationals(config.ts))
        ell = parse_weight(config.weight, 1)[0]
        coeffs = classic_p(ell, params)
        norm_const = classic_norm_constant(ell, params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"ell": ell, "ts": [str(t) for t in params.ts],
               "coefficients": {f"m_{k}": str(c) for k, c in reversed(list(enumerate(coeffs)))},
               "norm_const": str(norm_const), "norm": str(classic_norm(ell, params))}
    rows = [{"monomial": k, "coefficient": v} for k, v in payload["coefficients"].items()]
    return Output(payload, rows)


def cmd_verify(config: RunConfig) -> Output:
    from .suites import SUITES, run_suite

    if config.suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {config.suite!r}; choose from {', '.join(SUITES)}, all")
    if config.system:
        _system(config)
    report = run_suite(config.suite, config.system, seed=config.seed, bound=config.bound,
                       cap=config.cap)
    counts = report.counts()
    code = EXIT_VERIFY if counts["fail"] else EXIT_CAP if counts["skip"] else EXIT_OK
    payload = {"seed": config.seed, **report.to_dict()}
    rows = [{"suite": report.suite, "check": c.name, "system": c.system, "status": c.status}
            for c in report.checks]
    return Output(payload, rows, code)


def _grid(config: RunConfig, rs):
    from .oracle import torus_grid
    try:
        return torus_grid(rs.rank, config.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gram(config: RunConfig) -> Output:
    from .oracle import gram_schmidt_p

    rs = _system(config)
    params = _params(config, rs)
    lam = _dominant_weight(config, rs)
    grid = _grid(config, rs)
    if config.mode not in ("dominance", "linear"):
        raise UsageError(f"unknown mode {config.mode!r}")
    coeffs = gram_schmidt_p(rs, lam, params, grid, mode=config.mode)
    payload = {"system": rs.name, "weight": wkey(lam),
               "ts": [str(t) for t in params.ts], "tl": [str(t) for t in params.tl],
               "numeric": {"grid": grid.points_per_dim, "mode": config.mode,
                           "coefficients": {wkey(mu): coeffs[mu]
                                            for mu in _sorted_terms(rs, lam, coeffs)}}}
    P = build_P(rs, lam, params, config.cap)
    if P.deep:
        exact = monic_p(rs, lam, params, config.cap).mono_exp
        payload["exact"] = serialize_expansion(rs, lam, exact)
        payload["numeric"]["max_deviation"] = max(
            abs(coeffs.get(k, 0.0) - float(exact[k])) for k in set(coeffs) | set(exact.keys()))
    rows = [{"weight": k, "numeric": v, "exact": payload.get("exact", {}).get(k, "")}
            for k, v in payload["numeric"]["coefficients"].items()]
    return Output(payload, rows)


def cmd_scan_shallow(config: RunConfig) -> Output:
    from .oracle import shallow_orthogonality_scan

    rs = _system(config)
    params = _params(config, rs)
    grid = _grid(config, rs)
    bound = 2 if config.bound is None else config.bound
    report = shallow_orthogonality_scan(rs, params, bound, grid, config.threshold)
    d = report.to_dict()
    payload = {"system": d.pop("system"), "ts": d.pop("ts"), "tl": d.pop("tl"),
               "bound": d.pop("bound"), "numeric": d}
    return Output(payload, d["pairs"])


COMMANDS = {
    "list-systems": (cmd_list_systems, "supported root systems"),
    "roots": (cmd_roots, "Cartan data and positive roots"),
    "weyl": (cmd_weyl, "Weyl group element table; Poincare series of a stabilizer with --weight"),
    "expand": (cmd_expand, "expand P_lam on characters and monomials"),
    "norm": (cmd_norm, "leading coefficient N_lam of a sufficiently deep weight"),
    "pair": (cmd_pair, "exact pairings <P_lam, m_mu> and <P_lam, P_mu>"),
    "classic": (cmd_classic, "one-variable closed form (weight is the degree)"),
    "verify": (cmd_verify, "run verification suites"),
    "gram": (cmd_gram, "numeric Gram-Schmidt polynomial on a torus grid"),
    "scan-shallow": (cmd_scan_shallow, "numeric orthogonality of incomparable shallow pairs"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="key=value file; flags take precedence")
    common.add_argument("--system", help="root system label, e.g. B2")
    common.add_argument("--weight", help="dominant weight in fundamental-weight coordinates, e.g. 2,1")
    common.add_argument("--mu", help="second weight for pair")
    common.add_argument("--ts", help="short-root parameters, e.g. 1/2,-1/3")
    common.add_argument("--tl", help="long-root parameters")
    common.add_argument("--grid", type=int, help="grid points per dimension")
    common.add_argument("--bound", type=int, help="coordinate bound for weight ranges")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--seed", type=int, help="seed for parameter draws")
    common.add_argument("--cap", type=int, help="enumeration cap")
    common.add_argument("--suite", help="lattice|theorems|poincare|classic|oracle|all")
    common.add_argument("--threshold", type=float, help="significance threshold for scan-shallow")
    common.add_argument("--mode", help="dominance|linear (gram)")
    common.add_argument("--monic", action="store_true", help="divide by N_lam (expand)")
    parser = _Parser(prog="bszroots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, (_, text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


_VALUE_FLAGS = ("--ts", "--tl", "--weight", "--mu")


def _glue_negative_values(argv: list) -> list:
    """Let ``--tl -1/2,1/4`` through; argparse would read the value as an option."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _VALUE_FLAGS and nxt[:1] == "-" and nxt[1:2].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = make_parser().parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required (see --help)")
        config = build_config(args)
        out = COMMANDS[args.command][0](config)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(render(out, config.format))
    return out.code


if __name__ == "__main__":
    sys.exit(main())
